#pragma once

#include <array>

#include "eklab/polylog/li.hpp"

namespace eklab {

// Single-valued polylogarithm
//   L_n(z) = Re/Im  sum_{k=0}^{n-1} beta_k log^k|z| Li_{n-k}(z)
// (Re for n odd, Im for n even), continuous across the cut [1, inf).
// The k = n closure term of the defining sum contributes nothing under the
// parity projection (it is real for n even, and beta_n = 0 for odd n >= 3),
// so the code stops at k = n-1; for n = 2 this is exactly Bloch-Wigner.
//
// Values at 0 and 1 are excluded; with allow_limits the limit value is
// returned instead (0 at z = 0; zeta(n) resp. 0 at z = 1).
inline Real sv_polylog(int n, const Complex& z, bool allow_limits = false) {
    if (n < 2) throw DegenerateInput("sv_polylog: weight must be >= 2");
    const bool odd = (n % 2 == 1);
    if (z.is_zero()) {
        if (allow_limits) return Real(0L);
        throw DegenerateInput("sv_polylog at z = 0");
    }
    if (z.im.is_zero() && z.re == Real(1L)) {
        if (allow_limits) return odd ? zeta_positive(n) : Real(0L);
        throw DegenerateInput("sv_polylog at z = 1");
    }
    // conjugation symmetry forces L_n(real) = 0 for even n; return the
    // exact zero rather than the rounded cancellation
    if (!odd && z.im.is_zero()) return Real(0L);
    Real la = log(abs(z));
    Real la_pow(1L);
    Complex acc(0L);
    for (int k = 0; k <= n - 1; ++k) {
        Rational beta = beta_coefficient(static_cast<std::size_t>(k));
        if (beta != 0) acc += to_real(beta) * la_pow * li_n(n - k, z);
        la_pow *= la;
    }
    return odd ? acc.re : acc.im;
}

// hat L_n: L_n for n odd, i L_n for n even.
inline Complex sv_polylog_hat(int n, const Complex& z, bool allow_limits = false) {
    Real v = sv_polylog(n, z, allow_limits);
    if (n % 2 == 1) return Complex(std::move(v));
    return Complex(Real(0L), std::move(v));
}

// complex cross-ratio with the global convention
inline Complex cross_ratio_c(const Complex& x1, const Complex& x2, const Complex& x3, const Complex& x4) {
    Complex num = (x1 - x3) * (x2 - x4);
    Complex den = (x1 - x4) * (x2 - x3);
    if (den.is_zero()) throw DegenerateInput("complex cross-ratio: repeated points");
    return num / den;
}

// | sum_i (-1)^i L_2( r(z_1,...,hat z_i,...,z_5) ) |
inline Real five_term_numeric(const std::array<Complex, 5>& z) {
    Real acc(0L);
    for (int skip = 0; skip < 5; ++skip) {
        const Complex* q[4];
        int k = 0;
        for (int i = 0; i < 5; ++i)
            if (i != skip) q[k++] = &z[i];
        Complex r = cross_ratio_c(*q[0], *q[1], *q[2], *q[3]);
        Real v = sv_polylog(2, r);
        if (skip % 2 == 0)
            acc -= v;
        else
            acc += v;
    }
    return abs(acc);
}

} // namespace eklab
