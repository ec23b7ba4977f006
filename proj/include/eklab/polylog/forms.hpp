#pragma once

#include <functional>
#include <vector>

#include "eklab/polylog/sv.hpp"

namespace eklab {

// Pointwise data of a nonvanishing function on an m-complex-dimensional
// base: its value and logarithmic derivative per coordinate. Real 1-forms
// are evaluated on real tangents, which are complex m-vectors; all form
// values are R-linear in the tangent slots.
struct FnPoint {
    Complex value;
    std::vector<Complex> dlog; // (d f / f) per complex coordinate

    Real log_abs() const {
        if (value.is_zero()) throw DegenerateInput("form evaluation at a zero/pole");
        return log(abs(value));
    }
};

using Tangent = std::vector<Complex>;

inline Complex dlog_pairing(const FnPoint& f, const Tangent& t) {
    Complex acc(0L);
    for (std::size_t j = 0; j < f.dlog.size(); ++j) acc += f.dlog[j] * t[j];
    return acc;
}

inline Real dlog_abs(const FnPoint& f, const Tangent& t) { return dlog_pairing(f, t).re; }
inline Real darg(const FnPoint& f, const Tangent& t) { return dlog_pairing(f, t).im; }

// data of 1 - f from the data of f
inline FnPoint one_minus(const FnPoint& f) {
    FnPoint g;
    g.value = Complex(1L) - f.value;
    if (g.value.is_zero()) throw DegenerateInput("one_minus: f = 1 at the point");
    g.dlog.reserve(f.dlog.size());
    for (const auto& d : f.dlog) g.dlog.push_back(-(f.value * d) / g.value);
    return g;
}

// alpha(f,g) = log|f| dlog|g| - log|g| dlog|f|, antisymmetric in (f,g)
inline Real alpha_form(const FnPoint& f, const FnPoint& g, const Tangent& t) {
    return f.log_abs() * dlog_abs(g, t) - g.log_abs() * dlog_abs(f, t);
}

// weight-3 regulator triple: scalar part on {f}_3
inline Real w3_form_scalar(const FnPoint& f) { return sv_polylog(3, f.value); }

// 1-form part on {f}_2 tensor g:
//   -L_2(f) d arg g + (1/3) log|g| alpha(1-f, f)
inline Real w3_form_one(const FnPoint& f, const FnPoint& g, const Tangent& t) {
    FnPoint omf = one_minus(f);
    return -sv_polylog(2, f.value) * darg(g, t) + (Real(1L) / Real(3L)) * g.log_abs() * alpha_form(omf, f, t);
}

// 2-form part on f1 ^ f2 ^ f3:
//   Alt_3 ( 1/2 log|f1| d arg f2 ^ d arg f3  -  1/6 log|f1| dlog|f2| ^ dlog|f3| )
inline Real w3_form_two(const FnPoint& f1, const FnPoint& f2, const FnPoint& f3, const Tangent& t1,
                        const Tangent& t2) {
    const FnPoint* f[3] = {&f1, &f2, &f3};
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    static const int signs[6] = {1, -1, -1, 1, 1, -1};
    Real acc(0L);
    for (int p = 0; p < 6; ++p) {
        const FnPoint &a = *f[perms[p][0]], &b = *f[perms[p][1]], &c = *f[perms[p][2]];
        Real arg_wedge = darg(b, t1) * darg(c, t2) - darg(b, t2) * darg(c, t1);
        Real abs_wedge = dlog_abs(b, t1) * dlog_abs(c, t2) - dlog_abs(b, t2) * dlog_abs(c, t1);
        Real term = (Real(1L) / Real(2L)) * a.log_abs() * arg_wedge -
                    (Real(1L) / Real(6L)) * a.log_abs() * abs_wedge;
        acc += Real(static_cast<long>(signs[p])) * term;
    }
    return acc;
}

// General one-form on {f}_{n-1} tensor g for n >= 4:
//   hat L_{n-1}(f) d(i arg g)
//   - sum_{k=2}^{n-2} beta_k log^{k-2}|f| log|g| hat L_{n-k}(f) dlog|f|
//   + beta_{n-1} log|g| log^{n-3}|f| alpha(1-f, f)
inline Complex wn_form_one(int n, const FnPoint& f, const FnPoint& g, const Tangent& t) {
    if (n < 4) throw DegenerateInput("wn_form_one: weight must be >= 4");
    Real lf = f.log_abs(), lg = g.log_abs();
    Complex acc = sv_polylog_hat(n - 1, f.value) * Complex(Real(0L), darg(g, t));
    Real lf_pow(1L); // log^{k-2}|f|
    for (int k = 2; k <= n - 2; ++k) {
        Rational beta = beta_coefficient(static_cast<std::size_t>(k));
        if (beta != 0)
            acc -= to_real(beta) * lf_pow * lg * sv_polylog_hat(n - k, f.value) * Complex(dlog_abs(f, t));
        lf_pow *= lf;
    }
    Rational beta_top = beta_coefficient(static_cast<std::size_t>(n - 1));
    if (beta_top != 0) {
        Real lf_nm3 = pow_si(lf, n - 3);
        FnPoint omf = one_minus(f);
        acc += Complex(to_real(beta_top) * lg * lf_nm3 * alpha_form(omf, f, t));
    }
    return acc;
}

// identity-function data at a point of C (f = z, dlog = 1/z)
inline FnPoint identity_point(const Complex& z) {
    FnPoint f;
    f.value = z;
    f.dlog = {Complex(1L) / z};
    return f;
}

// d hat L_n identity: 1-form side evaluated for f = z,
//   hat L_{n-1}(z) d(i arg z)
//   - sum_{k=2}^{n-2} beta_k log^{k-1}|z| hat L_{n-k}(z) dlog|z|
//   + beta_{n-1} log^{n-2}|z| alpha(1-z, z)
inline Complex d_sv_hat_rhs(int n, const Complex& z, const Tangent& t) {
    FnPoint f = identity_point(z);
    Real lz = f.log_abs();
    Complex acc = sv_polylog_hat(n - 1, z) * Complex(Real(0L), darg(f, t));
    Real lz_pow = lz; // log^{k-1}|z|
    for (int k = 2; k <= n - 2; ++k) {
        Rational beta = beta_coefficient(static_cast<std::size_t>(k));
        if (beta != 0) acc -= to_real(beta) * lz_pow * sv_polylog_hat(n - k, z) * Complex(dlog_abs(f, t));
        lz_pow *= lz;
    }
    Rational beta_top = beta_coefficient(static_cast<std::size_t>(n - 1));
    if (beta_top != 0) {
        FnPoint omz = one_minus(f);
        acc += Complex(to_real(beta_top) * pow_si(lz, n - 2) * alpha_form(omz, f, t));
    }
    return acc;
}

// | central finite difference of hat L_n along dir  -  identity 1-form |
inline Real d_sv_identity_residual(int n, const Complex& z, const Complex& dir, const Real& h) {
    Complex step(dir.re * h, dir.im * h);
    Complex plus = sv_polylog_hat(n, z + step);
    Complex minus = sv_polylog_hat(n, z - step);
    Complex fd = (plus - minus) / (Real(2L) * h);
    Complex rhs = d_sv_hat_rhs(n, z, {dir});
    return abs(fd - rhs);
}

// | central finite difference of L_2 along dir  -  RHS of
//   d L_2(f) = -log|1-f| d arg f + log|f| d arg (1-f) |  with f = z
inline Real d_bloch_wigner_residual(const Complex& z, const Complex& dir, const Real& h) {
    Complex step(dir.re * h, dir.im * h);
    Real fd = (sv_polylog(2, z + step) - sv_polylog(2, z - step)) / (Real(2L) * h);
    FnPoint f = identity_point(z);
    FnPoint omf = one_minus(f);
    Real rhs = -omf.log_abs() * darg(f, {dir}) + f.log_abs() * darg(omf, {dir});
    return abs(fd - rhs);
}

// finite-difference exterior derivative of a 2-form given by an evaluator
// eta(point, t1, t2), checked against  -Re( dlog f1 ^ dlog f2 ^ dlog f3 )
// on constant coordinate frames in C^2... the caller supplies both sides;
// this helper just does the FD part:
//   d eta (e_a, e_b, e_c) = D_a eta(e_b, e_c) - D_b eta(e_a, e_c) + D_c eta(e_a, e_b)
template <typename Eta>
Real fd_exterior_derivative_3(Eta&& eta, const std::vector<Complex>& base, const Tangent& ea, const Tangent& eb,
                              const Tangent& ec, const Real& h) {
    auto shift = [&](const Tangent& dir, int sgn) {
        std::vector<Complex> p = base;
        for (std::size_t j = 0; j < p.size(); ++j) {
            p[j] = p[j] + Complex(dir[j].re * h * Real(static_cast<long>(sgn)),
                                  dir[j].im * h * Real(static_cast<long>(sgn)));
        }
        return p;
    };
    auto deriv = [&](const Tangent& dir, const Tangent& t1, const Tangent& t2) -> Real {
        return (eta(shift(dir, 1), t1, t2) - eta(shift(dir, -1), t1, t2)) / (Real(2L) * h);
    };
    return deriv(ea, eb, ec) - deriv(eb, ea, ec) + deriv(ec, ea, eb);
}

// Re/Im part of dlog f1 ^ dlog f2 ^ dlog f3 on three tangents (determinant
// of the pairing matrix); pi_3 = real part.
inline Complex dlog_wedge3(const FnPoint& f1, const FnPoint& f2, const FnPoint& f3, const Tangent& t1,
                           const Tangent& t2, const Tangent& t3) {
    Complex m[3][3];
    const FnPoint* f[3] = {&f1, &f2, &f3};
    const Tangent* t[3] = {&t1, &t2, &t3};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = dlog_pairing(*f[i], *t[j]);
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

} // namespace eklab
