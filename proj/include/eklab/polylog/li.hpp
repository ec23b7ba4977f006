#pragma once

#include "eklab/polylog/bernoulli.hpp"

namespace eklab {

// Classical polylogarithm Li_n on the principal branch (cut along [1, inf)).
// Three regimes:
//   |z| <= 1/2          direct power series
//   1/2 < |z| < 2       expansion in log z around 1 (valid for |log z| < 2pi)
//   |z| >= 2            inversion z -> 1/z with a Bernoulli-polynomial term
// On the cut the value is the limit from below (Im z -> 0^-), which is what
// MPFR's signed-zero atan2 conventions produce for exact real input.

namespace li_detail {

inline Complex direct_series(int n, const Complex& z) {
    const Real tol = pow2(-static_cast<long>(precision::working_bits()) - 8);
    Complex term = z; // z^k
    Complex acc = z;  // k = 1
    for (long k = 2;; ++k) {
        term = term * z;
        Complex add = term / pow_si(Real(k), n);
        acc += add;
        if (abs(add) < tol && k > 4) break;
        if (k > 100000) throw DegenerateInput("li direct series failed to converge");
    }
    return acc;
}

// Li_n(z) = sum_{k >= 0, k != n-1} zeta(n-k) mu^k / k!
//         + mu^{n-1}/(n-1)! (H_{n-1} - log(-mu)),   mu = log z
inline Complex log_series(int n, const Complex& z) {
    Complex mu = log(z);
    if (mu.is_zero()) {
        if (n == 1) throw DegenerateInput("Li_1(1)");
        return Complex(zeta_positive(n));
    }
    const Real tol = pow2(-static_cast<long>(precision::working_bits()) - 8);
    Complex acc(0L);
    Complex mu_pow(1L); // mu^k / k!
    int small_streak = 0; // consecutive small nonzero-zeta terms
    for (long k = 0;; ++k) {
        if (k > 0) mu_pow = mu_pow * mu / Real(k);
        if (k == n - 1) {
            acc += mu_pow * (Complex(harmonic_number(n - 1)) - log(-mu));
            continue;
        }
        long s = n - static_cast<long>(k);
        if (s < 2 && s != 1 && zeta_nonpositive_exact(s) == 0) continue; // zeta(-even) = 0
        Complex term = (s >= 2) ? mu_pow * zeta_positive(s) : mu_pow * to_real(zeta_nonpositive_exact(s));
        acc += term;
        // the term magnitudes decay like (|mu|/2pi)^k once k is past n;
        // require two consecutive small terms before stopping
        if (k > n + 6) {
            small_streak = (abs(term) < tol) ? small_streak + 1 : 0;
            if (small_streak >= 2) break;
        }
        if (k > 4000) throw DegenerateInput("li log series failed to converge");
    }
    return acc;
}

// Bernoulli polynomial B_n(x) with complex argument
inline Complex bernoulli_poly(int n, const Complex& x) {
    Complex acc(0L);
    Rational binom(1);
    Complex x_pow(1L);
    // sum_{k=0}^{n} C(n,k) B_{n-k} x^k
    for (int k = 0; k <= n; ++k) {
        Rational b = BernoulliTable::number(static_cast<std::size_t>(n - k));
        if (b != 0) acc += to_real(binom * b) * x_pow;
        binom *= Rational(n - k);
        binom /= Rational(k + 1);
        x_pow = x_pow * x;
    }
    return acc;
}

inline Complex inversion(int n, const Complex& z) {
    // Li_n(z) + (-1)^n Li_n(1/z) = -(2 pi i)^n / n!  B_n(1/2 + log(-z)/(2 pi i))
    Complex inv = direct_series(n, Complex(1L) / z);
    Complex two_pi_i(Real(0L), Real(2L) * Real::pi());
    Complex u = Complex(Real(1L) / Real(2L)) + log(-z) / two_pi_i;
    Complex rhs = -pow_si(two_pi_i, n) * bernoulli_poly(n, u);
    Rational fact(1);
    for (int i = 2; i <= n; ++i) fact *= Rational(i);
    rhs = rhs * to_real(Rational(1) / fact);
    Complex term = (n % 2 == 0) ? -inv : inv;
    return term + rhs;
}

} // namespace li_detail

// on_cut, when supplied, reports that z lay on [1, inf) and the limit from
// below was taken.
inline Complex li_n(int n, Complex z, bool* on_cut = nullptr) {
    if (n < 1) throw DegenerateInput("li_n: weight must be >= 1");
    if (on_cut) *on_cut = false;
    if (z.is_zero()) return Complex(0L);
    if (z.im.is_zero() && z.re >= Real(1L)) {
        // pin the signed zero so every branch below sees Im z -> 0^-
        mpfr_set_zero(z.im.raw(), -1);
        if (on_cut) *on_cut = true;
    }
    if (n == 1) {
        Complex omz = Complex(1L) - z;
        if (omz.is_zero()) throw DegenerateInput("Li_1(1)");
        return -log(omz);
    }
    Real a = abs(z);
    if (a <= Real(0.5)) return li_detail::direct_series(n, z);
    if (a >= Real(2.0)) return li_detail::inversion(n, z);
    return li_detail::log_series(n, z);
}

} // namespace eklab
