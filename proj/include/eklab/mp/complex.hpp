#pragma once

#include "eklab/mp/real.hpp"

namespace eklab {

// Rectangular complex value over Real. Principal branches throughout:
// log uses arg in (-pi, pi], computed by atan2.
struct Complex {
    Real re, im;

    Complex() = default;
    Complex(Real r) : re(std::move(r)), im(0L) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(long r) : re(r), im(0L) {}
    Complex(double r) : re(r), im(0L) {}
    Complex(double r, double i) : re(r), im(i) {}

    static Complex i_unit() { return Complex(Real(0L), Real(1L)); }

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    Complex operator-() const { return {-re, -im}; }

    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator*(const Complex& a, const Real& b) { return {a.re * b, a.im * b}; }
    friend Complex operator*(const Real& b, const Complex& a) { return a * b; }
    friend Complex operator*(const Complex& a, long b) { return {a.re * b, a.im * b}; }
    friend Complex operator*(long b, const Complex& a) { return a * b; }

    friend Complex operator/(const Complex& a, const Real& b) { return {a.re / b, a.im / b}; }
    friend Complex operator/(const Complex& a, long b) { return {a.re / b, a.im / b}; }
    friend Complex operator/(const Complex& a, const Complex& b) {
        Real d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }

    Complex& operator+=(const Complex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Complex& operator-=(const Complex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Complex& operator*=(const Complex& o) { return *this = *this * o; }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
};

inline Complex conj(const Complex& z) { return {z.re, -z.im}; }
inline Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
inline Real abs(const Complex& z) {
    Real r;
    mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), MPFR_RNDN);
    return r;
}
inline Real arg(const Complex& z) { return atan2(z.im, z.re); }

inline Complex exp(const Complex& z) {
    Real m = exp(z.re);
    Real s, c;
    sin_cos(s, c, z.im);
    return {m * c, m * s};
}

// Principal log; z must be nonzero.
inline Complex log(const Complex& z) { return {log(abs(z)), arg(z)}; }

inline Complex sqrt(const Complex& z) {
    // principal square root via polar form
    Real r = abs(z);
    if (r.is_zero()) return Complex(0L);
    Real a = arg(z) / 2L;
    Real m = sqrt(r);
    Real s, c;
    sin_cos(s, c, a);
    return {m * c, m * s};
}

inline Complex pow_si(const Complex& z, long n) {
    if (n == 0) return Complex(1L);
    Complex base = n > 0 ? z : Complex(1L) / z;
    unsigned long k = static_cast<unsigned long>(n > 0 ? n : -n);
    Complex acc(1L);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

} // namespace eklab
