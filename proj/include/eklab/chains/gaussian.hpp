#pragma once

#include "eklab/chains/factored.hpp"

namespace eklab {

// Gaussian integers, just enough for canonical factorization of residues
// in Q[t]/(t^2+1): Euclidean division, gcd, prime splitting. Units i^k are
// torsion and are discarded by the callers.
struct GInt {
    BigInt a, b; // a + b i

    friend GInt operator*(const GInt& x, const GInt& y) { return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a}; }
    friend GInt operator-(const GInt& x, const GInt& y) { return {x.a - y.a, x.b - y.b}; }
    GInt conj() const { return {a, -b}; }
    BigInt norm() const { return a * a + b * b; }
    bool is_zero() const { return a == 0 && b == 0; }
    bool is_unit() const { return norm() == 1; }

    friend bool operator==(const GInt& x, const GInt& y) { return x.a == y.a && x.b == y.b; }
};

namespace gaussian_detail {

inline BigInt round_div(const BigInt& num, const BigInt& den) {
    // nearest integer, ties toward +inf; den > 0 assumed by caller logic
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (2 * r >= den) q += 1;
    return q;
}

inline GInt divmod_nearest(const GInt& x, const GInt& y, GInt& rem) {
    BigInt n = y.norm();
    GInt xy = x * y.conj();
    GInt q{round_div(xy.a, n), round_div(xy.b, n)};
    rem = x - q * y;
    return q;
}

inline GInt gcd(GInt x, GInt y) {
    while (!y.is_zero()) {
        GInt r;
        divmod_nearest(x, y, r);
        x = y;
        y = r;
    }
    return x;
}

inline bool divides(const GInt& d, const GInt& x, GInt& quot) {
    GInt r;
    quot = divmod_nearest(x, d, r);
    return r.is_zero();
}

// canonical associate: of the four unit multiples, the lexicographically
// largest (real part, then imaginary part)
inline GInt canonical_associate(GInt z) {
    GInt best = z;
    GInt cur = z;
    for (int k = 0; k < 3; ++k) {
        cur = cur * GInt{BigInt(0), BigInt(1)};
        if (cur.a > best.a || (cur.a == best.a && cur.b > best.b)) best = cur;
    }
    return best;
}

// square root of -1 mod p for p = 1 mod 4
inline BigInt sqrt_minus_one(const BigInt& p) {
    BigInt e = (p - 1) / 4;
    for (BigInt n = 2;; n += 1) {
        BigInt x;
        mpz_powm(x.get_mpz_t(), n.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        if ((x * x + 1) % p == 0) return x;
    }
}

// Gaussian prime above a split rational prime p = 1 mod 4
inline GInt split_prime(const BigInt& p) {
    BigInt s = sqrt_minus_one(p);
    return canonical_associate(gcd(GInt{p, BigInt(0)}, GInt{s, BigInt(1)}));
}

} // namespace gaussian_detail

// Canonical basis key of a Gaussian prime: stored as the degree-1
// polynomial a + b t (t standing for i), canonical associate.
inline BasisKey gaussian_key(const GInt& g) {
    if (g.b == 0 && g.a > 0) return BasisKey::from_prime(g.a); // inert rational prime
    return BasisKey::from_poly(Poly::from({Rational(g.a), Rational(g.b)}));
}

// Factor a nonzero element of Q(i) = Q[t]/(t^2+1), given as a reduced
// polynomial a + b t with rational coefficients, over canonical Gaussian
// primes (modulo the unit group, which is torsion). Inert primes keep
// their rational-prime key; split/ramified primes get degree-1 poly keys.
inline Factored gaussian_factor(const FactorContext& ctx, const Poly& value) {
    using namespace gaussian_detail;
    if (value.is_zero()) throw DegenerateInput("gaussian_factor: zero");
    Rational ra = value.c.empty() ? Rational(0) : value.c[0];
    Rational rb = value.degree() >= 1 ? value.c[1] : Rational(0);
    // clear denominators: v = (a + b i) / c
    BigInt c;
    mpz_lcm(c.get_mpz_t(), ra.get_den().get_mpz_t(), rb.get_den().get_mpz_t());
    BigInt a = Rational(ra * Rational(c)).get_num();
    BigInt b = Rational(rb * Rational(c)).get_num();

    Factored out;
    auto push_rational_prime = [&](const BigInt& p, long long e) {
        if (p % 4 == 3) {
            out.mul_key(BasisKey::from_prime(p), e);
        } else if (p == 2) {
            out.mul_key(gaussian_key(canonical_associate(GInt{BigInt(1), BigInt(1)})), 2 * e);
        } else {
            GInt pi = split_prime(p);
            out.mul_key(gaussian_key(pi), e);
            out.mul_key(gaussian_key(canonical_associate(pi.conj())), e);
        }
    };

    // denominator
    Factored den = ctx.factor_integer(c);
    for (const auto& [k, e] : den.exp) push_rational_prime(k.prime, -e);

    // numerator a + b i via its norm
    GInt z{a, b};
    if (z.is_zero()) throw DegenerateInput("gaussian_factor: zero numerator");
    Factored nf = ctx.factor_integer(z.norm());
    for (const auto& [k, e] : nf.exp) {
        const BigInt& p = k.prime;
        if (p % 4 == 3) {
            // inert: divides z as p^(e/2)
            long long half = e / 2;
            GInt q;
            for (long long i = 0; i < half; ++i) {
                if (!divides(GInt{p, BigInt(0)}, z, q)) throw DegenerateInput("gaussian_factor: norm inconsistency");
                z = q;
            }
            out.mul_key(BasisKey::from_prime(p), half);
        } else if (p == 2) {
            GInt ram{BigInt(1), BigInt(1)};
            GInt q;
            long long count = 0;
            while (divides(ram, z, q)) {
                z = q;
                ++count;
            }
            out.mul_key(gaussian_key(canonical_associate(ram)), count);
        } else {
            GInt pi = split_prime(p);
            for (GInt factor : {pi, pi.conj()}) {
                GInt q;
                long long count = 0;
                while (divides(factor, z, q)) {
                    z = q;
                    ++count;
                }
                out.mul_key(gaussian_key(canonical_associate(factor)), count);
            }
        }
    }
    if (!z.is_unit()) throw DegenerateInput("gaussian_factor: leftover non-unit");
    return out; // unit i^k is torsion, dropped
}

} // namespace eklab
