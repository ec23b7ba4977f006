#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "eklab/chains/poly.hpp"

namespace eklab {

// Basis irreducible: a rational prime, or a monic irreducible polynomial.
// Total order: primes first (by value), then polynomials (degree, coeffs).
struct BasisKey {
    enum Kind { Prime = 0, Irreducible = 1 } kind;
    BigInt prime;
    Poly poly;

    static BasisKey from_prime(BigInt p) { return {Prime, std::move(p), Poly()}; }
    static BasisKey from_poly(Poly p) { return {Irreducible, BigInt(0), std::move(p)}; }

    friend bool operator<(const BasisKey& a, const BasisKey& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        if (a.kind == Prime) return a.prime < b.prime;
        return a.poly < b.poly;
    }
    friend bool operator==(const BasisKey& a, const BasisKey& b) {
        return a.kind == b.kind && (a.kind == Prime ? a.prime == b.prime : a.poly == b.poly);
    }

    std::string str() const { return kind == Prime ? prime.get_str() : poly.str(); }
};

// Nonzero field element as sign * prod basis^exponent. Over Q the value is
// the rational it denotes; over Q(t) the leading rational coefficient is
// itself carried in the prime part plus the sign.
struct Factored {
    int sign = 1;
    std::map<BasisKey, long long> exp; // no zero entries

    static Factored one() { return {}; }

    bool is_one() const { return sign == 1 && exp.empty(); }

    void mul_key(const BasisKey& k, long long e) {
        if (e == 0) return;
        auto it = exp.find(k);
        if (it == exp.end()) {
            exp.emplace(k, e);
        } else {
            it->second += e;
            if (it->second == 0) exp.erase(it);
        }
    }

    friend Factored operator*(const Factored& a, const Factored& b) {
        Factored r = a;
        r.sign *= b.sign;
        for (const auto& [k, e] : b.exp) r.mul_key(k, e);
        return r;
    }

    Factored inverse() const {
        Factored r;
        r.sign = sign;
        for (const auto& [k, e] : exp) r.exp.emplace(k, -e);
        return r;
    }

    Factored pow(long long n) const {
        Factored r;
        r.sign = (n % 2 == 0) ? 1 : sign;
        if (n != 0)
            for (const auto& [k, e] : exp) r.exp.emplace(k, e * n);
        return r;
    }

    // value over Q; only valid when every key is a rational prime
    Rational value_q() const {
        Rational v(sign);
        for (const auto& [k, e] : exp) {
            Rational p(k.prime);
            for (long long i = 0; i < (e > 0 ? e : -e); ++i) {
                if (e > 0)
                    v = v * p;
                else
                    v = v / p;
            }
        }
        return v;
    }

    // numerator/denominator polynomials over Q(t) (sign and primes fold
    // into the numerator's coefficients)
    std::pair<Poly, Poly> value_qt() const {
        Poly num{Rational(sign)};
        Poly den{Rational(1)};
        for (const auto& [k, e] : exp) {
            Poly base = k.kind == BasisKey::Prime ? Poly(Rational(k.prime)) : k.poly;
            for (long long i = 0; i < (e > 0 ? e : -e); ++i) {
                if (e > 0)
                    num = num * base;
                else
                    den = den * base;
            }
        }
        return {num, den};
    }

    QtElem value_qt_elem() const {
        auto [n, d] = value_qt();
        return QtElem(std::move(n), std::move(d));
    }

    std::string str() const {
        if (exp.empty()) return sign < 0 ? "-1" : "1";
        std::string out = sign < 0 ? "-" : "";
        bool first = true;
        for (const auto& [k, e] : exp) {
            if (!first) out += " ";
            first = false;
            std::string base = k.kind == BasisKey::Prime ? k.str() : "(" + k.str() + ")";
            out += base;
            if (e != 1) out += "^" + std::to_string(e);
        }
        return out;
    }

    friend bool operator<(const Factored& a, const Factored& b) {
        if (a.sign != b.sign) return a.sign < b.sign;
        return a.exp < b.exp;
    }
    friend bool operator==(const Factored& a, const Factored& b) { return a.sign == b.sign && a.exp == b.exp; }
};

// Exponent vector with the torsion unit discarded (used as tensor legs and
// wedge slots; equality there is equality modulo torsion).
inline Factored drop_torsion(Factored f) {
    f.sign = 1;
    return f;
}

// Factorization context. Over Q: trial division up to the bound, then a
// primality check on the cofactor; composite cofactors above the bound
// raise. Over Q(t): declared monic irreducibles are divided out first; the
// closure under x -> 1-x may introduce new linear or quadratic
// irreducibles, while an unrecognized cofactor of degree >= 3 raises so
// runs stay reproducible.
class FactorContext {
  public:
    explicit FactorContext(unsigned long trial_bound = 1000000UL) : bound_(trial_bound) {}

    void declare(const Poly& monic_irreducible) { declared_.insert(monic_irreducible); }
    const std::set<Poly>& declared() const { return declared_; }

    Factored factor_integer(BigInt n) const {
        if (n == 0) throw DegenerateInput("factor_integer: zero");
        Factored out;
        if (n < 0) {
            out.sign = -1;
            n = -n;
        }
        for (BigInt p = 2; p * p <= n && p <= BigInt(bound_); p == 2 ? p = 3 : p += 2) {
            while (n % p == 0) {
                out.mul_key(BasisKey::from_prime(p), 1);
                n /= p;
            }
        }
        if (n > 1) {
            if (mpz_probab_prime_p(n.get_mpz_t(), 32) == 0)
                throw UnfactorableElement("composite cofactor above trial bound: " + n.get_str());
            out.mul_key(BasisKey::from_prime(n), 1);
        }
        return out;
    }

    Factored factor_rational(const Rational& q) const {
        if (q == 0) throw DegenerateInput("factor_rational: zero");
        Factored num = factor_integer(q.get_num());
        Factored den = factor_integer(q.get_den());
        return num * den.inverse();
    }

    // Factor a polynomial with rational coefficients into content (primes)
    // and monic irreducible factors.
    Factored factor_poly(Poly p) {
        if (p.is_zero()) throw DegenerateInput("factor_poly: zero");
        Factored out = factor_rational(p.leading());
        p = p.monic();
        if (p.degree() == 0) return out;

        // declared irreducibles first (any degree)
        for (const auto& d : declared_) {
            if (d.degree() < 1 || d.degree() > p.degree()) continue;
            while (p.degree() >= d.degree() && divides(d, p)) {
                out.mul_key(BasisKey::from_poly(d), 1);
                p = divmod(p, d).first;
            }
        }
        // rational roots
        if (p.degree() >= 1) {
            for (auto root = next_rational_root(p); root; root = next_rational_root(p)) {
                Poly lin = Poly::from({-*root, Rational(1)});
                while (divides(lin, p)) {
                    out.mul_key(BasisKey::from_poly(lin), 1);
                    declared_.insert(lin);
                    p = divmod(p, lin).first;
                }
            }
        }
        if (p.degree() == 1) {
            out.mul_key(BasisKey::from_poly(p), 1);
            declared_.insert(p);
            return out;
        }
        if (p.degree() == 2) {
            // split if the discriminant is a rational square
            const Rational b = p.c[1], c0 = p.c[0];
            Rational disc = b * b - 4 * c0;
            Rational sq;
            if (disc != 0 && rational_sqrt(disc, sq)) {
                Rational r1 = (-b + sq) / 2, r2 = (-b - sq) / 2;
                Poly l1 = Poly::from({-r1, Rational(1)});
                Poly l2 = Poly::from({-r2, Rational(1)});
                out.mul_key(BasisKey::from_poly(l1), 1);
                out.mul_key(BasisKey::from_poly(l2), 1);
                declared_.insert(l1);
                declared_.insert(l2);
                return out;
            }
            if (disc == 0) {
                Poly l = Poly::from({b / 2, Rational(1)});
                out.mul_key(BasisKey::from_poly(l), 2);
                declared_.insert(l);
                return out;
            }
            out.mul_key(BasisKey::from_poly(p), 1);
            declared_.insert(p);
            return out;
        }
        if (p.degree() >= 3)
            throw UnfactorableElement("undeclared irreducible cofactor of degree >= 3: " + p.str());
        return out;
    }

    Factored factor_qt(const QtElem& x) {
        if (x.is_zero()) throw DegenerateInput("factor_qt: zero");
        Factored num = factor_poly(x.num);
        Factored den = factor_poly(x.den);
        return num * den.inverse();
    }

  private:
    static bool rational_sqrt(const Rational& q, Rational& out) {
        if (q < 0) return false;
        BigInt n = q.get_num(), d = q.get_den();
        BigInt sn, sd;
        mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
        mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
        if (sn * sn == n && sd * sd == d) {
            out = Rational(sn) / Rational(sd);
            return true;
        }
        return false;
    }

    // smallest rational root of a monic polynomial, if any
    static std::optional<Rational> next_rational_root(const Poly& p) {
        // monic: candidate roots are +-(divisor of |constant|/denominator structure);
        // clear denominators first and use the integer rational-root test.
        BigInt lcm(1);
        for (const auto& c : p.c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
        std::vector<BigInt> ic(p.c.size());
        for (std::size_t i = 0; i < p.c.size(); ++i) {
            Rational scaled = p.c[i] * Rational(lcm);
            ic[i] = scaled.get_num();
        }
        BigInt a0 = ic[0], an = ic.back();
        if (a0 == 0) return Rational(0);
        auto divisors = [](BigInt n) {
            if (n < 0) n = -n;
            std::vector<BigInt> ds;
            for (BigInt d = 1; d * d <= n; ++d)
                if (n % d == 0) {
                    ds.push_back(d);
                    ds.push_back(n / d);
                }
            return ds;
        };
        for (const auto& pnum : divisors(a0))
            for (const auto& qden : divisors(an)) {
                for (int s : {1, -1}) {
                    Rational cand = Rational(s * pnum) / Rational(qden);
                    if (p.eval(cand) == 0) return cand;
                }
            }
        return std::nullopt;
    }

    unsigned long bound_;
    std::set<Poly> declared_;
};

} // namespace eklab
