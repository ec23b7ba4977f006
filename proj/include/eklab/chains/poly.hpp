#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eklab/linalg/vec.hpp"

namespace eklab {

// Dense univariate polynomial over Q; coeffs[i] multiplies t^i, no trailing
// zeros, zero polynomial has empty coefficient vector.
struct Poly {
    std::vector<Rational> c;

    Poly() = default;
    explicit Poly(Rational constant) {
        if (constant != 0) c.push_back(std::move(constant));
    }
    static Poly t() { return from({Rational(0), Rational(1)}); }
    static Poly from(std::vector<Rational> coeffs) {
        Poly p;
        p.c = std::move(coeffs);
        p.trim();
        return p;
    }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; } // -1 for 0
    const Rational& leading() const { return c.back(); }
    bool is_one() const { return c.size() == 1 && c[0] == 1; }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rational> r(std::max(a.c.size(), b.c.size()), Rational(0));
        for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
        for (std::size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
        return from(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Rational> r(std::max(a.c.size(), b.c.size()), Rational(0));
        for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
        for (std::size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
        return from(std::move(r));
    }
    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c) x = -x;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> r(a.c.size() + b.c.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c.size(); ++i)
            for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
        return from(std::move(r));
    }
    friend Poly operator*(const Rational& s, const Poly& a) {
        if (s == 0) return {};
        Poly r = a;
        for (auto& x : r.c) x *= s;
        return r;
    }

    // quotient/remainder; divisor must be nonzero
    friend std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
        if (b.is_zero()) throw DegenerateInput("poly division by zero");
        Poly q;
        q.c.assign(a.c.size(), Rational(0));
        while (!a.is_zero() && a.degree() >= b.degree()) {
            int shift = a.degree() - b.degree();
            Rational f = a.leading() / b.leading();
            q.c.resize(std::max<std::size_t>(q.c.size(), shift + 1), Rational(0));
            q.c[shift] += f;
            for (std::size_t i = 0; i < b.c.size(); ++i) a.c[i + shift] -= f * b.c[i];
            a.trim();
        }
        q.trim();
        return {q, a};
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    friend bool operator<(const Poly& a, const Poly& b) {
        if (a.c.size() != b.c.size()) return a.c.size() < b.c.size();
        for (std::size_t i = a.c.size(); i-- > 0;) {
            int cmp = mpq_cmp(a.c[i].get_mpq_t(), b.c[i].get_mpq_t());
            if (cmp != 0) return cmp < 0;
        }
        return false;
    }

    Poly monic() const {
        if (is_zero()) return {};
        return (Rational(1) / leading()) * *this;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = c.size(); i-- > 0;) {
            if (c[i] == 0) continue;
            Rational a = c[i];
            bool neg = a < 0;
            Rational m = neg ? Rational(-a) : a;
            if (!out.empty())
                out += neg ? "-" : "+";
            else if (neg)
                out += "-";
            bool unit_coeff = (m == 1) && i > 0;
            if (!unit_coeff) out += m.get_str();
            if (i > 0) {
                if (!unit_coeff) out += "*";
                out += "t";
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }
};

inline Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

inline bool divides(const Poly& d, const Poly& a) { return divmod(a, d).second.is_zero(); }

// Field of fractions Q(t) value in lowest terms, monic denominator.
struct QtElem {
    Poly num, den; // den monic, gcd(num,den)=1; zero is num=0, den=1

    QtElem() : num(), den(Poly(Rational(1))) {}
    QtElem(Poly n, Poly d) { assign(std::move(n), std::move(d)); }
    explicit QtElem(const Rational& q) : num(Poly(q)), den(Poly(Rational(1))) {}
    static QtElem t() { return QtElem(Poly::t(), Poly(Rational(1))); }

    void assign(Poly n, Poly d) {
        if (d.is_zero()) throw DegenerateInput("QtElem: zero denominator");
        if (n.is_zero()) {
            num = Poly();
            den = Poly(Rational(1));
            return;
        }
        Poly g = poly_gcd(n, d);
        if (g.degree() > 0) {
            n = divmod(n, g).first;
            d = divmod(d, g).first;
        }
        Rational lc = d.leading();
        num = (Rational(1) / lc) * n;
        den = (Rational(1) / lc) * d;
    }

    bool is_zero() const { return num.is_zero(); }
    bool is_one() const { return num.is_one() && den.is_one(); }

    friend QtElem operator+(const QtElem& a, const QtElem& b) { return QtElem(a.num * b.den + b.num * a.den, a.den * b.den); }
    friend QtElem operator-(const QtElem& a, const QtElem& b) { return QtElem(a.num * b.den - b.num * a.den, a.den * b.den); }
    friend QtElem operator*(const QtElem& a, const QtElem& b) { return QtElem(a.num * b.num, a.den * b.den); }
    friend QtElem operator/(const QtElem& a, const QtElem& b) {
        if (b.is_zero()) throw DegenerateInput("QtElem: division by zero");
        return QtElem(a.num * b.den, a.den * b.num);
    }
    QtElem operator-() const { return QtElem(-num, den); }

    friend bool operator==(const QtElem& a, const QtElem& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const QtElem& a, const QtElem& b) { return !(a == b); }
    friend bool operator<(const QtElem& a, const QtElem& b) {
        if (a.den != b.den) return a.den < b.den;
        return a.num < b.num;
    }

    std::string str() const {
        if (den.is_one()) return num.str();
        return "(" + num.str() + ")/(" + den.str() + ")";
    }
};

} // namespace eklab
