#pragma once

#include <utility>

#include "eklab/chains/wedge.hpp"
#include "eklab/linalg/projective.hpp"

namespace eklab {

// Field-value plumbing shared by the Q and Q(t) backends.
inline Rational one_minus(const Rational& x) { return 1 - x; }
inline QtElem one_minus(const QtElem& x) { return QtElem(Rational(1)) - x; }
inline bool value_is_zero(const Rational& x) { return x == 0; }
inline bool value_is_zero(const QtElem& x) { return x.is_zero(); }
inline bool value_is_one(const Rational& x) { return x == 1; }
inline bool value_is_one(const QtElem& x) { return x.is_one(); }
inline Factored factor_value(FactorContext& ctx, const Rational& x) { return ctx.factor_rational(x); }
inline Factored factor_value(FactorContext& ctx, const QtElem& x) { return ctx.factor_qt(x); }
inline std::string value_str(const Rational& x) { return x.get_str(); }
inline std::string value_str(const QtElem& x) { return x.str(); }

// Free abelian group on symbols {x}, x a nonzero field value; {1} is
// dropped on construction. Equality of classes in B_2 is not decided here;
// the tested proxies are delta images and numeric dilogarithm values.
template <typename V>
class B2Element {
  public:
    B2Element() = default;

    void add_symbol(const V& x, long long coeff) {
        if (value_is_zero(x)) throw DegenerateInput("B2 symbol {0}");
        if (value_is_one(x)) return; // {1} -> 0
        sum_.add(x, coeff);
    }

    const FormalSum<V>& sum() const { return sum_; }
    FormalSum<V>& sum() { return sum_; }
    bool is_zero() const { return sum_.is_zero(); }

    friend B2Element operator+(B2Element a, const B2Element& b) {
        a.sum_ += b.sum_;
        return a;
    }
    friend B2Element operator-(B2Element a, const B2Element& b) {
        a.sum_ -= b.sum_;
        return a;
    }
    friend bool operator==(const B2Element& a, const B2Element& b) { return a.sum_ == b.sum_; }

  private:
    FormalSum<V> sum_;
};

// delta: {x} -> (1-x) ^ x, extended linearly; output modulo torsion.
template <typename V>
Wedge2 delta2(FactorContext& ctx, const FormalSum<V>& e) {
    Wedge2 out;
    for (const auto& [x, c] : e.terms()) {
        if (value_is_zero(x) || value_is_one(x)) continue;
        Factored fx = factor_value(ctx, x);
        Factored f1mx = factor_value(ctx, one_minus(x));
        out += c * wedge2(f1mx, fx);
    }
    return out;
}

template <typename V>
Wedge2 delta2(FactorContext& ctx, const B2Element<V>& e) {
    return delta2(ctx, e.sum());
}

// P^1 point over an arbitrary backend value type.
template <typename V>
struct P1 {
    V a, b;
    static P1 affine(V x) { return {std::move(x), V(Rational(1))}; }
    static P1 infinity() { return {V(Rational(1)), V(Rational(0))}; }
};

template <typename V>
V p1_det(const P1<V>& p, const P1<V>& q) {
    return p.a * q.b - q.a * p.b;
}

template <typename V>
V cross_ratio_p1(const P1<V>& p1, const P1<V>& p2, const P1<V>& p3, const P1<V>& p4) {
    const P1<V>* ps[4] = {&p1, &p2, &p3, &p4};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (value_is_zero(p1_det(*ps[i], *ps[j]))) throw DegenerateInput("cross_ratio: repeated points");
    return (p1_det(p1, p3) * p1_det(p2, p4)) / (p1_det(p1, p4) * p1_det(p2, p3));
}

// sum_{i=1..5} (-1)^i { r(x_1,...,hat x_i,...,x_5) }
template <typename V>
B2Element<V> five_term_element(const std::array<P1<V>, 5>& pts) {
    B2Element<V> out;
    for (int skip = 0; skip < 5; ++skip) {
        const P1<V>* q[4];
        int k = 0;
        for (int i = 0; i < 5; ++i)
            if (i != skip) q[k++] = &pts[i];
        V r = cross_ratio_p1(*q[0], *q[1], *q[2], *q[3]);
        out.add_symbol(r, (skip % 2 == 0) ? -1 : 1); // skip index is i-1
    }
    return out;
}

// Pre-quotient delta_n for n >= 3: {x} -> {x}_{n-1} tensor x, no relation
// quotient applied. The weight only tags the output symbols.
template <typename V>
FormalSum<std::pair<V, V>> delta_n_formal(const FormalSum<V>& e, int n) {
    if (n < 3) throw DegenerateInput("delta_n_formal: weight must be >= 3");
    FormalSum<std::pair<V, V>> out;
    for (const auto& [x, c] : e.terms()) {
        if (value_is_one(x)) continue; // {1} -> 0
        out.add(std::make_pair(x, x), c);
    }
    return out;
}

} // namespace eklab
