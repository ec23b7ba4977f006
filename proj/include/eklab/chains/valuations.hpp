#pragma once

#include <array>

#include "eklab/chains/b2.hpp"
#include "eklab/chains/gaussian.hpp"

namespace eklab {

// Discrete valuation on Q(t): a finite place given by a monic irreducible
// polynomial, or the place at infinity (ord = -deg). ord is a surjective
// homomorphism with ord(constants) = 0.
struct Valuation {
    bool at_infinity = false;
    Poly place; // monic irreducible when finite

    static Valuation finite(Poly monic_irreducible) { return {false, std::move(monic_irreducible)}; }
    static Valuation infinity() { return {true, Poly()}; }

    int residue_degree() const { return at_infinity ? 1 : place.degree(); }

    long ord_poly(const Poly& q) const {
        if (q.is_zero()) throw DegenerateInput("ord of zero");
        if (at_infinity) return -q.degree();
        long n = 0;
        Poly r = q;
        while (r.degree() >= place.degree()) {
            auto [quot, rem] = divmod(r, place);
            if (!rem.is_zero()) break;
            r = quot;
            ++n;
        }
        return n;
    }

    long ord_key(const BasisKey& b) const {
        if (b.kind == BasisKey::Prime) return 0;
        if (at_infinity) return -b.poly.degree();
        return b.poly == place ? 1 : 0;
    }

    long ord(const Factored& f) const {
        long n = 0;
        for (const auto& [k, e] : f.exp) n += ord_key(k) * e;
        return n;
    }

    long ord(const QtElem& x) const {
        if (x.is_zero()) throw DegenerateInput("ord of zero");
        return ord_poly(x.num) - ord_poly(x.den);
    }
};

// Residue field k_v = Q[t]/(p) (or Q at infinity); elements are reduced
// polynomial representatives. Canonical multiplicative factorization of
// residues is provided for k_v = Q (degree-1 places, infinity) and for
// k_v = Q(i) (the place t^2+1); other residue fields raise.
struct ResidueField {
    Valuation v;

    Poly reduce(const Poly& q) const {
        if (v.at_infinity) throw DegenerateInput("reduce at infinity: use residue()");
        return divmod(q, v.place).second;
    }

    Poly one() const { return Poly(Rational(1)); }

    Poly add(const Poly& a, const Poly& b) const { return v.at_infinity ? a + b : reduce(a + b); }
    Poly sub(const Poly& a, const Poly& b) const { return v.at_infinity ? a - b : reduce(a - b); }
    Poly mul(const Poly& a, const Poly& b) const { return v.at_infinity ? a * b : reduce(a * b); }

    Poly inv(const Poly& a) const {
        if (a.is_zero()) throw DegenerateInput("residue field inverse of zero");
        if (v.at_infinity || v.place.degree() == 1) {
            Poly ar = v.at_infinity ? a : reduce(a);
            if (ar.is_zero() || ar.degree() != 0) throw DegenerateInput("residue inverse: not a unit");
            return Poly(Rational(1) / ar.c[0]);
        }
        Poly r0 = v.place, r1 = reduce(a);
        Poly s0, s1 = one();
        while (!r1.is_zero()) {
            auto [q, r2] = divmod(r0, r1);
            Poly s2 = s0 - q * s1;
            r0 = std::move(r1);
            r1 = std::move(r2);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (r0.degree() != 0) throw DegenerateInput("residue inverse: element not a unit mod place");
        return reduce((Rational(1) / r0.c[0]) * s0);
    }

    // residue of a unit (ord 0) field value
    Poly residue(const QtElem& x) const {
        if (v.ord(x) != 0) throw DegenerateInput("residue of non-unit");
        if (v.at_infinity) {
            return Poly(x.num.leading() / x.den.leading()); // equal degrees
        }
        return mul(reduce(x.num), inv(x.den));
    }

    // residue of the unit part b * pi^{-ord(b)} of a basis irreducible,
    // with the canonical prime (the place polynomial; 1/t at infinity).
    Poly residue_unit_part(const BasisKey& b) const {
        if (b.kind == BasisKey::Prime) return Poly(Rational(b.prime));
        if (v.at_infinity) return Poly(b.poly.leading()); // monic: 1
        if (b.poly == v.place) return one();
        return reduce(b.poly);
    }

    bool residue_is_q() const { return v.at_infinity || v.place.degree() == 1; }

    bool residue_is_gaussian() const {
        static const Poly t2p1 = Poly::from({Rational(1), Rational(0), Rational(1)});
        return !v.at_infinity && v.place == t2p1;
    }

    // exact rational value when the residue field is Q
    Rational to_rational(const Poly& e) const {
        if (!residue_is_q()) throw DegenerateInput("residue field is not Q");
        if (e.is_zero()) return Rational(0);
        if (e.degree() != 0) throw DegenerateInput("unreduced residue element");
        return e.c[0];
    }

    // canonical factorization of a nonzero residue value over the residue
    // field's multiplicative basis
    Factored factor_residue(const FactorContext& ctx, const Poly& value) const {
        if (residue_is_q()) return drop_torsion(ctx.factor_rational(to_rational(value)));
        if (residue_is_gaussian()) return drop_torsion(gaussian_factor(ctx, value));
        throw UnfactorableElement("residue factorization implemented for Q and Q(i) residue fields only");
    }
};

// theta_3: Lambda^3 K* -> Lambda^2 k_v*. Each factored slot decomposes as
// pi^a * unit with the canonical prime; terms with two prime slots vanish.
// Residues are factored canonically, so equality of outputs is genuine
// equality in Lambda^2 k_v* modulo torsion.
inline Wedge2 tame_theta3(const FactorContext& ctx, const Wedge3& w, const Valuation& v) {
    ResidueField rf{v};
    Wedge2 out;
    for (const auto& [key, c] : w.terms()) {
        std::array<long, 3> a{};
        std::array<Factored, 3> res;
        for (int i = 0; i < 3; ++i) {
            a[i] = v.ord_key(key.b[i]);
            res[i] = rf.factor_residue(ctx, rf.residue_unit_part(key.b[i]));
        }
        for (int i = 0; i < 3; ++i) {
            if (a[i] == 0) continue;
            int j = (i == 0) ? 1 : 0;
            int k = (i == 2) ? 1 : 2;
            long long sgn = (i % 2 == 0) ? 1 : -1; // move pi to the front
            out += (c * sgn * a[i]) * wedge2(res[j], res[k]);
        }
    }
    return out;
}

// Same map with an explicit prime element pi (prime-independence checks);
// pi must have ord_v(pi) = 1.
inline Wedge2 tame_theta3_with_pi(const FactorContext& ctx, const Wedge3& w, const Valuation& v, const QtElem& pi) {
    if (v.ord(pi) != 1) throw DegenerateInput("tame_theta: pi must have order 1");
    ResidueField rf{v};
    auto unit_residue = [&](const BasisKey& b, long a) {
        QtElem val =
            b.kind == BasisKey::Prime ? QtElem(Rational(b.prime)) : QtElem(b.poly, Poly(Rational(1)));
        QtElem u = val;
        for (long i = 0; i < (a > 0 ? a : -a); ++i) u = a > 0 ? u / pi : u * pi;
        return rf.factor_residue(ctx, rf.residue(u));
    };
    Wedge2 out;
    for (const auto& [key, c] : w.terms()) {
        std::array<long, 3> a{};
        std::array<Factored, 3> res;
        for (int i = 0; i < 3; ++i) {
            a[i] = v.ord_key(key.b[i]);
            res[i] = unit_residue(key.b[i], a[i]);
        }
        for (int i = 0; i < 3; ++i) {
            if (a[i] == 0) continue;
            int j = (i == 0) ? 1 : 0;
            int k = (i == 2) ? 1 : 2;
            long long sgn = (i % 2 == 0) ? 1 : -1;
            out += (c * sgn * a[i]) * wedge2(res[j], res[k]);
        }
    }
    return out;
}

// theta_2: Lambda^2 K* -> k_v*, returned as a factored value mod torsion.
inline Factored tame_theta2(const FactorContext& ctx, const Wedge2& w, const Valuation& v) {
    ResidueField rf{v};
    Factored out;
    for (const auto& [key, c] : w.terms()) {
        std::array<long, 2> a{v.ord_key(key.b[0]), v.ord_key(key.b[1])};
        if (a[0] != 0)
            out = out * rf.factor_residue(ctx, rf.residue_unit_part(key.b[1])).pow(c * a[0]);
        if (a[1] != 0)
            out = out * rf.factor_residue(ctx, rf.residue_unit_part(key.b[0])).pow(-c * a[1]);
    }
    return drop_torsion(out);
}

// s_v: {x} -> {bar x} if x is a unit at v, 0 otherwise.
inline FormalSum<Poly> specialize_sv(const FormalSum<QtElem>& e, const Valuation& v) {
    ResidueField rf{v};
    FormalSum<Poly> out;
    for (const auto& [x, c] : e.terms()) {
        if (v.ord(x) != 0) continue;
        Poly r = rf.residue(x);
        if (r.is_one()) continue; // {1} -> 0 in B_2
        out.add(std::move(r), c);
    }
    return out;
}

inline FormalSum<Rational> specialized_to_q(const FormalSum<Poly>& e, const Valuation& v) {
    ResidueField rf{v};
    FormalSum<Rational> out;
    for (const auto& [x, c] : e.terms()) out.add(rf.to_rational(x), c);
    return out;
}

// Weight-3 chain over Q(t): degree-1 symbols {x}_3, degree-2 part
// {x}_2 tensor y with the tensor leg factored modulo torsion, degree-3
// wedge.
struct Weight3ChainQt {
    FormalSum<QtElem> deg1;
    FormalSum<std::pair<QtElem, Factored>> deg2;
    Wedge3 deg3;
};

// Weight-2 chain over the residue field.
struct Weight2ChainRf {
    FormalSum<Poly> b2; // symbols {bar x}_2
    Wedge2 w2;          // Lambda^2 k_v*, over the residue factor basis
};

// delta on the degree-2 part: {x}_2 tensor y -> (1-x) ^ x ^ y.
inline Wedge3 delta32_qt(FactorContext& ctx, const FormalSum<std::pair<QtElem, Factored>>& e) {
    Wedge3 out;
    for (const auto& [key, c] : e.terms()) {
        const auto& [x, y] = key;
        Factored fx = ctx.factor_qt(x);
        Factored f1mx = ctx.factor_qt(one_minus(x));
        out += c * wedge3(f1mx, fx, y);
    }
    return out;
}

// Residue map on the weight-3 complex: degree-1 -> 0,
// degree-2 -> ord_v(y) {bar x}_2 (x a unit), degree-3 -> theta_3.
inline Weight2ChainRf residue_weight3(const FactorContext& ctx, const Weight3ChainQt& chain, const Valuation& v) {
    ResidueField rf{v};
    Weight2ChainRf out;
    for (const auto& [key, c] : chain.deg2.terms()) {
        const auto& [x, y] = key;
        long m = v.ord(y);
        if (m == 0 || v.ord(x) != 0) continue;
        Poly r = rf.residue(x);
        if (r.is_one()) continue;
        out.b2.add(std::move(r), c * m);
    }
    out.w2 = tame_theta3(ctx, chain.deg3, v);
    return out;
}

// delta on a residue-field B_2 part: {x} -> (1-x) ^ x over the residue
// factor basis.
inline Wedge2 delta2_residue(const FactorContext& ctx, const FormalSum<Poly>& b2, const Valuation& v) {
    ResidueField rf{v};
    Wedge2 out;
    for (const auto& [x, c] : b2.terms()) {
        Poly omx = rf.sub(rf.one(), x);
        if (omx.is_zero()) throw DegenerateInput("delta2_residue: symbol {1}");
        out += c * wedge2(rf.factor_residue(ctx, omx), rf.factor_residue(ctx, x));
    }
    return out;
}

// Full delta on a weight-3 chain (degree-1 -> degree-2 -> degree-3).
inline Weight3ChainQt delta_weight3(FactorContext& ctx, const Weight3ChainQt& chain) {
    Weight3ChainQt out;
    for (const auto& [x, c] : chain.deg1.terms())
        out.deg2.add(std::make_pair(x, drop_torsion(ctx.factor_qt(x))), c);
    out.deg3 = delta32_qt(ctx, chain.deg2);
    return out;
}

} // namespace eklab
