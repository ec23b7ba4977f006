#pragma once

#include "eklab/chains/conditions.hpp"
#include "eklab/chains/serialize.hpp"
#include "eklab/polylog/sv.hpp"
#include "eklab/report.hpp"

namespace eklab::suites {

// shared randomized generators (all randomness flows from the suite seed)
inline Rational random_rational(Rng& rng, long bound) {
    return Rational(rng.range(-bound, bound)) / Rational(rng.range(1, bound));
}

inline Vec random_int_vec(Rng& rng, std::size_t n, long bound) {
    Vec v(n);
    for (auto& x : v) x = Rational(rng.range(-bound, bound));
    return v;
}

inline Config random_generic_config(Rng& rng, std::size_t count, std::size_t dim, long bound) {
    for (;;) {
        Config c;
        c.reserve(count);
        for (std::size_t i = 0; i < count; ++i) c.push_back(random_int_vec(rng, dim, bound));
        if (is_generic(c, dim)) return c;
    }
}

inline std::array<P1<Rational>, 5> random_distinct_p1_tuple(Rng& rng, long bound) {
    std::array<P1<Rational>, 5> pts{P1<Rational>::affine(Rational(0)), P1<Rational>::affine(Rational(0)),
                                    P1<Rational>::affine(Rational(0)), P1<Rational>::affine(Rational(0)),
                                    P1<Rational>::affine(Rational(0))};
    std::vector<Rational> seen;
    std::size_t k = 0;
    while (k < 5) {
        Rational x = random_rational(rng, bound);
        bool dup = false;
        for (const auto& s : seen)
            if (s == x) dup = true;
        if (dup) continue;
        seen.push_back(x);
        pts[k++] = P1<Rational>::affine(x);
    }
    return pts;
}

inline QtElem random_qt_unit(Rng& rng, FactorContext& ctx) {
    auto lin = [](long c0) { return QtElem(Poly::from({Rational(c0), Rational(1)}), Poly(Rational(1))); };
    for (;;) {
        QtElem v(Rational(rng.range(1, 4)));
        int nf = static_cast<int>(rng.below(3)) + 1;
        for (int i = 0; i < nf; ++i) {
            long c = rng.range(-3, 3);
            long e = rng.range(-2, 2);
            if (e == 0) continue;
            QtElem base = lin(c);
            for (long k = 0; k < std::labs(e); ++k) v = e > 0 ? v * base : v / base;
        }
        if (v.is_zero() || v.is_one()) continue;
        try {
            ctx.factor_qt(v);
            ctx.factor_qt(one_minus(v));
            return v;
        } catch (const UnfactorableElement&) {
            continue;
        }
    }
}

inline Report run_identities(std::uint64_t seed, long gz_count, long gz4_count, long five_term_count,
                             long chain45_count, long chain56_count, long residue_count, long entry_bound) {
    Report rep;
    rep.suite = "identities";
    rep.seed = seed;
    rep.precision_bits = precision::contract_bits();
    Rng rng(seed);

    {
        CheckTimer timer;
        CheckRecord c;
        c.name = "det-identity-defect";
        c.tolerance = "exact 0";
        Rng r = rng.fork(1);
        long bad = 0;
        for (long it = 0; it < gz_count; ++it) {
            Vec a1 = random_int_vec(r, 3, entry_bound), a2 = random_int_vec(r, 3, entry_bound),
                a3 = random_int_vec(r, 3, entry_bound);
            Vec b1 = random_int_vec(r, 3, entry_bound), b2 = random_int_vec(r, 3, entry_bound),
                b3 = random_int_vec(r, 3, entry_bound);
            if (cross_det_defect3(a1, a2, a3, b1, b2, b3) != 0) ++bad;
        }
        c.values = {{"configurations", std::to_string(gz_count)}, {"nonzero_defects", std::to_string(bad)}};
        c.passed = bad == 0;
        c.wall_ms = timer.ms();
        rep.checks.push_back(std::move(c));
    }
    {
        CheckTimer timer;
        CheckRecord c;
        c.name = "det-identity-defect-dim4";
        c.tolerance = "exact 0";
        Rng r = rng.fork(2);
        long bad = 0;
        for (long it = 0; it < gz4_count; ++it) {
            std::vector<Vec> a, b;
            for (int i = 0; i < 4; ++i) {
                a.push_back(random_int_vec(r, 4, std::min(entry_bound, 12L)));
                b.push_back(random_int_vec(r, 4, std::min(entry_bound, 12L)));
            }
            if (cross_det_defect_n(a, b) != 0) ++bad;
        }
        c.values = {{"configurations", std::to_string(gz4_count)}, {"nonzero_defects", std::to_string(bad)}};
        c.passed = bad == 0;
        c.wall_ms = timer.ms();
        rep.checks.push_back(std::move(c));
    }
    {
        CheckTimer timer;
        CheckRecord c;
        c.name = "det-identity-special-monomial";
        c.tolerance = "exact";
        // distinct primes pin the two monomials of the special form
        Vec x = vec3(2, 3, 5), y = vec3(7, 11, 13), z = vec3(17, 19, 23);
        const Vec e1 = unit_vec(3, 0), e2 = unit_vec(3, 1), e3 = unit_vec(3, 2);
        Rational lhs = det3(e1, e2, x) * det3(e2, e3, y) * det3(e3, e1, z) -
                       det3(e1, e2, y) * det3(e2, e3, z) * det3(e3, e1, x);
        c.passed = (lhs == cross_det_special_monomial(x, y, z));
        c.values = {{"value", lhs.get_str()}};
        c.wall_ms = timer.ms();
        rep.checks.push_back(std::move(c));
    }
    {
        CheckTimer timer;
        CheckRecord c;
        c.name = "five-term-delta-vanishes";
        c.tolerance = "exact 0 in the torsion-free wedge";
        Rng r = rng.fork(3);
        FactorContext ctx;
        long bad = 0;
        for (long it = 0; it < five_term_count; ++it) {
            auto pts = random_distinct_p1_tuple(r, 20);
            if (it % 7 == 0) pts[static_cast<std::size_t>(r.below(5))] = P1<Rational>::infinity();
            try {
                B2Element<Rational> ft = five_term_element(pts);
                if (!delta2(ctx, ft).is_zero()) ++bad;
            } catch (const DegenerateInput&) {
                --it;
            }
        }
        c.values = {{"tuples", std::to_string(five_term_count)}, {"nonzero_images", std::to_string(bad)}};
        c.passed = bad == 0;
        c.wall_ms = timer.ms();
        rep.checks.push_back(std::move(c));
    }
    {
        CheckTimer timer;
        CheckRecord c;
        c.name = "cross-ratio-half-alternation";
        c.tolerance = "exact";
        Rng r = rng.fork(4);
        FactorContext ctx;
        long bad = 0, done = 0;
        while (done < 25) {
            Config pc = random_generic_config(r, 4, 2, 9);
            Rational cr = cross_ratio_vec2(pc[0], pc[1], pc[2], pc[3]);
            if (cr == 1) continue;
            FormalSum<Rational> sym;
            sym.add(cr, 1);
            Wedge2 lhs = delta2(ctx, sym);
            Wedge2 alt;
            detail::for_each_permutation<4>([&](const std::array<int, 4>& p, int sgn) {
                Rational d12 = det_cols({pc[p[0]], pc[p[1]]});
                Rational d13 = det_cols({pc[p[0]], pc[p[2]]});
                alt += sgn * wedge2(drop_torsion(ctx.factor_rational(d12)), drop_torsion(ctx.factor_rational(d13)));
            });
            if (!alt.divide_exactly(2) || lhs != alt) ++bad;
            ++done;
        }
        c.values = {{"configurations", "25"}, {"mismatches", std::to_string(bad)}};
        c.passed = bad == 0;
        c.wall_ms = timer.ms();
        rep.checks.push_back(std::move(c));
    }
    {
        CheckTimer timer;
        CheckRecord c;
        c.name = "chain-square-45";
        c.tolerance = "exact 0 mod torsion";
        Rng r = rng.fork(5);
        FactorContext ctx;
        long bad = 0;
        for (long it = 0; it < chain45_count; ++it) {
            Config cf = random_generic_config(r, 5, 3, 8);
            if (!chain_defect_45(ctx, cf).is_zero()) ++bad;
        }
        c.values = {{"configurations", std::to_string(chain45_count)},
                    {"constant", chain45_constant().get_str()},
                    {"nonzero_defects", std::to_string(bad)}};
        c.passed = bad == 0;
        c.wall_ms = timer.ms();
        rep.checks.push_back(std::move(c));
    }
    {
        CheckTimer timer;
        CheckRecord c;
        c.name = "chain-square-56";
        c.tolerance = "exact 0 mod torsion (compared at 15x scale)";
        Rng r = rng.fork(6);
        FactorContext ctx;
        long bad = 0;
        for (long it = 0; it < chain56_count; ++it) {
            Config cf = random_generic_config(r, 6, 3, 4);
            if (!chain_defect_56(ctx, cf).is_zero()) ++bad;
        }
        c.values = {{"configurations", std::to_string(chain56_count)}, {"nonzero_defects", std::to_string(bad)}};
        c.passed = bad == 0;
        c.wall_ms = timer.ms();
        rep.checks.push_back(std::move(c));
    }
    {
        CheckTimer timer;
        CheckRecord c;
        c.name = "alt6-reduction-reference";
        c.tolerance = "exact";
        Rng r = rng.fork(7);
        FactorContext ctx;
        Config cf = random_generic_config(r, 6, 3, 4);
        TensorW2F lhs = delta_tensor_id_of_symbols(ctx, alt6_triple_ratio(cf));
        TensorW2F rhs = alt6_reduction_reference(ctx, cf);
        c.passed = (lhs == rhs);
        c.values = {{"terms", std::to_string(lhs.size())}};
        c.wall_ms = timer.ms();
        rep.checks.push_back(std::move(c));
    }
    {
        CheckTimer timer;
        CheckRecord c;
        c.name = "residue-chain-square";
        c.tolerance = "exact";
        Rng r = rng.fork(8);
        std::vector<Valuation> places = {Valuation::finite(Poly::t()),
                                         Valuation::finite(Poly::from({Rational(-1), Rational(1)})),
                                         Valuation::finite(Poly::from({Rational(1), Rational(0), Rational(1)})),
                                         Valuation::infinity()};
        long bad = 0;
        for (long it = 0; it < residue_count; ++it) {
            FactorContext ctx;
            Weight3ChainQt chain;
            chain.deg1.add(random_qt_unit(r, ctx), r.range(-2, 2));
            for (int k = 0; k < 2; ++k) {
                QtElem x = random_qt_unit(r, ctx);
                QtElem y = random_qt_unit(r, ctx) * QtElem::t();
                chain.deg2.add({x, drop_torsion(ctx.factor_qt(y))}, r.range(-2, 2));
            }
            const Valuation& v = places[static_cast<std::size_t>(it) % places.size()];
            Weight3ChainQt dchain = delta_weight3(ctx, chain);
            Weight2ChainRf route_a = residue_weight3(ctx, dchain, v);
            Wedge2 route_b = delta2_residue(ctx, residue_weight3(ctx, chain, v).b2, v);
            if (!(route_a.w2 == route_b) || !route_a.b2.is_zero()) ++bad;
        }
        c.values = {{"generators", std::to_string(residue_count)}, {"mismatches", std::to_string(bad)}};
        c.passed = bad == 0;
        c.wall_ms = timer.ms();
        rep.checks.push_back(std::move(c));
    }
    {
        CheckTimer timer;
        CheckRecord c;
        c.name = "tame-symbol-prime-choice";
        c.tolerance = "exact";
        Rng r = rng.fork(9);
        Valuation vt = Valuation::finite(Poly::t());
        long bad = 0;
        for (long it = 0; it < 8; ++it) {
            FactorContext ctx;
            QtElem a = random_qt_unit(r, ctx) * QtElem::t();
            QtElem b = random_qt_unit(r, ctx);
            QtElem cc = random_qt_unit(r, ctx);
            Wedge3 w = wedge3(ctx.factor_qt(a), ctx.factor_qt(b), ctx.factor_qt(cc));
            Wedge2 canonical = tame_theta3(ctx, w, vt);
            QtElem pi2 = QtElem(Rational(2)) * QtElem::t();
            if (!(tame_theta3_with_pi(ctx, w, vt, pi2) == canonical)) ++bad;
        }
        c.values = {{"wedges", "8"}, {"mismatches", std::to_string(bad)}};
        c.passed = bad == 0;
        c.wall_ms = timer.ms();
        rep.checks.push_back(std::move(c));
    }
    {
        CheckTimer timer;
        CheckRecord c;
        c.name = "triple-ratio-geometry";
        c.tolerance = "exact";
        Rng r = rng.fork(10);
        long bad = 0, done = 0;
        while (done < 10) {
            Vec a1 = random_int_vec(r, 3, 9), a2 = random_int_vec(r, 3, 9), a3 = random_int_vec(r, 3, 9);
            if (det3(a1, a2, a3) == 0) continue;
            Vec b1 = Rational(r.range(1, 7)) * a1 + Rational(r.range(1, 7)) * a2;
            Vec b2 = Rational(r.range(1, 7)) * a2 + Rational(r.range(1, 7)) * a3;
            Vec b3 = Rational(r.range(1, 7)) * a3 + Rational(r.range(1, 7)) * a1;
            try {
                Rational ratio = geometric_triple_ratio(a1, a2, a3, b1, b2, b3);
                Config img = project_config(b1, {a2, a3, b2, b3});
                Rational cr = cross_ratio_vec2(img[0], img[1], img[2], img[3]);
                if (ratio != -cr) ++bad;
                ++done;
            } catch (const DegenerateInput&) {
                continue;
            }
        }
        c.values = {{"configurations", "10"}, {"mismatches", std::to_string(bad)}};
        c.passed = bad == 0;
        c.wall_ms = timer.ms();
        rep.checks.push_back(std::move(c));
    }
    {
        CheckTimer timer;
        CheckRecord c;
        c.name = "weight3-condition";
        c.tolerance = "exact";
        FactorContext ctx;
        std::vector<std::pair<Rational, Rational>> ff = {{Rational(5, 3), Rational(5, 3)}};
        bool ok = condition_weight3(ctx, ff).is_zero();
        FactorContext qt;
        QtElem t = QtElem::t();
        std::vector<std::pair<QtElem, QtElem>> inst = {{t, t + QtElem(Rational(2))}};
        ok = ok && !condition_weight3(qt, inst).is_zero();
        c.passed = ok;
        c.values = {{"trivial_pair_zero", ok ? "true" : "false"}};
        c.wall_ms = timer.ms();
        rep.checks.push_back(std::move(c));
    }
    {
        CheckTimer timer;
        CheckRecord c;
        c.name = "b2-divisor-condition";
        c.tolerance = "formal exact; proxy 1e-25";
        auto dilog = [](const Complex& z) { return sv_polylog(2, z); };
        std::vector<B2ConditionTerm> terms;
        terms.push_back({2, Rational(5, 3), {Complex(Real(5L) / Real(3L))}});
        terms.push_back({-2, Rational(5, 3), {Complex(Real(5L) / Real(3L))}});
        auto repc = check_divisor_b2_condition(terms, dilog);
        bool ok = repc.formal.is_zero() && abs(repc.proxy[0]) < Real("1e-25");
        // real values in (0,1): proxy vanishes regardless of coefficients
        std::vector<B2ConditionTerm> real01;
        real01.push_back({3, Rational(1, 3), {Complex(Real(1L) / Real(3L))}});
        real01.push_back({5, Rational(2, 7), {Complex(Real(2L) / Real(7L))}});
        auto rep01 = check_divisor_b2_condition(real01, dilog);
        ok = ok && rep01.proxy[0].is_zero();
        c.passed = ok;
        c.values = {{"cancelling_pair_proxy", abs(repc.proxy[0]).str(8)}};
        c.wall_ms = timer.ms();
        rep.checks.push_back(std::move(c));
    }
    {
        CheckTimer timer;
        CheckRecord c;
        c.name = "sym-power-membership";
        c.tolerance = "exact";
        FactorContext ctx;
        Factored f = drop_torsion(ctx.factor_rational(Rational(2)));
        Factored g = drop_torsion(ctx.factor_rational(Rational(3)));
        bool ok = sym_power_membership({{Rational(7), {f, f, f}, 1}});
        ok = ok && !sym_power_membership({{Rational(7), {f, g}, 1}, {Rational(7), {g, f}, -1}});
        Factored fg = f * g;
        ok = ok && sym_power_membership(
                       {{Rational(7), {fg, fg, fg}, 1}, {Rational(7), {f, f, f}, -1}, {Rational(7), {g, g, g}, -1}});
        c.passed = ok;
        c.wall_ms = timer.ms();
        rep.checks.push_back(std::move(c));
    }
    return rep;
}

} // namespace eklab::suites
