#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "eklab/chains/config_maps.hpp"
#include "eklab/mp/complex.hpp"

namespace eklab {

// One term of the point-local B_2 condition: the valuation of g at the
// point, the exact value f(x) when available, and the values of f(x) under
// the supplied complex embeddings.
struct B2ConditionTerm {
    long long vx = 0;
    std::optional<Rational> f_exact;
    std::vector<Complex> f_embedded;
};

struct B2ConditionReport {
    B2Element<Rational> formal;   // sum v_x(g_i) { f_i(x) }_2 over exact keys
    std::vector<Real> proxy;      // per embedding: sum v_x(g_i) L_2(f_i(x)^sigma)
};

// The formal sum is assembled over exact keys; the numeric proxy needs a
// dilogarithm evaluator (supplied as a callable so this header stays free
// of the analytic layer). Vanishing of the proxy is a necessary condition
// only.
template <typename L2Fn>
B2ConditionReport check_divisor_b2_condition(const std::vector<B2ConditionTerm>& terms, L2Fn&& sv_dilog) {
    B2ConditionReport out;
    std::size_t n_emb = 0;
    for (const auto& t : terms) n_emb = std::max(n_emb, t.f_embedded.size());
    out.proxy.assign(n_emb, Real(0L));
    for (const auto& t : terms) {
        if (t.vx == 0) continue;
        if (t.f_exact) {
            if (*t.f_exact == 0 || *t.f_exact == 1)
                throw DegenerateInput("divisor B2 condition: f(x) in {0,1}");
            out.formal.add_symbol(*t.f_exact, t.vx);
        }
        for (std::size_t s = 0; s < t.f_embedded.size(); ++s) {
            const Complex& z = t.f_embedded[s];
            if (z.is_zero() || (z.im.is_zero() && z.re == Real(1L)))
                throw DegenerateInput("divisor B2 condition: embedded f(x) in {0,1}");
            out.proxy[s] += Real(static_cast<long>(t.vx)) * sv_dilog(z);
        }
    }
    return out;
}

// One term {tag} tensor leg_1 tensor ... tensor leg_m, all legs over a
// common factor basis.
struct SymTensorTerm {
    Rational tag;
    std::vector<Factored> legs;
    long long coeff = 1;
};

// Decides whether, for every tag, the summed tensor of the legs lies in
// the symmetric power of the multiplicative Q-vector space spanned by the
// basis: exact linear algebra on the induced coefficient tensor (symmetry
// under adjacent transpositions).
inline bool sym_power_membership(const std::vector<SymTensorTerm>& terms) {
    if (terms.empty()) return true;
    const std::size_t legs = terms.front().legs.size();
    for (const auto& t : terms)
        if (t.legs.size() != legs) throw DegenerateInput("sym_power_membership: ragged tensor legs");
    if (legs <= 1) return true;

    // index the union basis
    std::map<BasisKey, int> index;
    for (const auto& t : terms)
        for (const auto& leg : t.legs)
            for (const auto& [k, e] : leg.exp) index.emplace(k, 0);
    int dim = 0;
    for (auto& [k, i] : index) i = dim++;

    // group terms by tag and accumulate the order-m tensor
    std::map<Rational, std::map<std::vector<int>, Rational>> tensors;
    for (const auto& t : terms) {
        auto& tensor = tensors[t.tag];
        // coordinates of each leg
        std::vector<std::vector<std::pair<int, long long>>> coords(legs);
        for (std::size_t l = 0; l < legs; ++l)
            for (const auto& [k, e] : t.legs[l].exp) coords[l].push_back({index[k], e});
        // outer product
        std::vector<int> idx(legs, 0);
        std::function<void(std::size_t, Rational)> rec = [&](std::size_t l, Rational c) {
            if (l == legs) {
                auto it = tensor.find(idx);
                if (it == tensor.end())
                    tensor.emplace(idx, c);
                else {
                    it->second += c;
                    if (it->second == 0) tensor.erase(it);
                }
                return;
            }
            for (const auto& [i, e] : coords[l]) {
                idx[l] = i;
                rec(l + 1, c * Rational(static_cast<long>(e)));
            }
        };
        rec(0, Rational(static_cast<long>(t.coeff)));
    }

    for (const auto& [tag, tensor] : tensors) {
        for (std::size_t swap_pos = 0; swap_pos + 1 < legs; ++swap_pos) {
            for (const auto& [idx, c] : tensor) {
                std::vector<int> swapped = idx;
                std::swap(swapped[swap_pos], swapped[swap_pos + 1]);
                auto it = tensor.find(swapped);
                Rational other = (it == tensor.end()) ? Rational(0) : it->second;
                if (other != c) return false;
            }
        }
    }
    return true;
}

} // namespace eklab
