#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "eklab/linalg/vec.hpp"

namespace eklab {

// Ordered tuple of exact vectors. GL-equivalence is a tested property, not
// a quotient type.
using Config = std::vector<Vec>;

// Every min(dim, arity)-subset must span (over a field, jointly unimodular
// means nonzero determinant resp. full rank).
inline bool is_generic(const Config& c, std::size_t dim) {
    for (const auto& v : c)
        if (v.size() != dim) return false;
    const std::size_t k = std::min(dim, c.size());
    if (k == 0) return true;
    std::vector<std::size_t> idx(k);
    // enumerate k-subsets
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) -> bool {
        if (pos == k) {
            std::vector<Vec> sub;
            sub.reserve(k);
            for (auto i : idx) sub.push_back(c[i]);
            if (k == dim) return det_cols(sub) != 0;
            return rank_cols(sub) == k;
        }
        for (std::size_t i = start; i + (k - pos) <= c.size(); ++i) {
            idx[pos] = i;
            if (!rec(pos + 1, i + 1)) return false;
        }
        return true;
    };
    return rec(0, 0);
}

// Signed sum over all permutations: sum_{sigma in S_n} sgn(sigma) f(t_sigma).
// Group G needs default construction, += and unary -.
template <typename G, typename F>
G alternation_sum(F&& f, const Config& tuple) {
    std::vector<std::size_t> perm(tuple.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    G acc{};
    // iterate permutations in lexicographic order, tracking parity directly
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) ++inversions;
        Config arg(perm.size());
        for (std::size_t i = 0; i < perm.size(); ++i) arg[i] = tuple[perm[i]];
        G val = f(arg);
        if (inversions % 2 == 0)
            acc += val;
        else
            acc += -val;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

// Projection into V/<apex>, written in the standard complement basis
// {e_i : i != k} where k is the chosen apex coordinate. The cross-ratio of
// the four images does not depend on the choice (tested).
enum class ComplementChoice { FirstNonzero, LastNonzero };

inline Config project_config(const Vec& apex, const Config& rest,
                             ComplementChoice choice = ComplementChoice::FirstNonzero) {
    if (is_zero_vec(apex)) throw DegenerateInput("project_config: zero apex");
    const std::size_t n = apex.size();
    std::size_t k = n;
    if (choice == ComplementChoice::FirstNonzero) {
        for (std::size_t i = 0; i < n; ++i)
            if (apex[i] != 0) {
                k = i;
                break;
            }
    } else {
        for (std::size_t i = n; i-- > 0;)
            if (apex[i] != 0) {
                k = i;
                break;
            }
    }
    Config out;
    out.reserve(rest.size());
    for (const auto& w : rest) {
        if (w.size() != n) throw DegenerateInput("project_config: dimension mismatch");
        Rational f = w[k] / apex[k];
        Vec img;
        img.reserve(n - 1);
        bool all_zero = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            Rational c = w[i] - f * apex[i];
            if (c != 0) all_zero = false;
            img.push_back(std::move(c));
        }
        if (all_zero) throw DegenerateInput("project_config: vector collinear with apex");
        out.push_back(std::move(img));
    }
    return out;
}

// Simplicial boundary on formal sums of tuples:
// d(v_1,...,v_{m+1}) = sum_i (-1)^{i-1} (v_1,...,hat v_i,...,v_{m+1}).
// Represented as a coefficient map keyed by the tuple itself.
using TupleSum = std::map<Config, long long>;

inline void add_term(TupleSum& s, Config key, long long c) {
    if (c == 0) return;
    auto it = s.find(key);
    if (it == s.end()) {
        s.emplace(std::move(key), c);
        return;
    }
    it->second += c;
    if (it->second == 0) s.erase(it);
}

inline TupleSum boundary(const TupleSum& chain) {
    TupleSum out;
    for (const auto& [tuple, coeff] : chain) {
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            Config face;
            face.reserve(tuple.size() - 1);
            for (std::size_t j = 0; j < tuple.size(); ++j)
                if (j != i) face.push_back(tuple[j]);
            add_term(out, std::move(face), (i % 2 == 0) ? coeff : -coeff);
        }
    }
    return out;
}

inline TupleSum boundary(const Config& tuple) {
    TupleSum chain;
    chain.emplace(tuple, 1);
    return boundary(chain);
}

} // namespace eklab
