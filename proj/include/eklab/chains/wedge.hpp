#pragma once

#include <array>
#include <string>

#include "eklab/chains/factored.hpp"
#include "eklab/chains/formal_sum.hpp"

namespace eklab {

// Exterior powers of the unit group over a declared factor basis,
// implemented modulo torsion: unit signs are discarded, generators are
// strictly sorted tuples of basis irreducibles, tuples with a repeated
// entry vanish. Equality of stored values is equality modulo torsion.

template <std::size_t N>
struct WedgeKey {
    std::array<BasisKey, N> b;
    friend bool operator<(const WedgeKey& x, const WedgeKey& y) { return x.b < y.b; }
    friend bool operator==(const WedgeKey& x, const WedgeKey& y) { return x.b == y.b; }

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < N; ++i) {
            if (i) out += " \xE2\x88\xA7 "; // " ∧ "
            out += b[i].str();
        }
        return out;
    }
};

template <std::size_t N>
using Wedge = FormalSum<WedgeKey<N>>;

using Wedge2 = Wedge<2>;
using Wedge3 = Wedge<3>;

// sort with parity; 0 if a repeated entry appears
template <std::size_t N>
inline int normalize_wedge_key(WedgeKey<N>& k) {
    int sign = 1;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j) {
            if (k.b[j] < k.b[i]) {
                std::swap(k.b[i], k.b[j]);
                sign = -sign;
            } else if (k.b[i] == k.b[j]) {
                return 0;
            }
        }
    // second pass catches equality created by sorting adjacent swaps
    for (std::size_t i = 0; i + 1 < N; ++i)
        if (k.b[i] == k.b[i + 1]) return 0;
    return sign;
}

template <std::size_t N>
inline void add_wedge(Wedge<N>& w, WedgeKey<N> key, long long coeff) {
    int s = normalize_wedge_key(key);
    if (s != 0) w.add(std::move(key), s * coeff);
}

// multilinear expansion of factored slots (signs are torsion, dropped)
inline Wedge2 wedge2(const Factored& x, const Factored& y) {
    Wedge2 out;
    for (const auto& [bx, ex] : x.exp)
        for (const auto& [by, ey] : y.exp) add_wedge(out, WedgeKey<2>{{bx, by}}, ex * ey);
    return out;
}

inline Wedge3 wedge3(const Factored& x, const Factored& y, const Factored& z) {
    Wedge3 out;
    for (const auto& [bx, ex] : x.exp)
        for (const auto& [by, ey] : y.exp)
            for (const auto& [bz, ez] : z.exp) add_wedge(out, WedgeKey<3>{{bx, by, bz}}, ex * ey * ez);
    return out;
}

// Lambda^2 F* tensor F*: wedge part as above, tensor leg a single basis
// irreducible (the tensor is additive in the multiplicative leg, so legs
// split over the basis; unit signs are torsion and vanish).
struct TensorW2FKey {
    WedgeKey<2> w;
    BasisKey leg;
    friend bool operator<(const TensorW2FKey& a, const TensorW2FKey& b) {
        if (!(a.w == b.w)) return a.w < b.w;
        return a.leg < b.leg;
    }
    friend bool operator==(const TensorW2FKey& a, const TensorW2FKey& b) { return a.w == b.w && a.leg == b.leg; }

    std::string str() const { return w.str() + " \xE2\x8A\x97 " + leg.str(); } // " ⊗ "
};

using TensorW2F = FormalSum<TensorW2FKey>;

// (x ^ y) tensor z, expanded multilinearly in all three slots.
inline void add_tensor_w2f(TensorW2F& out, const Factored& x, const Factored& y, const Factored& z, long long coeff) {
    for (const auto& [bx, ex] : x.exp)
        for (const auto& [by, ey] : y.exp) {
            WedgeKey<2> k{{bx, by}};
            int s = normalize_wedge_key(k);
            if (s == 0) continue;
            for (const auto& [bz, ez] : z.exp) out.add(TensorW2FKey{k, bz}, coeff * s * ex * ey * ez);
        }
}

} // namespace eklab
