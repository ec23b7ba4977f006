#pragma once

#include <algorithm>
#include <vector>

#include "eklab/mp/complex.hpp"
#include "eklab/errors.hpp"

namespace eklab {

// Period lattice Z u + Z v with Im(u/v) > 0. The area constant
// A = (conj(u) v - u conj(v)) / (2 pi i) = Im(conj(u) v)/pi is real and
// negative under this orientation; covol = -pi A is the Lebesgue area of
// the fundamental parallelogram.
struct Lattice {
    Complex u, v;

    static Lattice make(Complex u_, Complex v_) {
        Lattice L{std::move(u_), std::move(v_)};
        Real imuv = (conj(L.u) * L.v).im; // = -Im(u conj v)
        if (!(imuv < Real(0L))) throw DegenerateInput("lattice: Im(u/v) must be positive");
        return L;
    }

    Real area_const() const { return (conj(u) * v).im / Real::pi(); } // A(Gamma), negative
    Real covolume() const { return -(conj(u) * v).im; }

    Complex point(long m, long n) const { return u * m + v * n; }

    // coordinates (s, t) with z = s u + t v
    std::pair<Real, Real> coordinates(const Complex& z) const {
        Real duv = (conj(u) * v).im;       // Im(bar u v)
        Real s = -(z * conj(v)).im / duv;  // Im(z bar v) / Im(u bar v)
        Real t = (z * conj(u)).im / duv;   // Im(bar u z) / Im(bar u v)
        return {std::move(s), std::move(t)};
    }

    // representative with lattice coordinates in [0, 1)
    Complex reduce(const Complex& z) const {
        auto [s, t] = coordinates(z);
        Real fs = s - floor(s), ft = t - floor(t);
        return u * fs + v * ft;
    }
};

// Point of C/Gamma, kept as a chosen representative plus its canonical
// reduction.
struct TorusPoint {
    Complex z;

    static TorusPoint from(const Complex& z) { return {z}; }
};

// U(1) pairing (z, gamma) = exp(A^{-1} (z bar gamma - bar z gamma));
// the exponent is 2 i Im(z bar gamma)/A, so this is a unit complex number.
inline Real pairing_phase(const Lattice& L, const Complex& z, const Complex& gamma) {
    return Real(2L) * (z * conj(gamma)).im / L.area_const();
}

inline Complex pairing(const Lattice& L, const Complex& z, const Complex& gamma) {
    Real s, c;
    sin_cos(s, c, pairing_phase(L, z, gamma));
    return {std::move(c), std::move(s)};
}

// Integer combination of torus points with multiplicities; order is the
// declaration order (deterministic sums).
struct Divisor {
    std::vector<std::pair<Complex, long>> terms; // (representative, multiplicity)

    long degree() const {
        long d = 0;
        for (const auto& [z, m] : terms) d += m;
        return d;
    }

    Complex weighted_sum() const {
        Complex acc(0L);
        for (const auto& [z, m] : terms) acc += z * m;
        return acc;
    }
};

// Symmetric shell truncation of the lattice: all gamma with 0 < |gamma| <= R,
// ordered by (|gamma|^2, m, n). gamma is included iff -gamma is.
struct TruncationPlan {
    struct Entry {
        long m, n;
        Complex gamma;
        Real norm2;
        Real recip_norm2;
    };

    Real radius;
    long coord_bound = 0; // max |m|, |n| over entries
    std::vector<Entry> entries;

    static TruncationPlan build(const Lattice& L, const Real& R) {
        TruncationPlan plan;
        plan.radius = R;
        // safe coordinate bound via the smallest Gram eigenvalue
        Real a = norm(L.u), b = (L.u * conj(L.v)).re, c = norm(L.v);
        Real tr = a + c;
        Real disc = sqrt((a - c) * (a - c) + Real(4L) * b * b);
        Real lam_min = (tr - disc) / Real(2L);
        long M = static_cast<long>((R / sqrt(lam_min)).to_double()) + 2;
        Real R2 = R * R;
        for (long m = -M; m <= M; ++m)
            for (long n = -M; n <= M; ++n) {
                if (m == 0 && n == 0) continue;
                Complex g = L.point(m, n);
                Real n2 = norm(g);
                if (n2 <= R2) {
                    plan.entries.push_back({m, n, std::move(g), n2, Real(0L)});
                    plan.coord_bound = std::max({plan.coord_bound, std::labs(m), std::labs(n)});
                }
            }
        std::sort(plan.entries.begin(), plan.entries.end(), [](const Entry& x, const Entry& y) {
            if (x.norm2 < y.norm2) return true;
            if (y.norm2 < x.norm2) return false;
            if (x.m != y.m) return x.m < y.m;
            return x.n < y.n;
        });
        for (auto& e : plan.entries) e.recip_norm2 = Real(1L) / e.norm2;
        return plan;
    }

    // index lookup by lattice coordinates; -1 when absent
    struct Index {
        long bound;
        std::vector<int> table; // (2*extent+1)^2, -1 default

        int at(long m, long n) const {
            if (std::labs(m) > bound || std::labs(n) > bound) return -1;
            return table[static_cast<std::size_t>((m + bound) * (2 * bound + 1) + (n + bound))];
        }
    };

    Index make_index(long extent_factor = 2) const {
        Index idx;
        idx.bound = coord_bound * extent_factor + 1;
        idx.table.assign(static_cast<std::size_t>(2 * idx.bound + 1) * (2 * idx.bound + 1), -1);
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const Entry& e = entries[i];
            idx.table[static_cast<std::size_t>((e.m + idx.bound) * (2 * idx.bound + 1) + (e.n + idx.bound))] =
                static_cast<int>(i);
        }
        return idx;
    }
};

// lattice area constant A(Gamma)
inline Real lattice_area(const Lattice& L) { return L.area_const(); }

} // namespace eklab
