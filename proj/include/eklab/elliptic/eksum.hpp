#pragma once

#include <future>

#include "eklab/elliptic/green.hpp"

namespace eklab {

// Character tables (x, gamma_j) per plan entry, extended additively over a
// divisor: X_j = sum_i alpha_i (x_i, gamma_j).
inline std::vector<Complex> character_table(const Lattice& L, const TruncationPlan& plan, const Divisor& d) {
    std::vector<Complex> out;
    out.reserve(plan.entries.size());
    for (const auto& e : plan.entries) {
        Complex acc(0L);
        for (const auto& [x, m] : d.terms)
            if (m != 0) acc += pairing(L, x, e.gamma) * m;
        out.push_back(acc);
    }
    return out;
}

inline Divisor single_point_divisor(const Complex& x) {
    Divisor d;
    d.terms = {{x, 1}};
    return d;
}

// Truncated generalized series for n = 3:
//   sum_{gamma_1 + gamma_2 + gamma_3 = 0, 0 < |gamma_i| <= R}
//     X(gamma_1) Y(gamma_2) Z(gamma_3) (bar gamma_3 - bar gamma_2)
//       / (|gamma_1|^2 |gamma_2|^2 |gamma_3|^2)
// (gamma_1, gamma_2) run over plan entries in plan order; blocks of the
// outer index may be distributed over threads, partial sums merged in
// fixed order so the result is reproducible.
inline Complex ek3_sum_tables(const Lattice&, const TruncationPlan& plan, const std::vector<Complex>& X,
                              const std::vector<Complex>& Y, const std::vector<Complex>& Z,
                              unsigned threads = 2) {
    const TruncationPlan::Index idx = plan.make_index();
    const std::size_t n = plan.entries.size();

    auto block_sum = [&](std::size_t lo, std::size_t hi) -> Complex {
        Complex acc(0L);
        for (std::size_t i = lo; i < hi; ++i) {
            const auto& e1 = plan.entries[i];
            if (X[i].is_zero()) continue;
            Complex x_over = X[i] * e1.recip_norm2;
            for (std::size_t j = 0; j < n; ++j) {
                const auto& e2 = plan.entries[j];
                int k = idx.at(-(e1.m + e2.m), -(e1.n + e2.n));
                if (k < 0) continue;
                const auto& e3 = plan.entries[static_cast<std::size_t>(k)];
                Complex weight = conj(e3.gamma) - conj(e2.gamma);
                Complex term = x_over * Y[j] * Z[static_cast<std::size_t>(k)] * weight *
                               (e2.recip_norm2 * e3.recip_norm2);
                acc += term;
            }
        }
        return acc;
    };

    if (threads <= 1 || n < 64) return block_sum(0, n);
    const std::size_t nblocks = threads * 4;
    std::vector<std::future<Complex>> futures;
    for (std::size_t b = 0; b < nblocks; ++b) {
        std::size_t lo = n * b / nblocks, hi = n * (b + 1) / nblocks;
        futures.push_back(std::async(std::launch::async, [&, lo, hi] { return block_sum(lo, hi); }));
    }
    Complex acc(0L);
    for (auto& f : futures) acc += f.get(); // fixed merge order
    return acc;
}

inline Complex ek3_divisor_sum(const Lattice& L, const TruncationPlan& plan, const Divisor& x, const Divisor& y,
                               const Divisor& z, unsigned threads = 2) {
    return ek3_sum_tables(L, plan, character_table(L, plan, x), character_table(L, plan, y),
                          character_table(L, plan, z), threads);
}

// General-n series per the constrained-sum definition; the middle pairing
// couples y to gamma_2 + ... + gamma_{n-1}. Cost grows as the (n-1)-th
// power of the plan size; intended for small radii when n > 3.
inline Complex ek_sum(const Lattice& L, const TruncationPlan& plan, int n, const Complex& x, const Complex& y,
                      const Complex& z, unsigned threads = 2) {
    if (n < 3) throw DegenerateInput("ek_sum: weight must be >= 3");
    std::vector<Complex> X = character_table(L, plan, single_point_divisor(x));
    std::vector<Complex> Y = character_table(L, plan, single_point_divisor(y));
    std::vector<Complex> Z = character_table(L, plan, single_point_divisor(z));
    if (n == 3) return ek3_sum_tables(L, plan, X, Y, Z, threads);
    if (n != 4) throw DegenerateInput("ek_sum: weights above 4 are not provided");

    const TruncationPlan::Index idx = plan.make_index(3);
    const std::size_t sz = plan.entries.size();
    Complex acc(0L);
    for (std::size_t i = 0; i < sz; ++i) {
        const auto& e1 = plan.entries[i];
        Complex x_over = X[i] * e1.recip_norm2;
        for (std::size_t j = 0; j < sz; ++j) {
            const auto& e2 = plan.entries[j];
            Complex xy = x_over * (Y[j] * e2.recip_norm2);
            for (std::size_t k = 0; k < sz; ++k) {
                const auto& e3 = plan.entries[k];
                int l = idx.at(-(e1.m + e2.m + e3.m), -(e1.n + e2.n + e3.n));
                if (l < 0) continue;
                const auto& e4 = plan.entries[static_cast<std::size_t>(l)];
                Complex weight = conj(e4.gamma) - conj(e3.gamma);
                acc += xy * Y[k] * e3.recip_norm2 * Z[static_cast<std::size_t>(l)] * weight *
                       e4.recip_norm2;
            }
        }
    }
    return acc;
}

// Convolution route: the constraint delta is realized by integrating the
// product of truncated character series over the torus. On an N x N grid
// with N > 3 * coordinate bound the quadrature of the trigonometric
// polynomial is exact, so this equals the direct route up to rounding.
inline Complex ek3_convolution(const Lattice& L, const TruncationPlan& plan, const Divisor& dx, const Divisor& dy,
                               const Divisor& dz, long N = 0) {
    if (N == 0) N = 3 * plan.coord_bound + 2;
    std::vector<Complex> X = character_table(L, plan, dx);
    std::vector<Complex> Y = character_table(L, plan, dy);
    std::vector<Complex> Z = character_table(L, plan, dz);
    std::vector<Complex> fx(plan.entries.size()), fy(plan.entries.size()), fz(plan.entries.size()),
        gy(plan.entries.size()), gz(plan.entries.size());
    for (std::size_t j = 0; j < plan.entries.size(); ++j) {
        const auto& e = plan.entries[j];
        fx[j] = X[j] * e.recip_norm2;
        fy[j] = Y[j] * e.recip_norm2;
        fz[j] = Z[j] * e.recip_norm2;
        gy[j] = fy[j] * conj(e.gamma);
        gz[j] = fz[j] * conj(e.gamma);
    }
    auto FX = GridSeries::evaluate(plan, fx, N, false);
    auto FY = GridSeries::evaluate(plan, fy, N, false);
    auto FZ = GridSeries::evaluate(plan, fz, N, false);
    auto GY = GridSeries::evaluate(plan, gy, N, false);
    auto GZ = GridSeries::evaluate(plan, gz, N, false);
    Complex acc(0L);
    for (long j = 0; j < N; ++j)
        for (long k = 0; k < N; ++k) {
            const Complex& a = FX[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
            acc += a * (FY[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] *
                            GZ[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] -
                        GY[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] *
                            FZ[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]);
        }
    return acc / Real(N * N);
}

} // namespace eklab
