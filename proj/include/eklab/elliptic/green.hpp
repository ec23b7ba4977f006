#pragma once

#include <thread>

#include "eklab/elliptic/theta.hpp"

namespace eklab {

// Green-type lattice sums. green() is the plain plan-ordered sum
// sum'_{0 < |gamma| <= R} (z, gamma) / |gamma|^2 (real and even in z up to
// rounding, by the gamma <-> -gamma pairing). The normalized Green's
// function with log|z| behavior at the origin is (A(Gamma)/2) * green().
inline Complex green(const Lattice& L, const TruncationPlan& plan, const Complex& z) {
    auto [s0, t0] = L.coordinates(z);
    if (abs(s0 - floor(s0 + Real(0.5))) < pow2(-60) && abs(t0 - floor(t0 + Real(0.5))) < pow2(-60))
        throw DegenerateInput("green: z on the lattice (logarithmic singularity)");
    // phase(m, n) = m phase_u + n phase_v
    Real pu = pairing_phase(L, z, L.u);
    Real pv = pairing_phase(L, z, L.v);
    Complex acc(0L);
    Real s, c;
    for (const auto& e : plan.entries) {
        sin_cos(s, c, pu * e.m + pv * e.n);
        acc.re += c * e.recip_norm2;
        acc.im += s * e.recip_norm2;
    }
    return acc;
}

// Values of the truncated series sum_j d_j (w, gamma_j) on the uniform
// N x N midpoint-offset grid w_{jk} = ((j+off)/N) u + ((k+off)/N) v.
// On this grid (w, gamma) = exp(2 pi i ((k+off) m - (j+off) n)/N); folding
// the coefficients modulo N reduces the evaluation to two O(N^3) passes.
// off is given in units of 1/N (0 for corner grids, 1/2 for midpoints,
// realized exactly by doubling to a 2N lattice).
class GridSeries {
  public:
    // grid value indexed [j][k]
    static std::vector<std::vector<Complex>> evaluate(const TruncationPlan& plan,
                                                      const std::vector<Complex>& coeffs, long N,
                                                      bool midpoint_offset) {
        // fold: W[a][b] = sum of coeffs with (m mod N, n mod N) = (a, b),
        // each multiplied by the offset phase exp(2 pi i (m - n) off / N)
        std::vector<std::vector<Complex>> W(static_cast<std::size_t>(N),
                                            std::vector<Complex>(static_cast<std::size_t>(N), Complex(0L)));
        // root table for exp(2 pi i r / (2N)) handles half-offsets exactly
        const long twoN = 2 * N;
        std::vector<Complex> roots(static_cast<std::size_t>(twoN));
        {
            Real two_pi = Real(2L) * Real::pi();
            for (long r = 0; r < twoN; ++r) {
                Real s, c;
                sin_cos(s, c, two_pi * Real(r) / Real(twoN));
                roots[static_cast<std::size_t>(r)] = Complex(std::move(c), std::move(s));
            }
        }
        auto root = [&](long r) -> const Complex& {
            r %= twoN;
            if (r < 0) r += twoN;
            return roots[static_cast<std::size_t>(r)];
        };
        for (std::size_t i = 0; i < plan.entries.size(); ++i) {
            const auto& e = plan.entries[i];
            long a = ((e.m % N) + N) % N;
            long b = ((e.n % N) + N) % N;
            Complex c = coeffs[i];
            if (midpoint_offset) c = c * root(e.m - e.n); // exp(2 pi i (m-n)/(2N))
            W[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] += c;
        }
        // T[a][j] = sum_b W[a][b] exp(-2 pi i j b / N)
        std::vector<std::vector<Complex>> T(static_cast<std::size_t>(N),
                                            std::vector<Complex>(static_cast<std::size_t>(N), Complex(0L)));
        for (long a = 0; a < N; ++a)
            for (long j = 0; j < N; ++j) {
                Complex acc(0L);
                for (long b = 0; b < N; ++b)
                    acc += W[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] * root(-2 * j * b);
                T[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)] = std::move(acc);
            }
        // S[j][k] = sum_a T[a][j] exp(2 pi i k a / N)
        std::vector<std::vector<Complex>> S(static_cast<std::size_t>(N),
                                            std::vector<Complex>(static_cast<std::size_t>(N), Complex(0L)));
        for (long j = 0; j < N; ++j)
            for (long k = 0; k < N; ++k) {
                Complex acc(0L);
                for (long a = 0; a < N; ++a)
                    acc += T[static_cast<std::size_t>(a)][static_cast<std::size_t>(j)] * root(2 * k * a);
                S[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] = std::move(acc);
            }
        return S;
    }
};

// per-plan-entry coefficients sum_i alpha_i conj((x_i, gamma_j)) / |gamma_j|^2,
// so that sum_j coeff_j (z, gamma_j) = sum_i alpha_i G(z - x_i)
inline std::vector<Complex> green_sum_coefficients(const Lattice& L, const TruncationPlan& plan,
                                                   const Divisor& d) {
    std::vector<Complex> out;
    out.reserve(plan.entries.size());
    for (const auto& e : plan.entries) {
        Complex acc(0L);
        for (const auto& [x, m] : d.terms) {
            if (m == 0) continue;
            acc += conj(pairing(L, x, e.gamma)) * m;
        }
        out.push_back(acc * e.recip_norm2);
    }
    return out;
}

struct FourierVarianceResult {
    Real variance;
    Real mean;
    long used_points;
    long skipped_points;
};

// Grid variance of log|f| - (A/2) sum_i alpha_i G(z - x_i) over the N x N
// midpoint grid, skipping points too close to the divisor support. As the
// truncation radius grows the difference tends to the constant C_f and the
// variance to 0.
inline FourierVarianceResult fourier_variance(const Lattice& L, const SigmaQuotient& f, const TruncationPlan& plan,
                                              long N, const Real& skip_radius) {
    std::vector<Complex> coeffs = green_sum_coefficients(L, plan, f.divisor);
    auto S = GridSeries::evaluate(plan, coeffs, N, true);
    Real half_area = L.area_const() / Real(2L);
    Real sum(0L), sum2(0L);
    long used = 0, skipped = 0;
    for (long j = 0; j < N; ++j)
        for (long k = 0; k < N; ++k) {
            Real s = (Real(j) + Real(0.5)) / Real(N);
            Real t = (Real(k) + Real(0.5)) / Real(N);
            Complex w = L.u * s + L.v * t;
            bool near = false;
            for (const auto& [x, m] : f.divisor.terms) {
                if (m == 0) continue;
                Complex dver = L.reduce(w - x);
                // distance to nearest lattice translate of x
                Real dmin = abs(dver);
                for (long dm = -1; dm <= 0; ++dm)
                    for (long dn = -1; dn <= 0; ++dn) {
                        Real alt = abs(dver + L.point(dm, dn));
                        if (alt < dmin) dmin = alt;
                    }
                if (dmin < skip_radius) near = true;
            }
            if (near) {
                ++skipped;
                continue;
            }
            Real e = f.log_abs(w) - half_area * S[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)].re;
            sum += e;
            sum2 += e * e;
            ++used;
        }
    Real mean = sum / Real(used);
    Real var = sum2 / Real(used) - mean * mean;
    return {std::move(var), std::move(mean), used, skipped};
}

// C_f estimate: grid average of log|f| (the oscillating part has zero
// mean); grid points on or near the divisor support are skipped and
// logged. The generic overload takes any log|f| evaluator with its
// singular support (for functions like 1 - f derived from a quotient).
struct CfResult {
    Real value;
    long used_points;
    long skipped_points;
};

template <typename LogAbsFn>
CfResult cf_constant_fn(const Lattice& L, LogAbsFn&& log_abs, const Divisor& support, long N,
                        const Real& skip_radius) {
    Real sum(0L);
    long used = 0, skipped = 0;
    for (long j = 0; j < N; ++j)
        for (long k = 0; k < N; ++k) {
            Real s = (Real(j) + Real(0.5)) / Real(N);
            Real t = (Real(k) + Real(0.5)) / Real(N);
            Complex w = L.u * s + L.v * t;
            bool near = false;
            for (const auto& [x, m] : support.terms) {
                if (m == 0) continue;
                Complex dver = L.reduce(w - x);
                Real dmin = abs(dver);
                for (long dm = -1; dm <= 0; ++dm)
                    for (long dn = -1; dn <= 0; ++dn) {
                        Real alt = abs(dver + L.point(dm, dn));
                        if (alt < dmin) dmin = alt;
                    }
                if (dmin < skip_radius) near = true;
            }
            if (near) {
                ++skipped;
                continue;
            }
            sum += log_abs(w);
            ++used;
        }
    return {sum / Real(used), used, skipped};
}

inline CfResult cf_constant(const Lattice& L, const SigmaQuotient& f, long N, const Real& skip_radius) {
    return cf_constant_fn(
        L, [&f](const Complex& w) { return f.log_abs(w); }, f.divisor, N, skip_radius);
}

} // namespace eklab
