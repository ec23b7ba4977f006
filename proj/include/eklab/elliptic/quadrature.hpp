#pragma once

#include <functional>

#include "eklab/elliptic/theta.hpp"

namespace eklab {

// Quadrature of a density h over the fundamental parallelogram with the
// Lebesgue area measure. A smooth partition of unity splits h around each
// declared logarithmic (or 1/r-type integrable) singularity: the grid part
// h * prod(1 - chi_x) is C^3-periodic and the tensor midpoint rule keeps
// high-order convergence; the patch parts h * chi_x are integrated in
// log-graded polar coordinates down to the exclusion radius eps. The
// O(eps^2 log eps) mass inside eps is not modeled; it enters the reported
// error estimate together with the mesh-refinement difference.
struct QuadratureResult {
    Complex value;
    Real error_estimate;
};

class TorusQuadrature {
  public:
    using Density = std::function<Complex(const Complex&)>;
    using MultiDensity = std::function<void(const Complex&, std::vector<Complex>&)>;

    Lattice L;
    std::vector<Complex> singular_points;
    Real eps;          // exclusion radius
    Real annulus_out;  // patch radius (cutoff support); patches must be disjoint
    long radial_nodes = 32;
    long angular_nodes = 64;

    TorusQuadrature(Lattice lat, std::vector<Complex> sing, Real eps_, Real annulus_out_)
        : L(std::move(lat)), singular_points(std::move(sing)), eps(std::move(eps_)),
          annulus_out(std::move(annulus_out_)) {
        if (singular_points.empty()) return;
        // patches must be disjoint, each containing exactly one singular
        // point (modulo the lattice)
        Real min_period = sqrt(norm(L.u));
        Real nv = sqrt(norm(L.v));
        if (nv < min_period) min_period = nv;
        if (!(annulus_out * Real(2L) < min_period))
            throw DegenerateInput("quadrature: patch radius too large for the lattice");
        for (std::size_t i = 0; i < singular_points.size(); ++i)
            for (std::size_t j = i + 1; j < singular_points.size(); ++j) {
                Real dist = torus_distance(singular_points[i], singular_points[j]);
                if (!(dist > annulus_out * Real(2L)))
                    throw DegenerateInput("quadrature: singular-point patches overlap");
            }
        if (!(eps < annulus_out / Real(4L)))
            throw DegenerateInput("quadrature: exclusion radius must be well inside the patch");
    }

    // distance from w to the nearest torus translate of x
    Real torus_distance(const Complex& w, const Complex& x) const {
        Complex d = L.reduce(w - x);
        Real best = abs(d);
        for (long dm = -1; dm <= 0; ++dm)
            for (long dn = -1; dn <= 0; ++dn) {
                Real alt = abs(d + L.point(dm, dn));
                if (alt < best) best = alt;
            }
        return best;
    }

    // C^3 cutoff: 1 on [0, 1/2], 0 on [1, inf) in units of the patch radius
    static Real cutoff(const Real& r, const Real& rho) {
        Real s = (Real(2L) * r - rho) / rho; // 0 at rho/2, 1 at rho
        if (s <= Real(0L)) return Real(1L);
        if (s >= Real(1L)) return Real(0L);
        Real s4 = s * s * s * s;
        // 1 - (35 s^4 - 84 s^5 + 70 s^6 - 20 s^7)
        return Real(1L) - s4 * (Real(35L) + s * (Real(-84L) + s * (Real(70L) - Real(20L) * s)));
    }

    // grid weight prod_x (1 - chi_x(w)); exactly 0 deep inside a patch
    Real grid_weight(const Complex& w) const {
        Real weight(1L);
        for (const auto& x : singular_points) {
            Real r = torus_distance(w, x);
            if (r >= annulus_out) continue;
            Real chi = cutoff(r, annulus_out);
            weight *= (Real(1L) - chi);
            if (weight.is_zero()) return weight;
        }
        return weight;
    }

    std::vector<QuadratureResult> run_multi(const MultiDensity& h, std::size_t count, long N) const {
        auto sweep = [&](long NN) {
            std::vector<Complex> acc(count, Complex(0L));
            std::vector<Complex> vals(count);
            Real cell_area = L.covolume() / Real(NN * NN);
            for (long j = 0; j < NN; ++j)
                for (long k = 0; k < NN; ++k) {
                    Real s = (Real(j) + Real(0.5)) / Real(NN);
                    Real t = (Real(k) + Real(0.5)) / Real(NN);
                    Complex w = L.u * s + L.v * t;
                    Real weight = grid_weight(w);
                    if (weight.is_zero()) continue;
                    h(w, vals);
                    for (std::size_t i = 0; i < count; ++i) acc[i] += vals[i] * weight;
                }
            for (auto& a : acc) a = a * cell_area;
            // polar patches with the complementary cutoff weight; the
            // radial integral runs in xi = log r (int h r dr = int h e^{2 xi} d xi)
            // with two-point Gauss nodes per cell, the angular integral by
            // the midpoint rule (periodic, spectrally accurate)
            for (const auto& x : singular_points) {
                Real dxi = log(annulus_out / eps) / Real(radial_nodes);
                Real gauss_off = dxi / (Real(2L) * sqrt(Real(3L)));
                Real log_eps = log(eps);
                for (long i = 0; i < radial_nodes; ++i) {
                    Real xi_mid = log_eps + (Real(i) + Real(0.5)) * dxi;
                    for (int node = 0; node < 2; ++node) {
                        Real xi = node == 0 ? xi_mid - gauss_off : xi_mid + gauss_off;
                        Real r = exp(xi);
                        Real chi = cutoff(r, annulus_out);
                        if (chi.is_zero()) continue;
                        Real ring_weight =
                            chi * r * r * (dxi / Real(2L)) * Real(2L) * Real::pi() / Real(angular_nodes);
                        for (long a = 0; a < angular_nodes; ++a) {
                            Real theta = (Real(a) + Real(0.5)) * Real(2L) * Real::pi() / Real(angular_nodes);
                            Real sn, cs;
                            sin_cos(sn, cs, theta);
                            Complex w = x + Complex(r * cs, r * sn);
                            h(w, vals);
                            for (std::size_t ii = 0; ii < count; ++ii) acc[ii] += vals[ii] * ring_weight;
                        }
                    }
                }
            }
            return acc;
        };
        std::vector<Complex> fine = sweep(N);
        std::vector<Complex> coarse = sweep(N / 2);
        // excluded-disk mass per density, sampled on the inner rings
        std::vector<Real> excl(count, Real(0L));
        std::vector<Complex> vals(count);
        for (const auto& x : singular_points) {
            std::vector<Real> hmax(count, Real(0L));
            for (long a = 0; a < 8; ++a) {
                Real theta = (Real(a) + Real(0.5)) * Real::pi() / Real(4L);
                Real sn, cs;
                sin_cos(sn, cs, theta);
                h(x + Complex(eps * cs, eps * sn), vals);
                for (std::size_t i = 0; i < count; ++i) {
                    Real m = abs(vals[i]);
                    if (m > hmax[i]) hmax[i] = m;
                }
            }
            for (std::size_t i = 0; i < count; ++i)
                excl[i] += Real::pi() * eps * eps * hmax[i] * (abs(log(eps)) + Real(2L));
        }
        std::vector<QuadratureResult> out(count);
        for (std::size_t i = 0; i < count; ++i) {
            out[i].value = fine[i];
            out[i].error_estimate = abs(fine[i] - coarse[i]) + excl[i];
        }
        return out;
    }

    QuadratureResult run(const Density& h, long N) const {
        auto multi = [&h](const Complex& w, std::vector<Complex>& vals) { vals[0] = h(w); };
        return run_multi(multi, 1, N)[0];
    }
};

} // namespace eklab
