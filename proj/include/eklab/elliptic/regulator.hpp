#pragma once

#include "eklab/elliptic/eksum.hpp"
#include "eklab/elliptic/quadrature.hpp"

namespace eklab {

// Pairing of real(-valued or complex) 1-forms against the normalized
// holomorphic form. omega = dz / sqrt(covol); the (1,0)/(0,1) components
// of a 1-form F (given by its values on the tangents 1 and i) are
//   P = (F(1) - i F(i))/2,   Q = (F(1) + i F(i))/2,
// and against the Lebesgue density dA
//   F ^ omega      = 2 i c Q dA,     F ^ conj(omega) = -2 i c P dA.
enum class OmegaPairing { Holomorphic, Conjugate };

inline Complex wedge_density(const Complex& F1, const Complex& Fi, const Real& omega_coef, OmegaPairing pairing) {
    Complex i_unit = Complex::i_unit();
    if (pairing == OmegaPairing::Holomorphic) {
        Complex Q = (F1 + i_unit * Fi) / Real(2L);
        return Complex(Real(0L), Real(2L) * omega_coef) * Q;
    }
    Complex P = (F1 - i_unit * Fi) / Real(2L);
    return Complex(Real(0L), Real(-2L) * omega_coef) * P;
}

inline Real omega_coefficient(const Lattice& L) { return Real(1L) / sqrt(L.covolume()); }

// Bridge constant of the analytic identity for the conjugate pairing:
//   integral log|g| alpha(1-f, f) ^ conj(omega)  =  B * K_3(div g, div f, div(1-f))
// with B = -(i/4) A(Gamma)^2 sqrt(covol), derived from the Fourier
// expansion of the three logarithms (constants corrected separately).
inline Complex uhhh_bridge(const Lattice& L) {
    Real A = L.area_const();
    return Complex(Real(0L), -(A * A * sqrt(L.covolume())) / Real(4L));
}

struct RegulatorPair {
    const SigmaQuotient* f;
    const SigmaQuotient* g;
};

// Integrand density of sum_i log|g_i| log^{n-3}|f_i| alpha(1-f_i, f_i)
// against the chosen omega pairing.
inline TorusQuadrature::Density regulator_density(const std::vector<RegulatorPair>& pairs, int n,
                                                  const Real& omega_coef, OmegaPairing pairing) {
    return [pairs, n, omega_coef, pairing](const Complex& w) -> Complex {
        Complex acc(0L);
        Tangent t1 = {Complex(1L)};
        Tangent ti = {Complex::i_unit()};
        for (const auto& pr : pairs) {
            FnPoint fp = pr.f->at(w);
            FnPoint gp = pr.g->at(w);
            FnPoint omf = one_minus(fp);
            Real weight = gp.log_abs();
            if (n > 3) weight *= pow_si(fp.log_abs(), n - 3);
            Real F1 = alpha_form(omf, fp, t1);
            Real Fi = alpha_form(omf, fp, ti);
            acc += wedge_density(Complex(weight * F1), Complex(weight * Fi), omega_coef, pairing);
        }
        return acc;
    };
}

// union of divisor supports, deduplicated modulo the lattice
inline std::vector<Complex> divisor_support(const Lattice& L, std::initializer_list<const Divisor*> ds) {
    std::vector<Complex> pts;
    Real tol = pow2(-40);
    for (const Divisor* d : ds)
        for (const auto& [x, m] : d->terms) {
            if (m == 0) continue;
            bool dup = false;
            for (const auto& p : pts) {
                Complex diff = L.reduce(x - p);
                Real dist = abs(diff);
                for (long dm = -1; dm <= 0; ++dm)
                    for (long dn = -1; dn <= 0; ++dn) {
                        Real alt = abs(diff + L.point(dm, dn));
                        if (alt < dist) dist = alt;
                    }
                if (dist < tol) dup = true;
            }
            if (!dup) pts.push_back(x);
        }
    return pts;
}

struct RegulatorIntegral {
    Complex value;
    Real error_estimate;
};

// Direct quadrature of the regulator integrand; singular points must cover
// the divisors of f_i, 1 - f_i and g_i.
inline RegulatorIntegral regulator_integral(const Lattice& L, const std::vector<RegulatorPair>& pairs, int n,
                                            const std::vector<Complex>& singular, const Real& eps,
                                            const Real& annulus_out, long N, OmegaPairing pairing) {
    TorusQuadrature quad(L, singular, eps, annulus_out);
    auto density = regulator_density(pairs, n, omega_coefficient(L), pairing);
    QuadratureResult r = quad.run(density, N);
    return {r.value, r.error_estimate};
}

// q = 1 value of the lattice-sum side:
//   (2 pi A / f_E)^{n-1} * Omega * sum_i K_n(x_i, y_i, z_i).
struct DeningerData {
    std::vector<Divisor> xs, ys, zs; // divisors of g_i, f_i, 1 - f_i
};

inline Complex deninger_rhs(const Lattice& L, const TruncationPlan& plan, const DeningerData& data, long f_E,
                            const Real& Omega, int n, unsigned threads = 2) {
    if (data.xs.size() != data.ys.size() || data.xs.size() != data.zs.size())
        throw DegenerateInput("deninger_rhs: ragged divisor data");
    Complex sum(0L);
    for (std::size_t i = 0; i < data.xs.size(); ++i) {
        if (n == 3) {
            sum += ek3_divisor_sum(L, plan, data.xs[i], data.ys[i], data.zs[i], threads);
        } else {
            // multilinear expansion over the supports for n > 3
            for (const auto& [x, mx] : data.xs[i].terms)
                for (const auto& [y, my] : data.ys[i].terms)
                    for (const auto& [z, mz] : data.zs[i].terms) {
                        long mult = mx * my * mz;
                        if (mult == 0) continue;
                        sum += ek_sum(L, plan, n, x, y, z, threads) * mult;
                    }
        }
    }
    Real factor = pow_si(Real(2L) * Real::pi() * L.area_const() / Real(f_E), n - 1) * Omega;
    return sum * factor;
}

} // namespace eklab
