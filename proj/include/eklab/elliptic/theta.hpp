#pragma once

#include "eklab/elliptic/lattice.hpp"
#include "eklab/polylog/forms.hpp"

namespace eklab {

// Odd Jacobi theta block for the lattice Z u + Z v:
//   B(z) = theta_1(pi z / v | tau),  tau = u / v,
// with simple zeros exactly on the lattice. A degree-0 divisor whose
// weighted representative sum is exactly 0 in C makes the block quotient
// exactly doubly periodic (the quasi-period factors cancel).
struct ThetaBlock {
    Lattice L;
    Complex tau;        // u/v, Im > 0
    Complex pi_over_v;  // pi / v
    std::vector<Complex> qpow; // (-1)^k exp(i pi tau (k+1/2)^2), precomputed

    static ThetaBlock make(const Lattice& L) {
        ThetaBlock t{L, Complex(0L), Complex(0L), {}};
        t.tau = L.u / L.v;
        Real pi = Real::pi();
        t.pi_over_v = Complex(pi) / L.v;
        Complex ipitau = Complex(0L, Real(1L)) * t.tau * pi;
        const Real tol = pow2(-static_cast<long>(precision::working_bits()) - 64);
        for (long k = 0;; ++k) {
            Complex e = exp(ipitau * Real((2 * k + 1) * (2 * k + 1)) / Real(4L));
            if (k % 2 == 1) e = -e;
            bool tiny = abs(e) < tol;
            t.qpow.push_back(std::move(e));
            if (tiny && k >= 4) break;
            if (k > 400) throw DegenerateInput("theta nome too close to 1");
        }
        return t;
    }

    // theta_1(w) = 2 sum_{k>=0} (-1)^k q^{(k+1/2)^2} sin((2k+1) w)
    // and its logarithmic derivative; sin/cos of the odd multiples run on
    // a power recurrence of exp(i w).
    void theta1(const Complex& w, Complex& value, Complex& dlog) const {
        const Real tol = pow2(-static_cast<long>(precision::working_bits()) - 12);
        // ep = exp(i w)
        Real mag = exp(-w.im);
        Real s, c;
        sin_cos(s, c, w.re);
        Complex ep(mag * c, mag * s);
        Complex em = conj(ep) / norm(ep); // 1/ep
        Complex ep2 = ep * ep, em2 = em * em;
        Complex p = ep, q = em; // ep^{2k+1}, em^{2k+1}
        Complex half_i(Real(0L), Real(1L) / Real(2L));
        Complex sum(0L), dsum(0L);
        Real max_mag(0L);
        for (std::size_t k = 0; k < qpow.size(); ++k) {
            Complex diff = p - q;
            Complex tot = p + q;
            Complex sinw(diff.im / Real(2L), -diff.re / Real(2L)); // (p - q) / (2i)
            Complex cosw = tot / Real(2L);
            Complex term = qpow[k] * sinw;
            Complex dterm = qpow[k] * cosw * Real(static_cast<long>(2 * k + 1));
            sum += term;
            dsum += dterm;
            Real m = abs(term) + abs(dterm);
            if (m > max_mag) max_mag = m;
            if (k >= 3 && m < tol * (max_mag + Real(1L))) break;
            p *= ep2;
            q *= em2;
        }
        value = Real(2L) * sum;
        dlog = dsum / sum; // d/dw log theta_1; factor 2 cancels
    }

    // block value and dlog with respect to z
    void block(const Complex& z, Complex& value, Complex& dlog_z) const {
        Complex w = pi_over_v * z;
        Complex val, dl;
        theta1(w, val, dl);
        value = val;
        dlog_z = pi_over_v * dl;
    }
};

// Meromorphic function on C/Gamma with prescribed degree-0 divisor, built
// as a product of translated theta blocks (times an optional reported
// scale). Exact double periodicity requires the weighted representative
// sum to be exactly zero; make() fixes the representatives accordingly.
struct SigmaQuotient {
    ThetaBlock theta;
    Divisor divisor;   // adjusted representatives
    Complex scale = Complex(1L);

    static SigmaQuotient make(const Lattice& L, Divisor d, const Real& lattice_tol) {
        if (d.degree() != 0) throw DegenerateInput("sigma quotient: divisor degree must be 0");
        SigmaQuotient f{ThetaBlock::make(L), {}, Complex(1L)};
        // weighted sum must be a lattice element; shift one representative
        Complex s = d.weighted_sum();
        auto [cs, ct] = L.coordinates(s);
        Real rs = floor(cs + Real(0.5)), rt = floor(ct + Real(0.5));
        Complex delta = s - L.u * rs.to_long() - L.v * rt.to_long();
        if (!(abs(delta) < lattice_tol))
            throw DegenerateInput("sigma quotient: weighted divisor sum is not a lattice element");
        long pm = rs.to_long(), pn = rt.to_long();
        if (pm != 0 || pn != 0) {
            // split one multiplicity-carrying point and shift the split-off
            // representative by the lattice vector (same divisor on the torus)
            bool done = false;
            for (auto& [z, m] : d.terms) {
                if (m == 0 || done) continue;
                long sgn = m > 0 ? 1 : -1;
                Complex shifted = z - (L.point(pm, pn) * Real(static_cast<long>(sgn)));
                m -= sgn;
                d.terms.push_back({shifted, sgn});
                done = true;
            }
            if (!done) throw DegenerateInput("sigma quotient: empty divisor cannot absorb the lattice shift");
        }
        f.divisor = std::move(d);
        return f;
    }

    // function data at z; z must avoid the divisor support
    FnPoint at(const Complex& z) const {
        Complex value = scale;
        Complex dlog(0L);
        for (const auto& [x, m] : divisor.terms) {
            if (m == 0) continue;
            Complex bv, bd;
            theta.block(z - x, bv, bd);
            if (bv.is_zero()) throw DegenerateInput("sigma quotient evaluated on its divisor");
            value *= pow_si(bv, m);
            dlog += bd * m;
        }
        return FnPoint{std::move(value), {std::move(dlog)}};
    }

    Real log_abs(const Complex& z) const { return at(z).log_abs(); }
};

// f = (P(z) - P(a)) / (P(z) - P(b)) as a normalized theta quotient:
//   div f = (a) + (-a) - (b) - (-b),  div(1 - f) = 2(0) - (b) - (-b),
// pinned by f(0) = 1. The normalization is reported in `scale`.
struct WeierstrassRatio {
    SigmaQuotient f;
    Divisor div_f, div_one_minus_f;

    static WeierstrassRatio make(const Lattice& L, const Complex& a, const Complex& b, const Real& lattice_tol) {
        Divisor d;
        d.terms = {{a, 1}, {-a, 1}, {b, -1}, {-b, -1}};
        SigmaQuotient raw = SigmaQuotient::make(L, d, lattice_tol);
        // normalize so that f(0) = 1 exactly; then 1 - f has a double zero
        // at 0 and simple poles at +-b
        Complex f0 = raw.at(Complex(0L)).value;
        raw.scale = Complex(1L) / f0;
        WeierstrassRatio out{std::move(raw), {}, {}};
        out.div_f.terms = {{a, 1}, {-a, 1}, {b, -1}, {-b, -1}};
        out.div_one_minus_f.terms = {{Complex(0L), 2}, {b, -1}, {-b, -1}};
        return out;
    }
};

// Asymmetric test pair from the three-term product identity
//   T1 + T2 + T3 = 0,
//   T1 = s(2z+s) s(-s) s(u+v) s(u-v),
//   T2 = s(z+v) s(z-v) s(z+s+u) s(z+s-u),
//   T3 = s(z+u) s(z-u) s(z+s+v) s(z+s-v),
// specialized at x = z, y = z+s. Both f := -T2/T3 (suitably scaled) and
// 1 - f = (const) T1/T3 are degree-4 quotients with explicitly known
// divisors, and for s outside the 2-torsion the divisors have no central
// symmetry, so the triple lattice sums of the pair are genuinely nonzero.
// The scale is pinned by f(-s/2) = 1 (a zero of T1) and reported.
struct ThreeTermRatio {
    SigmaQuotient f;
    Divisor div_f, div_one_minus_f;

    static ThreeTermRatio make(const Lattice& L, const Complex& s, const Complex& u, const Complex& v,
                               const Real& lattice_tol) {
        Divisor d;
        d.terms = {{-v, 1},     {v, 1},      {-s - u, 1}, {-s + u, 1},
                   {-u, -1},    {u, -1},     {-s - v, -1}, {-s + v, -1}};
        SigmaQuotient raw = SigmaQuotient::make(L, d, lattice_tol);
        Complex zstar = -(s / Real(2L));
        Complex at_star = raw.at(zstar).value;
        if (at_star.is_zero()) throw DegenerateInput("three-term ratio: degenerate parameters");
        raw.scale = Complex(1L) / at_star;

        ThreeTermRatio out{std::move(raw), {}, {}};
        out.div_f = d;
        // zeros of T1 in z: (-s + gamma)/2 over gamma in halves of the cell
        out.div_one_minus_f.terms = {{zstar, 1},
                                     {zstar + L.u / Real(2L), 1},
                                     {zstar + L.v / Real(2L), 1},
                                     {zstar + (L.u + L.v) / Real(2L), 1},
                                     {-u, -1},
                                     {u, -1},
                                     {-s - v, -1},
                                     {-s + v, -1}};
        // self-check: 1 - f vanishes at every T1 zero
        for (const auto& [z0, m] : out.div_one_minus_f.terms) {
            if (m < 0) continue;
            Complex w = Complex(1L) - out.f.at(z0).value;
            if (!(abs(w) < Real("1e-25"))) throw DegenerateInput("three-term ratio: identity check failed");
        }
        return out;
    }
};

} // namespace eklab
