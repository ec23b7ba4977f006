#pragma once

#include "eklab/elliptic/regulator.hpp"

namespace eklab {

// Desk-scale instance of the analytic identity
//   integral log|g| alpha(1-f, f) ^ conj(omega)  =  B * K_3(div g, div f, div(1-f))
// with the three C-constants corrected explicitly:
//   corrected = I - C_g * int alpha(1-f,f) ^ conj(omega)
//                 - int (log|g| - C_g)(C_{1-f} dlog|f| - C_f dlog|1-f|) ^ conj(omega),
// where C_h is the zero-mode of log|h|. The identity in this corrected
// form is condition-free; when the weight-3 side condition holds the
// corrections vanish on their own. The same sweep also produces the
// Stokes integrals (d L_2(f) ^ omega and alpha(1-f,f) log|f| ^ omega).
struct AnalyticLatticeComparison {
    // integrals
    Complex I_conj, I_holo;
    Real I_est;
    Complex stokes_dl2;      // int d L_2(f) ^ omega
    Real stokes_dl2_est;
    Complex stokes_alpha_logf; // int alpha(1-f,f) log|f| ^ omega
    Real stokes_alpha_logf_est;
    Complex corr_alpha;      // C_g * int alpha ^ conj(omega)
    Real corr_alpha_est;
    Complex corr_mixed;      // mixed C_f / C_{1-f} correction
    Real corr_mixed_est;
    Complex I_corrected;
    // constants
    Real C_f, C_omf, C_g;
    // lattice side
    Complex K_direct, K_half_radius, K_convolution;
    Real K_stability; // |K_direct - K_half_radius|
    Complex bridged;  // uhhh_bridge * K_direct
    Real rel_diff;    // |I_corrected - bridged| / |bridged|
    Real route_diff;  // |K_direct - K_convolution|
};

struct ComparisonParams {
    Real plan_radius = Real(30L);
    long quad_N = 128;
    Real eps = Real("1e-5");
    Real annulus = Real(0.045);
    long cf_grid = 96;
    unsigned threads = 2;
    bool with_convolution = true;
};

inline AnalyticLatticeComparison run_analytic_lattice_comparison(const Lattice& L, const SigmaQuotient& f,
                                                                 const Divisor& div_f, const Divisor& div_omf,
                                                                 const SigmaQuotient& g, const Divisor& div_g,
                                                                 const ComparisonParams& prm) {
    AnalyticLatticeComparison out;

    // C-constants (tiny skip radius: only exact support hits are dropped)
    Real skip("1e-12");
    out.C_f = cf_constant(L, f, prm.cf_grid, skip).value;
    out.C_g = cf_constant(L, g, prm.cf_grid, skip).value;
    out.C_omf = cf_constant_fn(
                    L, [&f](const Complex& w) { return log(abs(Complex(1L) - f.at(w).value)); }, div_omf,
                    prm.cf_grid, skip)
                    .value;

    // one quadrature sweep for all densities
    std::vector<Complex> sing = divisor_support(L, {&div_f, &div_omf, &div_g});
    TorusQuadrature quad(L, sing, prm.eps, prm.annulus);
    Real oc = omega_coefficient(L);
    const Real& Cf = out.C_f;
    const Real& Comf = out.C_omf;
    const Real& Cg = out.C_g;

    auto densities = [&](const Complex& w, std::vector<Complex>& vals) {
        FnPoint fp = f.at(w);
        FnPoint gp = g.at(w);
        FnPoint omf = one_minus(fp);
        Tangent t1 = {Complex(1L)}, ti = {Complex::i_unit()};
        Real lg = gp.log_abs();
        Real lf = fp.log_abs();
        Real lo = omf.log_abs();
        Real a1 = alpha_form(omf, fp, t1);
        Real ai = alpha_form(omf, fp, ti);
        // main integrand, both pairings
        vals[0] = wedge_density(Complex(lg * a1), Complex(lg * ai), oc, OmegaPairing::Conjugate);
        vals[1] = wedge_density(Complex(lg * a1), Complex(lg * ai), oc, OmegaPairing::Holomorphic);
        // alpha alone against conj(omega) (the C_g correction)
        vals[2] = wedge_density(Complex(a1), Complex(ai), oc, OmegaPairing::Conjugate);
        // mixed correction: (log|g| - C_g)(C_omf dlog|f| - C_f dlog|1-f|)
        Real m1 = Comf * dlog_abs(fp, t1) - Cf * dlog_abs(omf, t1);
        Real mi = Comf * dlog_abs(fp, ti) - Cf * dlog_abs(omf, ti);
        Real w0 = lg - Cg;
        vals[3] = wedge_density(Complex(w0 * m1), Complex(w0 * mi), oc, OmegaPairing::Conjugate);
        // Stokes: d L_2(f) ^ omega
        Real d1 = -lo * darg(fp, t1) + lf * darg(omf, t1);
        Real di = -lo * darg(fp, ti) + lf * darg(omf, ti);
        vals[4] = wedge_density(Complex(d1), Complex(di), oc, OmegaPairing::Holomorphic);
        // alpha(1-f,f) log|f| ^ omega
        vals[5] = wedge_density(Complex(lf * a1), Complex(lf * ai), oc, OmegaPairing::Holomorphic);
    };
    std::vector<QuadratureResult> r = quad.run_multi(densities, 6, prm.quad_N);
    out.I_conj = r[0].value;
    out.I_holo = r[1].value;
    out.I_est = r[0].error_estimate;
    out.corr_alpha = Cg * r[2].value;
    out.corr_alpha_est = abs(Cg) * r[2].error_estimate;
    out.corr_mixed = r[3].value;
    out.corr_mixed_est = r[3].error_estimate;
    out.stokes_dl2 = r[4].value;
    out.stokes_dl2_est = r[4].error_estimate;
    out.stokes_alpha_logf = r[5].value;
    out.stokes_alpha_logf_est = r[5].error_estimate;
    out.I_corrected = out.I_conj - out.corr_alpha - out.corr_mixed;

    // lattice side: direct at R and R/2, plus the convolution route
    TruncationPlan plan = TruncationPlan::build(L, prm.plan_radius);
    TruncationPlan half = TruncationPlan::build(L, prm.plan_radius / Real(2L));
    out.K_direct = ek3_divisor_sum(L, plan, div_g, div_f, div_omf, prm.threads);
    out.K_half_radius = ek3_divisor_sum(L, half, div_g, div_f, div_omf, prm.threads);
    out.K_stability = abs(out.K_direct - out.K_half_radius);
    if (prm.with_convolution) {
        out.K_convolution = ek3_convolution(L, plan, div_g, div_f, div_omf);
        out.route_diff = abs(out.K_direct - out.K_convolution);
    } else {
        out.K_convolution = Complex(0L);
        out.route_diff = Real(0L);
    }
    out.bridged = uhhh_bridge(L) * out.K_direct;
    out.rel_diff = abs(out.I_corrected - out.bridged) / abs(out.bridged);
    return out;
}

} // namespace eklab
