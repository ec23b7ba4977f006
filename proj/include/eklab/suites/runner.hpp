#pragma once

#include "eklab/suites/numeric.hpp"

namespace eklab::suites {

// Descriptor schema violations (unknown fields, bad types) are reported
// distinctly from check failures: the driver maps them to exit code 2.
struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

inline void reject_unknown_fields(const nlohmann::json& obj, std::initializer_list<const char*> allowed,
                                  const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* a : allowed)
            if (it.key() == a) ok = true;
        if (!ok) throw SchemaError("unknown field '" + it.key() + "' in " + where);
    }
}

inline long get_long(const nlohmann::json& p, const char* key, long dflt) {
    if (!p.contains(key)) return dflt;
    if (!p[key].is_number_integer()) throw SchemaError(std::string("field '") + key + "' must be an integer");
    return p[key].get<long>();
}

inline Real get_real(const nlohmann::json& p, const char* key, const Real& dflt) {
    if (!p.contains(key)) return dflt;
    if (p[key].is_number()) return Real(p[key].get<double>());
    if (p[key].is_string()) {
        const std::string s = p[key].get<std::string>();
        // exact rationals ("1/3") or decimal strings
        auto slash = s.find('/');
        if (slash != std::string::npos) {
            Rational q(s);
            q.canonicalize();
            return to_real(q);
        }
        return Real(s.c_str());
    }
    throw SchemaError(std::string("field '") + key + "' must be a number or numeric string");
}

inline std::string get_string(const nlohmann::json& p, const char* key, const std::string& dflt) {
    if (!p.contains(key)) return dflt;
    if (!p[key].is_string()) throw SchemaError(std::string("field '") + key + "' must be a string");
    return p[key].get<std::string>();
}

inline Complex parse_point(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2) throw SchemaError("point must be [re, im]");
    nlohmann::json wrap;
    wrap["re"] = j[0];
    wrap["im"] = j[1];
    return Complex(get_real(wrap, "re", Real(0L)), get_real(wrap, "im", Real(0L)));
}

inline Divisor parse_divisor(const nlohmann::json& j) {
    if (!j.is_array()) throw SchemaError("divisor must be an array of [re, im, multiplicity]");
    Divisor d;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3) throw SchemaError("divisor term must be [re, im, multiplicity]");
        nlohmann::json wrap;
        wrap["re"] = t[0];
        wrap["im"] = t[1];
        if (!t[2].is_number_integer()) throw SchemaError("divisor multiplicity must be an integer");
        d.terms.push_back({Complex(get_real(wrap, "re", Real(0L)), get_real(wrap, "im", Real(0L))),
                           t[2].get<long>()});
    }
    return d;
}

// "lattice" is either a named lattice or {"u": [re, im], "v": [re, im]}
inline Lattice parse_lattice(const nlohmann::json& params) {
    if (!params.contains("lattice")) return lattice_from_name("square");
    const auto& j = params["lattice"];
    if (j.is_string()) return lattice_from_name(j.get<std::string>());
    if (j.is_object()) {
        reject_unknown_fields(j, {"u", "v"}, "lattice");
        if (!j.contains("u") || !j.contains("v")) throw SchemaError("lattice object needs 'u' and 'v'");
        return Lattice::make(parse_point(j["u"]), parse_point(j["v"]));
    }
    throw SchemaError("field 'lattice' must be a name or an object with periods");
}

inline std::vector<std::pair<std::string, std::string>> list_suites() {
    return {
        {"identities", "exact configuration-complex, five-term, residue and determinant identity checks"},
        {"polylog", "multiprecision polylogarithm anchors, functional equations, differential identities"},
        {"ek-sum", "lattice pairing and generalized Eisenstein-Kronecker sum checks"},
        {"green", "Green-function sums, theta quotients, Fourier-expansion variance, C_f constants"},
        {"regulator", "torus quadrature, Stokes checks, analytic-versus-lattice comparison"},
        {"deninger-rhs", "lattice-sum side of the L-value formula from divisor data (q = 1 normalization)"},
    };
}

inline Report run_suite(const std::string& kind, std::uint64_t seed, const nlohmann::json& params) {
    if (kind == "identities") {
        reject_unknown_fields(params,
                              {"det_identity_count", "det_identity_dim4_count", "five_term_count",
                               "chain45_count", "chain56_count", "residue_count", "entry_bound"},
                              "identities params");
        return run_identities(seed, get_long(params, "det_identity_count", 120),
                              get_long(params, "det_identity_dim4_count", 30),
                              get_long(params, "five_term_count", 60), get_long(params, "chain45_count", 15),
                              get_long(params, "chain56_count", 4), get_long(params, "residue_count", 24),
                              get_long(params, "entry_bound", 20));
    }
    if (kind == "polylog") {
        reject_unknown_fields(params, {"bloch_wigner_count", "five_term_count"}, "polylog params");
        return run_polylog(seed, get_long(params, "bloch_wigner_count", 30),
                           get_long(params, "five_term_count", 20));
    }
    if (kind == "ek-sum") {
        reject_unknown_fields(params, {"lattice", "radius"}, "ek-sum params");
        return run_ek_sum(seed, parse_lattice(params), get_real(params, "radius", Real(8L)));
    }
    if (kind == "green") {
        reject_unknown_fields(params, {"lattice", "radii", "grid", "variance_threshold"}, "green params");
        std::vector<Real> radii;
        if (params.contains("radii")) {
            if (!params["radii"].is_array()) throw SchemaError("field 'radii' must be an array");
            for (const auto& r : params["radii"]) {
                nlohmann::json wrap;
                wrap["r"] = r;
                radii.push_back(get_real(wrap, "r", Real(0L)));
            }
        } else {
            radii = {Real(10L), Real(25L)};
        }
        return run_green(seed, parse_lattice(params), radii, get_long(params, "grid", 16),
                         get_real(params, "variance_threshold", Real(0.05)));
    }
    if (kind == "regulator") {
        reject_unknown_fields(params,
                              {"quad_grid", "plan_radius", "relative_tolerance", "stokes_floor",
                               "exclusion_radius", "annulus_radius"},
                              "regulator params");
        return run_regulator(seed, get_long(params, "quad_grid", 64), get_real(params, "plan_radius", Real(16L)),
                             get_real(params, "relative_tolerance", Real(0.08)),
                             get_real(params, "stokes_floor", Real(0.02)),
                             get_real(params, "exclusion_radius", Real("1e-5")),
                             get_real(params, "annulus_radius", Real(0.045)));
    }
    if (kind == "deninger-rhs") {
        reject_unknown_fields(params, {"lattice", "weight", "conductor", "real_period", "radius", "terms"},
                              "deninger-rhs params");
        DeningerDescriptorData dd;
        dd.L = parse_lattice(params);
        dd.n = static_cast<int>(get_long(params, "weight", 3));
        dd.f_E = get_long(params, "conductor", 1);
        dd.Omega = get_real(params, "real_period", Real(1L));
        dd.radius = get_real(params, "radius", Real(8L));
        if (params.contains("terms")) {
            if (!params["terms"].is_array()) throw SchemaError("field 'terms' must be an array");
            for (const auto& term : params["terms"]) {
                reject_unknown_fields(term, {"x", "y", "z"}, "deninger-rhs term");
                if (!term.contains("x") || !term.contains("y") || !term.contains("z"))
                    throw SchemaError("deninger-rhs term needs divisors x, y, z");
                dd.data.xs.push_back(parse_divisor(term["x"]));
                dd.data.ys.push_back(parse_divisor(term["y"]));
                dd.data.zs.push_back(parse_divisor(term["z"]));
            }
        }
        return run_deninger(seed, dd);
    }
    throw SchemaError("unknown suite kind: " + kind);
}

} // namespace eklab::suites
