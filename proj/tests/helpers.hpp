#pragma once

#include <catch2/catch_amalgamated.hpp>

#include "eklab/linalg/config.hpp"
#include "eklab/linalg/identities.hpp"
#include "eklab/util/rng.hpp"

namespace eklab::testing {

inline Rational random_rational(Rng& rng, long bound) {
    Rational num(rng.range(-bound, bound));
    Rational den(rng.range(1, bound));
    return num / den;
}

inline Vec random_int_vec(Rng& rng, std::size_t n, long bound) {
    Vec v(n);
    for (auto& x : v) x = Rational(rng.range(-bound, bound));
    return v;
}

inline Config random_generic_config(Rng& rng, std::size_t count, std::size_t dim, long bound) {
    for (;;) {
        Config c;
        c.reserve(count);
        for (std::size_t i = 0; i < count; ++i) c.push_back(random_int_vec(rng, dim, bound));
        if (is_generic(c, dim)) return c;
    }
}

// random GL_n(Q) matrix with small integer entries, as columns
inline std::vector<Vec> random_gl(Rng& rng, std::size_t n, long bound) {
    for (;;) {
        std::vector<Vec> g;
        for (std::size_t i = 0; i < n; ++i) g.push_back(random_int_vec(rng, n, bound));
        if (det_cols(g) != 0) return g;
    }
}

inline Vec apply_matrix(const std::vector<Vec>& cols, const Vec& v) {
    Vec out(cols[0].size(), Rational(0));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += cols[j][i] * v[j];
    return out;
}

inline Config apply_matrix(const std::vector<Vec>& g, const Config& c) {
    Config out;
    out.reserve(c.size());
    for (const auto& v : c) out.push_back(apply_matrix(g, v));
    return out;
}

// coordinates (alpha : beta) of a point p = alpha*u + beta*w on the
// projective line spanned by u, w (3-vectors)
inline ProjectivePoint line_coordinates(const Vec& p, const Vec& u, const Vec& w) {
    // pick two coordinate rows where (u,w) has full rank
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) {
            Rational det = u[i] * w[j] - u[j] * w[i];
            if (det == 0) continue;
            Rational alpha = (p[i] * w[j] - p[j] * w[i]) / det;
            Rational beta = (u[i] * p[j] - u[j] * p[i]) / det;
            return ProjectivePoint(alpha, beta);
        }
    throw DegenerateInput("line_coordinates: u, w not independent");
}

} // namespace eklab::testing
