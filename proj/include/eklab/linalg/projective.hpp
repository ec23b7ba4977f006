#pragma once

#include <array>

#include "eklab/linalg/vec.hpp"

namespace eklab {

// Point of P^1 as a homogeneous pair (a : b), not both zero. Equality is
// equality up to a nonzero scalar, decided by the 2x2 determinant.
struct ProjectivePoint {
    Rational a, b;

    ProjectivePoint(Rational x, Rational y) : a(std::move(x)), b(std::move(y)) {
        if (a == 0 && b == 0) throw DegenerateInput("ProjectivePoint: (0:0)");
    }
    static ProjectivePoint infinity() { return {Rational(1), Rational(0)}; }
    static ProjectivePoint affine(const Rational& x) { return {x, Rational(1)}; }

    bool is_infinity() const { return b == 0; }
    Rational affine_value() const {
        if (b == 0) throw DegenerateInput("affine_value of infinity");
        return a / b;
    }
};

inline Rational pdet(const ProjectivePoint& p, const ProjectivePoint& q) { return p.a * q.b - q.a * p.b; }

inline bool same_point(const ProjectivePoint& p, const ProjectivePoint& q) { return pdet(p, q) == 0; }

// r(x1,x2,x3,x4) = ((x1-x3)(x2-x4)) / ((x1-x4)(x2-x3)), extended
// projectively through 2x2 determinants on homogeneous coordinates.
// The convention is pinned by the calibration test against
// delta{r} = 1/2 Alt_4 {D(v1,v2) ^ D(v1,v3)} on planar configurations.
inline Rational cross_ratio(const ProjectivePoint& p1, const ProjectivePoint& p2, const ProjectivePoint& p3,
                            const ProjectivePoint& p4) {
    const std::array<const ProjectivePoint*, 4> ps{&p1, &p2, &p3, &p4};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (same_point(*ps[i], *ps[j])) throw DegenerateInput("cross_ratio: repeated points");
    return (pdet(p1, p3) * pdet(p2, p4)) / (pdet(p1, p4) * pdet(p2, p3));
}

// Cross-ratio of four 2-dimensional exact vectors read as P^1 points.
inline Rational cross_ratio_vec2(const Vec& v1, const Vec& v2, const Vec& v3, const Vec& v4) {
    auto P = [](const Vec& v) { return ProjectivePoint(v[0], v[1]); };
    return cross_ratio(P(v1), P(v2), P(v3), P(v4));
}

} // namespace eklab
