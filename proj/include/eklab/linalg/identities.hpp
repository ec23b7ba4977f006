#pragma once

#include "eklab/linalg/config.hpp"
#include "eklab/linalg/projective.hpp"

namespace eklab {

// Defect of the determinant identity
//   D(a1,a2,b1) D(a2,a3,b2) D(a3,a1,b3) - D(a1,a2,b2) D(a2,a3,b3) D(a3,a1,b1)
//     = - D(a1,a2,a3) * D(a1 x b1, a2 x b2, a3 x b3)
// where the dual determinant is taken in standard dual coordinates. The
// orientation is pinned by the special configuration a = standard basis,
// whose left side is x3 y1 z2 - y3 z1 x2, and confirmed by the identity's
// role in the C6 chain-map reduction. Polynomial identity: degenerate
// inputs still evaluate.
inline Rational cross_det_defect3(const Vec& a1, const Vec& a2, const Vec& a3, const Vec& b1, const Vec& b2,
                                  const Vec& b3) {
    Rational lhs = det3(a1, a2, b1) * det3(a2, a3, b2) * det3(a3, a1, b3) -
                   det3(a1, a2, b2) * det3(a2, a3, b3) * det3(a3, a1, b1);
    Rational rhs = Rational(-1) * det3(a1, a2, a3) * det3(cross(a1, b1), cross(a2, b2), cross(a3, b3));
    return lhs - rhs;
}

// n-dimensional variant: with hat-determinants
//   D(hat a_i, b) := det(a_1,...,a_{i-1},a_{i+1},...,a_n,b)
// the defect of
//   prod_i D(hat a_i, b_i) - prod_i D(hat a_i, b_{i+1})
//     = s_n * D(a_1..a_n) * det( a_i x ... x a_{i+n-3} x b_{i-1} : i = 1..n )
// where the generalized cross product of n-1 vectors lands in the dual
// space and indices are cyclic. The orientation s_n in standard dual
// coordinates is -1 iff n = 1 mod 4, calibrated exactly on random
// configurations for n = 3..7; n = 3 agrees with the pairwise-shifted
// 3-dimensional form above under the relabeling b -> (b2, b3, b1).
inline Rational cross_det_defect_n(const std::vector<Vec>& a, const std::vector<Vec>& b) {
    const std::size_t n = a.size();
    if (b.size() != n || n < 3) throw DegenerateInput("cross_det_defect_n: need n >= 3 pairs");
    const int s_n = (n % 4 == 1) ? -1 : 1;

    auto hat_det = [&](std::size_t skip, const Vec& last) {
        std::vector<Vec> cols;
        cols.reserve(n);
        for (std::size_t j = 0; j < n; ++j)
            if (j != skip) cols.push_back(a[j]);
        cols.push_back(last);
        return det_cols(cols);
    };

    Rational p1(1), p2(1);
    for (std::size_t i = 0; i < n; ++i) {
        p1 *= hat_det(i, b[i]);
        p2 *= hat_det(i, b[(i + 1) % n]);
    }

    std::vector<Vec> duals;
    duals.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Vec> factors;
        factors.reserve(n - 1);
        for (std::size_t k = 0; k < n - 2; ++k) factors.push_back(a[(i + k) % n]);
        factors.push_back(b[(i + n - 1) % n]);
        duals.push_back(cross_n(factors));
    }
    Rational rhs = Rational(s_n) * det_cols(a) * det_cols(duals);
    return (p1 - p2) - rhs;
}

// Special-configuration value of the left-hand side with a = standard
// basis and b columns (x, y, z): equals x3 y1 z2 - y3 z1 x2.
inline Rational cross_det_special_monomial(const Vec& x, const Vec& y, const Vec& z) {
    return x[2] * y[0] * z[1] - y[2] * z[0] * x[1];
}

// Geometric triple ratio of a six-point configuration (a1,a2,a3,b1,b2,b3):
// with functionals f_i vanishing on the line a_i a_{i+1},
//   f1(b2) f2(b3) f3(b1) / ( f1(b3) f2(b1) f3(b2) ),
// which is invariant under rescaling of any b_j and of the f_i (degree 0).
inline Rational geometric_triple_ratio(const Vec& a1, const Vec& a2, const Vec& a3, const Vec& b1, const Vec& b2,
                                       const Vec& b3) {
    // f_i(b) realized as det(a_i, a_{i+1}, b)
    Rational num = det3(a1, a2, b2) * det3(a2, a3, b3) * det3(a3, a1, b1);
    Rational den = det3(a1, a2, b3) * det3(a2, a3, b1) * det3(a3, a1, b2);
    if (den == 0 || num == 0) throw DegenerateInput("geometric_triple_ratio: degenerate configuration");
    return num / den;
}

// Triple ratio entering the C6 map:
//   D(v1 v2 v4) D(v2 v3 v5) D(v3 v1 v6) / ( D(v1 v2 v5) D(v2 v3 v6) D(v3 v1 v4) ).
inline Rational triple_ratio6(const Config& v) {
    Rational num = det3(v[0], v[1], v[3]) * det3(v[1], v[2], v[4]) * det3(v[2], v[0], v[5]);
    Rational den = det3(v[0], v[1], v[4]) * det3(v[1], v[2], v[5]) * det3(v[2], v[0], v[3]);
    if (den == 0) throw DegenerateInput("triple_ratio6: degenerate configuration");
    return num / den;
}

// Intersection of two projective lines in P^2, each given by a pair of
// points (exact; used by the harmonic-quadruple construction in tests).
inline Vec line_intersection(const Vec& p1, const Vec& p2, const Vec& q1, const Vec& q2) {
    Vec l1 = cross(p1, p2);
    Vec l2 = cross(q1, q2);
    Vec x = cross(l1, l2);
    if (is_zero_vec(x)) throw DegenerateInput("line_intersection: coincident lines");
    return x;
}

} // namespace eklab
