#include "helpers.hpp"

#include "eklab/linalg/projective.hpp"

using namespace eklab;
using namespace eklab::testing;

namespace {

// independent cofactor-expansion oracle (first column)
Rational det3_oracle(const Vec& a, const Vec& b, const Vec& c) {
    auto minor2 = [](const Rational& p, const Rational& q, const Rational& r, const Rational& s) -> Rational {
        return p * s - q * r;
    };
    return a[0] * minor2(b[1], c[1], b[2], c[2]) - a[1] * minor2(b[0], c[0], b[2], c[2]) +
           a[2] * minor2(b[0], c[0], b[1], c[1]);
}

const Vec e1 = unit_vec(3, 0), e2 = unit_vec(3, 1), e3 = unit_vec(3, 2);

} // namespace

TEST_CASE("det3 basics and oracle") {
    CHECK(det3(e1, e2, e3) == 1);
    CHECK(det3(e1, e2, e1) == 0);
    Vec a = vec3(1, 0, 0), b = vec3(0, 0, 1), c = vec3(1, 2, 3);
    CHECK(det3(a, b, c) == -2);
    CHECK(det3(a, b, c) == det3_oracle(a, b, c));

    Rng rng(2024);
    for (int it = 0; it < 50; ++it) {
        Vec x = random_int_vec(rng, 3, 9), y = random_int_vec(rng, 3, 9), z = random_int_vec(rng, 3, 9);
        CHECK(det3(x, y, z) == det3_oracle(x, y, z));
        // alternating: swapping two arguments negates
        CHECK(det3(y, x, z) == -det3(x, y, z));
        CHECK(det3(x, z, y) == -det3(x, y, z));
        // multilinear in first slot
        Vec xs = Rational(3) * x + y;
        CHECK(det3(xs, y, z) == 3 * det3(x, y, z) + det3(y, y, z));
    }
}

TEST_CASE("cross product pairs with det3") {
    CHECK(cross(e1, e2) == e3);
    Vec a = vec3(1, 2, 3), b = vec3(4, 5, 6);
    CHECK(cross(a, a) == vec3(0, 0, 0));
    CHECK(cross(a, b) == vec3(-3, 6, -3));
    Rng rng(7);
    for (int it = 0; it < 30; ++it) {
        Vec x = random_int_vec(rng, 3, 9), y = random_int_vec(rng, 3, 9), c = random_int_vec(rng, 3, 9);
        CHECK(dot(cross(x, y), c) == det3(x, y, c));
        // bilinear, antisymmetric
        CHECK(cross(x, y) == Rational(-1) * cross(y, x));
    }
}

TEST_CASE("generic position tests") {
    CHECK(is_generic({e1, e2, e3}, 3));
    CHECK_FALSE(is_generic({e1, e2, e1 + e2}, 3));
    Config big = {e1, e2, e3, vec3(1, 2, 3), vec3(1, 1, 7)};
    // oracle: enumerate all 3-subsets
    bool all = true;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j)
            for (std::size_t k = j + 1; k < 5; ++k)
                if (det3(big[i], big[j], big[k]) == 0) all = false;
    CHECK(all);
    CHECK(is_generic(big, 3));
    // fewer vectors than the dimension: rank test
    CHECK(is_generic({e1, e1 + e2}, 3));
    CHECK_FALSE(is_generic({e1, Rational(2) * e1}, 3));
}

TEST_CASE("alternation operator") {
    Config pair = {e1, e2};
    auto constant = [](const Config&) { return Rational(5); };
    CHECK(alternation_sum<Rational>(constant, pair) == 0);

    Rng rng(11);
    Config triple = random_generic_config(rng, 3, 3, 9);
    auto det_fn = [](const Config& t) { return det3(t[0], t[1], t[2]); };
    CHECK(alternation_sum<Rational>(det_fn, triple) == 6 * det3(triple[0], triple[1], triple[2]));
    auto det_sq = [](const Config& t) -> Rational {
        Rational d = det3(t[0], t[1], t[2]);
        return d * d;
    };
    CHECK(alternation_sum<Rational>(det_sq, triple) == 0);
}

TEST_CASE("simplicial boundary") {
    Config ab = {vec3(1, 0, 0), vec3(0, 1, 0)};
    TupleSum d = boundary(ab);
    REQUIRE(d.size() == 2);
    CHECK(d.at({ab[1]}) == 1);
    CHECK(d.at({ab[0]}) == -1);

    Rng rng(13);
    for (int it = 0; it < 10; ++it) {
        Config four = random_generic_config(rng, 4, 3, 9);
        CHECK(boundary(boundary(four)).empty());
        // random formal sums
        TupleSum chain;
        add_term(chain, random_generic_config(rng, 5, 3, 5), rng.range(-3, 3));
        add_term(chain, random_generic_config(rng, 5, 3, 5), rng.range(-3, 3));
        CHECK(boundary(boundary(chain)).empty());
    }
    Config five = random_generic_config(rng, 5, 3, 9);
    CHECK(boundary(five).size() == 5);
}

TEST_CASE("cross-ratio convention and invariance") {
    Rational x(7, 3);
    CHECK(cross_ratio(ProjectivePoint::infinity(), ProjectivePoint::affine(Rational(0)),
                      ProjectivePoint::affine(Rational(1)), ProjectivePoint::affine(x)) == x);

    CHECK_THROWS_AS(cross_ratio(ProjectivePoint::affine(Rational(1)), ProjectivePoint::affine(Rational(1)),
                                ProjectivePoint::affine(Rational(2)), ProjectivePoint::affine(Rational(3))),
                    DegenerateInput);

    Rng rng(17);
    for (int it = 0; it < 30; ++it) {
        // four distinct points, occasionally including infinity
        std::vector<ProjectivePoint> ps;
        while (ps.size() < 4) {
            ProjectivePoint p = (rng.below(8) == 0) ? ProjectivePoint::infinity()
                                                    : ProjectivePoint::affine(random_rational(rng, 9));
            bool dup = false;
            for (const auto& q : ps)
                if (same_point(p, q)) dup = true;
            if (!dup) ps.push_back(p);
        }
        Rational r = cross_ratio(ps[0], ps[1], ps[2], ps[3]);
        // GL_2 action on homogeneous coordinates
        Rational m00(rng.range(-5, 5)), m01(rng.range(-5, 5)), m10(rng.range(-5, 5)), m11(rng.range(-5, 5));
        if (m00 * m11 - m01 * m10 == 0) continue;
        std::vector<ProjectivePoint> qs;
        for (const auto& p : ps) qs.emplace_back(m00 * p.a + m01 * p.b, m10 * p.a + m11 * p.b);
        CHECK(cross_ratio(qs[0], qs[1], qs[2], qs[3]) == r);
    }
}

TEST_CASE("projection to the quotient plane") {
    // apex e3: plane vectors keep their first two coordinates
    Config rest = {vec3(2, 3, 0), vec3(-1, 5, 0)};
    Config img = project_config(e3, rest);
    CHECK(img[0] == Vec{Rational(2), Rational(3)});
    CHECK(img[1] == Vec{Rational(-1), Rational(5)});

    CHECK_THROWS_AS(project_config(e3, {Rational(2) * e3}), DegenerateInput);

    Rng rng(19);
    for (int it = 0; it < 25; ++it) {
        Config c = random_generic_config(rng, 5, 3, 9);
        Config imgA = project_config(c[0], {c[1], c[2], c[3], c[4]}, ComplementChoice::FirstNonzero);
        Config imgB = project_config(c[0], {c[1], c[2], c[3], c[4]}, ComplementChoice::LastNonzero);
        Rational rA = cross_ratio_vec2(imgA[0], imgA[1], imgA[2], imgA[3]);
        Rational rB = cross_ratio_vec2(imgB[0], imgB[1], imgB[2], imgB[3]);
        CHECK(rA == rB);
    }
}

TEST_CASE("cross-determinant identity defect vanishes") {
    Rng rng(23);
    for (int it = 0; it < 200; ++it) {
        Vec a1 = random_int_vec(rng, 3, 20), a2 = random_int_vec(rng, 3, 20), a3 = random_int_vec(rng, 3, 20);
        Vec b1 = random_int_vec(rng, 3, 20), b2 = random_int_vec(rng, 3, 20), b3 = random_int_vec(rng, 3, 20);
        CHECK(cross_det_defect3(a1, a2, a3, b1, b2, b3) == 0);
    }
    // b_i = a_i: both sides vanish, defect still 0
    Vec a1 = vec3(1, 2, 3), a2 = vec3(4, 5, 7), a3 = vec3(2, 0, 1);
    CHECK(cross_det_defect3(a1, a2, a3, a1, a2, a3) == 0);

    // special configuration: a = standard basis, LHS is the stated monomial
    for (int it = 0; it < 20; ++it) {
        Vec x = random_int_vec(rng, 3, 9), y = random_int_vec(rng, 3, 9), z = random_int_vec(rng, 3, 9);
        Rational lhs = det3(e1, e2, x) * det3(e2, e3, y) * det3(e3, e1, z) -
                       det3(e1, e2, y) * det3(e2, e3, z) * det3(e3, e1, x);
        CHECK(lhs == cross_det_special_monomial(x, y, z));
    }
    // distinct-prime entries pin the two monomials symbolically
    Vec xp = vec3(2, 3, 5), yp = vec3(7, 11, 13), zp = vec3(17, 19, 23);
    CHECK(cross_det_special_monomial(xp, yp, zp) ==
          Rational(5) * 7 * 19 - Rational(13) * 17 * 3);

    // n-dimensional variant (n = 3 and n = 4 code path)
    for (int it = 0; it < 100; ++it) {
        std::vector<Vec> a, b;
        for (int i = 0; i < 3; ++i) {
            a.push_back(random_int_vec(rng, 3, 12));
            b.push_back(random_int_vec(rng, 3, 12));
        }
        CHECK(cross_det_defect_n(a, b) == 0);
    }
    for (int it = 0; it < 50; ++it) {
        std::vector<Vec> a, b;
        for (int i = 0; i < 4; ++i) {
            a.push_back(random_int_vec(rng, 4, 9));
            b.push_back(random_int_vec(rng, 4, 9));
        }
        CHECK(cross_det_defect_n(a, b) == 0);
    }
}

TEST_CASE("geometric triple ratio") {
    Rng rng(29);
    int done = 0;
    while (done < 40) {
        // flag configuration: b_i on the line a_i a_{i+1}
        Vec a1 = random_int_vec(rng, 3, 9), a2 = random_int_vec(rng, 3, 9), a3 = random_int_vec(rng, 3, 9);
        if (det3(a1, a2, a3) == 0) continue;
        Vec b1 = Rational(rng.range(1, 7)) * a1 + Rational(rng.range(1, 7)) * a2;
        Vec b2 = Rational(rng.range(1, 7)) * a2 + Rational(rng.range(1, 7)) * a3;
        Vec b3 = Rational(rng.range(1, 7)) * a3 + Rational(rng.range(1, 7)) * a1;
        Rational r;
        try {
            r = geometric_triple_ratio(a1, a2, a3, b1, b2, b3);
        } catch (const DegenerateInput&) {
            continue;
        }

        // invariant under rescaling any input vector
        CHECK(geometric_triple_ratio(a1, a2, a3, Rational(-7, 2) * b1, b2, b3) == r);
        CHECK(geometric_triple_ratio(Rational(3) * a1, a2, a3, b1, b2, Rational(5) * b3) == r);

        // cross-ratio route: equals -r(b1 | a2, a3, b2, b3)
        Config img = project_config(b1, {a2, a3, b2, b3});
        Rational rr = cross_ratio_vec2(img[0], img[1], img[2], img[3]);
        CHECK(r == -rr);
        ++done;
    }

    CHECK_THROWS_AS(geometric_triple_ratio(e1, e2, e3, e1, e2, e3), DegenerateInput);
}

TEST_CASE("harmonic quadruple from the complete quadrilateral") {
    Rng rng(31);
    int done = 0;
    while (done < 20) {
        Vec a1 = random_int_vec(rng, 3, 9), a2 = random_int_vec(rng, 3, 9), a3 = random_int_vec(rng, 3, 9);
        if (det3(a1, a2, a3) == 0) continue;
        // b1 on line a1 a2, b2 on line a2 a3
        Vec b1 = Rational(rng.range(1, 5)) * a1 + Rational(rng.range(1, 5)) * a2;
        Vec b2 = Rational(rng.range(1, 5)) * a2 + Rational(rng.range(1, 5)) * a3;
        try {
            Vec bhat3 = line_intersection(b1, b2, a1, a3);
            Vec x = line_intersection(a1, b2, a3, b1);
            Vec c3 = line_intersection(a2, x, a1, a3);
            ProjectivePoint p1 = line_coordinates(a1, a1, a3);
            ProjectivePoint p2 = line_coordinates(a3, a1, a3);
            ProjectivePoint p3 = line_coordinates(bhat3, a1, a3);
            ProjectivePoint p4 = line_coordinates(c3, a1, a3);
            CHECK(cross_ratio(p1, p2, p3, p4) == -1);
            ++done;
        } catch (const DegenerateInput&) {
            continue;
        }
    }
}
