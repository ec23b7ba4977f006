#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "eklab/errors.hpp"

namespace eklab {

// Exact rationals. mpq_class keeps gcd(|num|, den) = 1 and den > 0 on its
// own (canonicalization), which is exactly the required invariant.
using Rational = mpq_class;
using BigInt = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Immutable-by-convention exact vector; Vec3 is the n = 3 case.
using Vec = std::vector<Rational>;

inline Vec vec3(const Rational& a, const Rational& b, const Rational& c) { return {a, b, c}; }

inline Vec unit_vec(std::size_t n, std::size_t k) {
    Vec e(n, Rational(0));
    e[k] = 1;
    return e;
}

inline Vec operator+(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}
inline Vec operator-(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}
inline Vec operator*(const Rational& s, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

inline bool is_zero_vec(const Vec& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

// Determinant of the matrix whose columns are the given vectors.
// Fraction-free expansion is unnecessary at these sizes; plain recursive
// cofactor expansion over exact rationals.
inline Rational det_cols(const std::vector<Vec>& cols) {
    const std::size_t n = cols.size();
    for (const auto& c : cols)
        if (c.size() != n) throw DegenerateInput("det_cols: dimension mismatch");
    if (n == 1) return cols[0][0];
    if (n == 2) return cols[0][0] * cols[1][1] - cols[1][0] * cols[0][1];
    if (n == 3) {
        const Vec &a = cols[0], &b = cols[1], &c = cols[2];
        return a[0] * (b[1] * c[2] - b[2] * c[1]) - b[0] * (a[1] * c[2] - a[2] * c[1]) +
               c[0] * (a[1] * b[2] - a[2] * b[1]);
    }
    // Laplace along the first row.
    Rational acc(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (cols[j][0] == 0) continue;
        std::vector<Vec> minor;
        minor.reserve(n - 1);
        for (std::size_t k = 0; k < n; ++k) {
            if (k == j) continue;
            Vec col(n - 1);
            for (std::size_t i = 1; i < n; ++i) col[i - 1] = cols[k][i];
            minor.push_back(std::move(col));
        }
        Rational term = cols[j][0] * det_cols(minor);
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

inline Rational det3(const Vec& v1, const Vec& v2, const Vec& v3) { return det_cols({v1, v2, v3}); }

// Generalized cross product of n-1 vectors in dimension n, landing in the
// dual space: <cross(a_1..a_{n-1}), c> = det(a_1,...,a_{n-1},c).
inline Vec cross_n(const std::vector<Vec>& a) {
    const std::size_t n = a.size() + 1;
    Vec out(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Vec> cols = a;
        cols.push_back(unit_vec(n, i));
        out[i] = det_cols(cols);
    }
    return out;
}

inline Vec cross(const Vec& a, const Vec& b) { return cross_n({a, b}); }

inline Rational dot(const Vec& a, const Vec& b) {
    Rational acc(0);
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

// Rank over Q via Gaussian elimination (used by joint-unimodularity checks
// on fewer vectors than the ambient dimension).
inline std::size_t rank_cols(std::vector<Vec> cols) {
    if (cols.empty()) return 0;
    const std::size_t rows = cols[0].size();
    std::size_t r = 0;
    for (std::size_t row = 0; row < rows && r < cols.size(); ++row) {
        std::size_t pivot = r;
        while (pivot < cols.size() && cols[pivot][row] == 0) ++pivot;
        if (pivot == cols.size()) continue;
        std::swap(cols[pivot], cols[r]);
        for (std::size_t j = r + 1; j < cols.size(); ++j) {
            if (cols[j][row] == 0) continue;
            Rational f = cols[j][row] / cols[r][row];
            for (std::size_t i = row; i < rows; ++i) cols[j][i] -= f * cols[r][i];
        }
        ++r;
    }
    return r;
}

} // namespace eklab
