#pragma once

#include <mutex>
#include <vector>

#include "eklab/linalg/vec.hpp"
#include "eklab/mp/complex.hpp"

namespace eklab {

inline Real to_real(const Rational& q) {
    Real r;
    mpfr_set_q(r.raw(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

// Exact Bernoulli numbers (B_1 = -1/2) via the defining recurrence,
// grown on demand behind a lock; read-mostly after warmup.
class BernoulliTable {
  public:
    static Rational number(std::size_t k) {
        static BernoulliTable table;
        std::lock_guard<std::mutex> lock(table.mu_);
        table.grow(k);
        return table.b_[k];
    }

  private:
    BernoulliTable() { b_ = {Rational(1), Rational(-1, 2)}; }

    void grow(std::size_t k) {
        while (b_.size() <= k) {
            std::size_t m = b_.size();
            if (m % 2 == 1) {
                b_.push_back(Rational(0));
                continue;
            }
            // sum_{j=0}^{m} C(m+1, j) B_j = 0
            Rational acc(0);
            Rational binom(1); // C(m+1, 0)
            for (std::size_t j = 0; j < m; ++j) {
                acc += binom * b_[j];
                binom *= Rational(static_cast<long>(m + 1 - j));
                binom /= Rational(static_cast<long>(j + 1));
            }
            b_.push_back(-acc / binom);
        }
    }

    std::mutex mu_;
    std::vector<Rational> b_;
};

// beta_k = B_k 2^k / k!, the coefficients of 2x/(e^{2x} - 1).
inline Rational beta_coefficient(std::size_t k) {
    Rational num = BernoulliTable::number(k);
    for (std::size_t i = 1; i <= k; ++i) {
        num *= 2;
        num /= Rational(static_cast<long>(i));
    }
    return num;
}

// zeta at integers: exact rationals at arguments <= 0, Euler-Maclaurin at
// arguments >= 2, cached per (argument, working precision).
inline Rational zeta_nonpositive_exact(long m) {
    if (m > 0) throw DegenerateInput("zeta_nonpositive_exact: positive argument");
    if (m == 0) return Rational(-1, 2);
    long k = -m; // zeta(-k) = -B_{k+1}/(k+1)
    return -BernoulliTable::number(static_cast<std::size_t>(k + 1)) / Rational(k + 1);
}

inline Real zeta_positive(long s) {
    if (s < 2) throw DegenerateInput("zeta_positive: need s >= 2");
    static std::mutex mu;
    static std::vector<std::pair<std::pair<long, mpfr_prec_t>, Real>> cache;
    const mpfr_prec_t prec = precision::working_bits();
    {
        std::lock_guard<std::mutex> lock(mu);
        for (const auto& [key, val] : cache)
            if (key.first == s && key.second == prec) return val;
    }
    // Euler-Maclaurin with N terms and correction of order J
    const long N = 64;
    Real acc(0L);
    for (long k = 1; k < N; ++k) acc += Real(1L) / pow_si(Real(k), s);
    Real Nr(N);
    acc += pow_si(Nr, 1 - s) / Real(s - 1);
    acc += pow_si(Nr, -s) / Real(2L);
    // sum_j B_{2j}/(2j)! * (s)(s+1)...(s+2j-2) * N^{-s-2j+1}
    Rational rising(1);
    Rational fact(1);
    Real tol = pow2(-static_cast<long>(prec) - 8);
    for (long j = 1; j <= 200; ++j) {
        // update rising = s(s+1)...(s+2j-2), fact = (2j)!
        long top = 2 * j - 1;
        for (long i = (j == 1 ? 0 : 2 * j - 3); i < top; ++i) rising *= Rational(s + i);
        fact = Rational(1);
        for (long i = 1; i <= 2 * j; ++i) fact *= Rational(i);
        Rational coeff = BernoulliTable::number(static_cast<std::size_t>(2 * j)) / fact * rising;
        Real term = to_real(coeff) * pow_si(Nr, -s - 2 * j + 1);
        acc += term;
        if (abs(term) < tol) break;
    }
    std::lock_guard<std::mutex> lock(mu);
    cache.push_back({{s, prec}, acc});
    return acc;
}

inline Real harmonic_number(long n) {
    Rational h(0);
    for (long k = 1; k <= n; ++k) h += Rational(1, k);
    return to_real(h);
}

} // namespace eklab
