#pragma once

#include <mpfr.h>

#include <atomic>
#include <cstdint>
#include <string>
#include <utility>

namespace eklab {

// Working-precision context. The contract precision (default 128 bits) is
// what tolerances are quoted against; computations run with guard bits on
// top. Precision is uniform within one computation context; set it before
// building lattice plans / tables, not in the middle of a sum.
namespace precision {

inline std::atomic<mpfr_prec_t>& contract_bits_storage() {
    static std::atomic<mpfr_prec_t> bits{128};
    return bits;
}

constexpr mpfr_prec_t guard_bits = 16;

inline mpfr_prec_t contract_bits() { return contract_bits_storage().load(std::memory_order_relaxed); }
inline mpfr_prec_t working_bits() { return contract_bits() + guard_bits; }
inline void set_contract_bits(mpfr_prec_t p) { contract_bits_storage().store(p, std::memory_order_relaxed); }

struct Guard {
    explicit Guard(mpfr_prec_t p) : saved_(contract_bits()) { set_contract_bits(p); }
    ~Guard() { set_contract_bits(saved_); }
    Guard(const Guard&) = delete;
    Guard& operator=(const Guard&) = delete;

  private:
    mpfr_prec_t saved_;
};

} // namespace precision

// Thin RAII value wrapper over mpfr_t. Results are produced at the working
// precision current at the time of the operation; rounding is always
// MPFR_RNDN. Raw access is exposed for the lattice-sum kernels.
class Real {
  public:
    Real() { mpfr_init2(v_, precision::working_bits()); mpfr_set_zero(v_, 1); }
    Real(long n) : Real() { mpfr_set_si(v_, n, MPFR_RNDN); }
    Real(int n) : Real(static_cast<long>(n)) {}
    Real(double d) : Real() { mpfr_set_d(v_, d, MPFR_RNDN); }
    explicit Real(const char* s) : Real() { mpfr_set_str(v_, s, 10, MPFR_RNDN); }

    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, precision::working_bits());
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    static Real pi() { Real r; mpfr_const_pi(r.v_, MPFR_RNDN); return r; }
    static Real log2_const() { Real r; mpfr_const_log2(r.v_, MPFR_RNDN); return r; }

    // arithmetic
    friend Real operator+(const Real& a, const Real& b) { Real r; mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Real operator-(const Real& a, const Real& b) { Real r; mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Real operator*(const Real& a, const Real& b) { Real r; mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Real operator/(const Real& a, const Real& b) { Real r; mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    Real operator-() const { Real r; mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }

    Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

    friend Real operator*(const Real& a, long b) { Real r; mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN); return r; }
    friend Real operator*(long a, const Real& b) { return b * a; }
    friend Real operator/(const Real& a, long b) { Real r; mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN); return r; }

    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    // Fixed-count decimal form, canonical across runs: "[-]d.dddd...e[+-]xx".
    std::string str(int digits = 40) const {
        if (mpfr_nan_p(v_)) return "nan";
        if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
        if (mpfr_zero_p(v_)) return "0";
        mpfr_exp_t e = 0;
        char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
        std::string digits_str(s);
        mpfr_free_str(s);
        std::string sign_part;
        if (!digits_str.empty() && digits_str[0] == '-') {
            sign_part = "-";
            digits_str.erase(0, 1);
        }
        std::string out = sign_part + digits_str.substr(0, 1) + "." + digits_str.substr(1) +
                          "e" + std::to_string(static_cast<long long>(e - 1));
        return out;
    }

  private:
    mpfr_t v_;
};

inline Real abs(const Real& a) { Real r; mpfr_abs(r.raw(), a.raw(), MPFR_RNDN); return r; }
inline Real sqrt(const Real& a) { Real r; mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN); return r; }
inline Real exp(const Real& a) { Real r; mpfr_exp(r.raw(), a.raw(), MPFR_RNDN); return r; }
inline Real log(const Real& a) { Real r; mpfr_log(r.raw(), a.raw(), MPFR_RNDN); return r; }
inline Real log1p(const Real& a) { Real r; mpfr_log1p(r.raw(), a.raw(), MPFR_RNDN); return r; }
inline Real sin(const Real& a) { Real r; mpfr_sin(r.raw(), a.raw(), MPFR_RNDN); return r; }
inline Real cos(const Real& a) { Real r; mpfr_cos(r.raw(), a.raw(), MPFR_RNDN); return r; }
inline void sin_cos(Real& s, Real& c, const Real& a) { mpfr_sin_cos(s.raw(), c.raw(), a.raw(), MPFR_RNDN); }
inline Real atan2(const Real& y, const Real& x) { Real r; mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN); return r; }
inline Real pow_si(const Real& a, long n) { Real r; mpfr_pow_si(r.raw(), a.raw(), n, MPFR_RNDN); return r; }
inline Real floor(const Real& a) { Real r; mpfr_floor(r.raw(), a.raw()); return r; }
inline Real fma(const Real& a, const Real& b, const Real& c) {
    Real r;
    mpfr_fma(r.raw(), a.raw(), b.raw(), c.raw(), MPFR_RNDN);
    return r;
}

// 2^-k at working precision (tolerance construction).
inline Real pow2(long k) { Real r(1L); mpfr_mul_2si(r.raw(), r.raw(), k, MPFR_RNDN); return r; }

} // namespace eklab
