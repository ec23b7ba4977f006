#pragma once

#include <map>
#include <type_traits>

namespace eklab {

// Finite combination of generators of type G (ordered by G's operator<)
// with coefficients C: integers by default, exact rationals where a map is
// genuinely denominator-valued. No zero coefficients are stored; addition
// is coefficient-wise.
template <typename G, typename C = long long>
class FormalSum {
  public:
    using Terms = std::map<G, C>;

    FormalSum() = default;

    void add(G gen, C coeff) {
        if (coeff == 0) return;
        auto it = terms_.find(gen);
        if (it == terms_.end()) {
            terms_.emplace(std::move(gen), std::move(coeff));
            return;
        }
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }

    FormalSum& operator+=(const FormalSum& o) {
        for (const auto& [g, c] : o.terms_) add(g, c);
        return *this;
    }
    FormalSum& operator-=(const FormalSum& o) {
        for (const auto& [g, c] : o.terms_) add(g, -c);
        return *this;
    }
    friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
    friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
    FormalSum operator-() const {
        FormalSum r;
        for (const auto& [g, c] : terms_) r.terms_.emplace(g, -c);
        return r;
    }
    friend FormalSum operator*(const C& s, const FormalSum& a) {
        FormalSum r;
        if (s != 0)
            for (const auto& [g, c] : a.terms_) r.terms_.emplace(g, s * c);
        return r;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }
    C coeff(const G& g) const {
        auto it = terms_.find(g);
        return it == terms_.end() ? C(0) : it->second;
    }

    friend bool operator==(const FormalSum& a, const FormalSum& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const FormalSum& a, const FormalSum& b) { return !(a == b); }

    // integer coefficients only: true iff every coefficient is divisible
    // by d, then divides in place
    bool divide_exactly(long long d) {
        static_assert(std::is_same_v<C, long long>, "divide_exactly is for integer coefficients");
        for (auto& [g, c] : terms_)
            if (c % d != 0) return false;
        for (auto& [g, c] : terms_) c /= d;
        return true;
    }

  private:
    Terms terms_;
};

} // namespace eklab
