#pragma once

#include <cstdint>
#include <vector>

namespace eklab {

// xoshiro256** (public-domain algorithm by Blackman/Vigna), seeded through
// splitmix64. All randomized suites draw from this generator so that a
// descriptor seed pins the whole run; identifier "xoshiro256ss-v1" is echoed
// in reports.
class Rng {
  public:
    static constexpr const char* version = "xoshiro256ss-v1";

    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& word : state_) {
            x += 0x9e3779b97f4a7c15ULL;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            word = z ^ (z >> 31);
        }
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Unbiased integer in [0, n), Lemire-style rejection. Do not use
    // std::uniform_int_distribution: its output is not pinned across
    // standard libraries.
    std::uint64_t below(std::uint64_t n) {
        for (;;) {
            std::uint64_t x = next();
            __uint128_t m = static_cast<__uint128_t>(x) * n;
            auto lo = static_cast<std::uint64_t>(m);
            if (lo >= n) return static_cast<std::uint64_t>(m >> 64);
            // tail rejection
            if (lo >= (0 - n) % n) return static_cast<std::uint64_t>(m >> 64);
        }
    }

    // Integer in [lo, hi] inclusive.
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Uniform double in [0,1), 53 bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Derive an independent stream (per suite / per check).
    Rng fork(std::uint64_t salt) { return Rng(next() ^ (salt * 0x9e3779b97f4a7c15ULL)); }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::uint64_t state_[4];
};

} // namespace eklab
