// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the v2xbeam authors

#pragma once

#include <cmath>
#include <cstdint>

namespace v2x {

inline uint64_t splitmix64(uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Mixes a base seed with stream indices so parallel workers get
/// independent, reproducible streams.
inline uint64_t derive_seed(uint64_t base, uint64_t a, uint64_t b = 0)
{
    return splitmix64(splitmix64(base ^ 0x6a09e667f3bcc908ULL) + splitmix64(a) * 3 + splitmix64(b) * 7);
}

// xoshiro256** — pinned generator so results do not depend on the
// standard library's distribution implementations.
class Rng
{
  public:
    explicit Rng(uint64_t seed = 0)
    {
        uint64_t x = seed;
        for (auto &word : s_)
        {
            x = splitmix64(x);
            word = x;
        }
        has_spare_ = false;
    }

    uint64_t next_u64()
    {
        const uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n).
    uint64_t below(uint64_t n) { return n == 0 ? 0 : next_u64() % n; }

    // Box-Muller; both values of a pair are consumed in order.
    double normal()
    {
        if (has_spare_)
        {
            has_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 1e-300)
            u1 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * 3.141592653589793238462643383279502884 * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

  private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    uint64_t s_[4];
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace v2x
