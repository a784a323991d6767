// Copyright (c) 2026 the aobs authors
// SPDX-License-Identifier: Apache-2.0

#ifndef AOBS_RNG_HPP
#define AOBS_RNG_HPP

#include <cmath>
#include <cstdint>

namespace aobs {

/// Counter-based splittable generator: every (seed, stream, counter) triple
/// maps to a fixed 64-bit draw, so logical sample i can be assigned its own
/// stream and produced identically whether samples are generated serially
/// or split across workers. The mixing function is the 10-round Philox-4x32
/// bijection (Salmon et al.); key = seed, counter block = (stream, counter).
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : seed_(seed), stream_(stream) {}

    std::uint64_t next_u64() {
        if (cached_) {
            cached_ = false;
            return cache_;
        }
        std::uint32_t ctr[4] = {
            static_cast<std::uint32_t>(counter_),
            static_cast<std::uint32_t>(counter_ >> 32),
            static_cast<std::uint32_t>(stream_),
            static_cast<std::uint32_t>(stream_ >> 32),
        };
        std::uint32_t key[2] = {
            static_cast<std::uint32_t>(seed_),
            static_cast<std::uint32_t>(seed_ >> 32),
        };
        for (int round = 0;; ++round) {
            std::uint32_t lo0, hi0, lo1, hi1;
            mul_hilo(0xD2511F53u, ctr[0], lo0, hi0);
            mul_hilo(0xCD9E8D57u, ctr[2], lo1, hi1);
            std::uint32_t next[4] = {hi1 ^ ctr[1] ^ key[0], lo1,
                                     hi0 ^ ctr[3] ^ key[1], lo0};
            ctr[0] = next[0];
            ctr[1] = next[1];
            ctr[2] = next[2];
            ctr[3] = next[3];
            if (round == 9) break;
            key[0] += 0x9E3779B9u;
            key[1] += 0xBB67AE85u;
        }
        ++counter_;
        cache_ = (static_cast<std::uint64_t>(ctr[3]) << 32) | ctr[2];
        cached_ = true;
        return (static_cast<std::uint64_t>(ctr[1]) << 32) | ctr[0];
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool next_bernoulli(double p) { return next_uniform() < p; }

    /// Uniform integer in [0, n), n >= 1; rejection keeps it unbiased.
    std::uint64_t next_below(std::uint64_t n) {
        if (n <= 1) return 0;
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n + 1) % n;
        while (true) {
            std::uint64_t draw = next_u64();
            if (draw <= limit) return draw % n;
        }
    }

private:
    static void mul_hilo(std::uint32_t a, std::uint32_t b, std::uint32_t& lo,
                         std::uint32_t& hi) {
        std::uint64_t product = static_cast<std::uint64_t>(a) * b;
        lo = static_cast<std::uint32_t>(product);
        hi = static_cast<std::uint32_t>(product >> 32);
    }

    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t counter_ = 0;
    std::uint64_t cache_ = 0;
    bool cached_ = false;
};

/// Binomial(n, p) draw. Small n counts Bernoulli bits; larger n inverts the
/// cdf starting from the mode and expanding outward, which costs O(sd)
/// probability-recurrence steps per draw.
inline std::int64_t sample_binomial(CounterRng& rng, std::int64_t n, double p) {
    if (n <= 0 || p <= 0.0) return 0;
    if (p >= 1.0) return n;
    if (n <= 32) {
        std::int64_t hits = 0;
        for (std::int64_t i = 0; i < n; ++i) {
            if (rng.next_bernoulli(p)) ++hits;
        }
        return hits;
    }

    const double dn = static_cast<double>(n);
    std::int64_t mode = static_cast<std::int64_t>(std::floor((dn + 1.0) * p));
    if (mode > n) mode = n;
    double log_pmf_mode = std::lgamma(dn + 1.0) -
                          std::lgamma(static_cast<double>(mode) + 1.0) -
                          std::lgamma(dn - static_cast<double>(mode) + 1.0) +
                          static_cast<double>(mode) * std::log(p) +
                          (dn - static_cast<double>(mode)) * std::log1p(-p);
    const double pmf_mode = std::exp(log_pmf_mode);
    const double odds = p / (1.0 - p);

    double u = rng.next_uniform();
    double up = pmf_mode, down = pmf_mode;
    std::int64_t hi = mode, lo = mode;
    double cumulative = pmf_mode;
    if (u < cumulative) return mode;
    while (lo > 0 || hi < n) {
        if (hi < n) {
            up *= odds * static_cast<double>(n - hi) / static_cast<double>(hi + 1);
            ++hi;
            cumulative += up;
            if (u < cumulative) return hi;
        }
        if (lo > 0) {
            down *= static_cast<double>(lo) / (odds * static_cast<double>(n - lo + 1));
            --lo;
            cumulative += down;
            if (u < cumulative) return lo;
        }
    }
    // Floating-point undershoot of the total mass; the remaining gap is
    // below 1e-12, return the mode.
    return mode;
}

} // namespace aobs

#endif
