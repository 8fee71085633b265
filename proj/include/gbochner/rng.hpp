#pragma once

#include <cstdint>

namespace gbochner {

// SplitMix64 (Steele, Lea, Flood 2014). Chosen because the exact output
// sequence is pinned by the algorithm, so seeded runs reproduce bit-for-bit
// on every platform. Not for cryptography.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform-enough draw in [0, bound); bound must be > 0. The modulo bias
    // is irrelevant for test-field sampling and keeps the stream portable.
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

    // Integer in [lo, hi], inclusive.
    long long next_int(long long lo, long long hi) {
        return lo + static_cast<long long>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

} // namespace gbochner
