#pragma once

#include <cstdint>

namespace itlab {

// splitmix64. Small, fast, passes BigCrush, and trivially reproducible from
// a single u64 seed, which is all the sampling code here needs.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Lemire multiply-shift; bound must be nonzero. Slight modulo bias is
    // acceptable for sampling (bounds are tiny next to 2^64).
    std::uint64_t uniform_below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

private:
    std::uint64_t state_;
};

} // namespace itlab
