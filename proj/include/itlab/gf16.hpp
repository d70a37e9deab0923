#pragma once

#include <array>
#include <cstdint>

#include "itlab/errors.hpp"

namespace itlab::gf16 {

// GF(2^4) with primitive polynomial x^4 + x + 1 (0x13); alpha = x = 2.

inline constexpr std::array<std::uint8_t, 15> kAlog = {1, 2,  4,  8, 3,  6, 12, 11,
                                                       5, 10, 7, 14, 15, 13, 9};

inline constexpr std::array<std::uint8_t, 16> kLog = [] {
    std::array<std::uint8_t, 16> t{};
    for (std::uint8_t i = 0; i < 15; ++i) t[kAlog[i]] = i;
    return t;
}();

inline constexpr std::uint8_t add(std::uint8_t a, std::uint8_t b) {
    return static_cast<std::uint8_t>(a ^ b);
}

inline constexpr std::uint8_t mul(std::uint8_t a, std::uint8_t b) {
    if (a == 0 || b == 0) return 0;
    return kAlog[(kLog[a] + kLog[b]) % 15];
}

inline std::uint8_t inv(std::uint8_t a) {
    if (a == 0) throw DomainError("zero has no inverse in GF(16)");
    return kAlog[(15 - kLog[a]) % 15];
}

// alpha^i for any non-negative i.
inline constexpr std::uint8_t alpha_pow(unsigned i) { return kAlog[i % 15]; }

} // namespace itlab::gf16
