#pragma once

#include <cstdint>

#include "itlab/bitstream.hpp"
#include "itlab/errors.hpp"
#include "itlab/rng.hpp"

namespace itlab {

struct ChannelOutcome {
    BitStream received;
    std::uint64_t errors_introduced = 0;
    std::uint64_t flip_positions_digest = 0; // FNV-1a 64 over flipped indices
};

inline std::uint64_t hamming_distance(const BitStream& a, const BitStream& b) {
    if (a.bit_length() != b.bit_length())
        throw DomainError("hamming distance needs equal lengths");
    std::uint64_t d = 0;
    const auto& ba = a.bytes();
    const auto& bb = b.bytes();
    for (std::size_t i = 0; i < ba.size(); ++i)
        d += static_cast<std::uint64_t>(__builtin_popcount(static_cast<unsigned>(ba[i] ^ bb[i])));
    return d;
}

// Binary symmetric channel: one uniform 64-bit draw per bit (never a
// binomial shortcut) so flip positions are reproducible bit for bit.
inline ChannelOutcome bsc_transmit(const BitStream& bits, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("p must lie in [0,1]");
    // threshold = p * 2^64, computed in long double so p=1 maps cleanly
    const long double scaled = static_cast<long double>(p) * 18446744073709551616.0L;
    const bool always = scaled >= 18446744073709551616.0L;
    const std::uint64_t threshold = always ? 0 : static_cast<std::uint64_t>(scaled);
    constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ull;
    constexpr std::uint64_t kFnvPrime = 0x100000001b3ull;
    SplitMix64 rng(seed);
    ChannelOutcome out;
    out.received = bits;
    out.flip_positions_digest = kFnvOffset;
    for (std::uint64_t i = 0; i < bits.bit_length(); ++i) {
        const std::uint64_t draw = rng.next();
        if (always || draw < threshold) {
            out.received.flip_bit(i);
            ++out.errors_introduced;
            std::uint64_t v = i;
            for (int b = 0; b < 8; ++b) {
                out.flip_positions_digest =
                    (out.flip_positions_digest ^ (v & 0xFF)) * kFnvPrime;
                v >>= 8;
            }
        }
    }
    return out;
}

} // namespace itlab
