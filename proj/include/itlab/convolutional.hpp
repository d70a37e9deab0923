#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <vector>

#include "itlab/bitstream.hpp"
#include "itlab/errors.hpp"

namespace itlab {

enum class ConvCodeId : std::uint8_t { R14_K3 = 0, R23_K43 = 1 };

// Two fixed codes, zero-state start and zero-tail termination.
//
// R14_K3: rate 1/4, one input, constraint length 3, generators
// (7,7,5,5) octal over the window [current, prev, prev2]. Free distance 10.
//
// R23_K43: rate 2/3, two inputs with constraint lengths 4 and 3 (register
// windows of 4 and 3 bits), three outputs; each output XORs a tap set on
// both registers: (13,6), (14,5), (17,7) octal. Taps are stated here as the
// repo's documented defaults since only rate and K are externally fixed.
struct ConvConfig {
    ConvCodeId id = ConvCodeId::R14_K3;

    static ConvConfig r14_k3() { return ConvConfig{ConvCodeId::R14_K3}; }
    static ConvConfig r23_k43() { return ConvConfig{ConvCodeId::R23_K43}; }

    int inputs_per_step() const { return id == ConvCodeId::R14_K3 ? 1 : 2; }
    int outputs_per_step() const { return id == ConvCodeId::R14_K3 ? 4 : 3; }
    int tail_steps() const { return id == ConvCodeId::R14_K3 ? 2 : 3; }
    int n_states() const { return id == ConvCodeId::R14_K3 ? 4 : 32; }
};

namespace detail {

inline constexpr std::array<unsigned, 4> kR14Taps = {07, 07, 05, 05};
inline constexpr std::array<unsigned, 3> kR23TapsA = {013, 014, 017};
inline constexpr std::array<unsigned, 3> kR23TapsB = {06, 05, 07};

inline int parity(unsigned v) { return __builtin_popcount(v) & 1; }

// One trellis step: from `state` with input symbol `in` (1 or 2 bits),
// returns packed output bits (MSB = first output) and the next state.
// R14 state = 2 previous inputs (bit1 newest); R23 state = (regA<<2)|regB
// with regA = 3 previous first-input bits, regB = 2 previous second-input
// bits, newest in the high bit of each.
inline void conv_step(const ConvConfig& cfg, int state, int in, int& out, int& next) {
    if (cfg.id == ConvCodeId::R14_K3) {
        const unsigned window = (static_cast<unsigned>(in) << 2) | static_cast<unsigned>(state);
        out = 0;
        for (unsigned g : kR14Taps) out = (out << 1) | parity(window & g);
        next = ((in << 1) | (state >> 1)) & 3;
    } else {
        const int a = (in >> 1) & 1, b = in & 1;
        const unsigned sA = static_cast<unsigned>(state) >> 2;
        const unsigned sB = static_cast<unsigned>(state) & 3;
        const unsigned winA = (static_cast<unsigned>(a) << 3) | sA;
        const unsigned winB = (static_cast<unsigned>(b) << 2) | sB;
        out = 0;
        for (std::size_t i = 0; i < 3; ++i)
            out = (out << 1) | (parity(winA & kR23TapsA[i]) ^ parity(winB & kR23TapsB[i]));
        const unsigned nA = ((static_cast<unsigned>(a) << 2) | (sA >> 1)) & 7;
        const unsigned nB = ((static_cast<unsigned>(b) << 1) | (sB >> 1)) & 3;
        next = static_cast<int>((nA << 2) | nB);
    }
}

} // namespace detail

inline BitStream conv_encode(const BitStream& bits, const ConvConfig& cfg) {
    const int in_bits = cfg.inputs_per_step();
    if (bits.bit_length() % static_cast<std::uint64_t>(in_bits) != 0)
        throw ValidationError("rate 2/3 code takes an even number of input bits");
    const std::uint64_t steps = bits.bit_length() / static_cast<std::uint64_t>(in_bits) +
                                static_cast<std::uint64_t>(cfg.tail_steps());
    BitStream out;
    int state = 0;
    for (std::uint64_t s = 0; s < steps; ++s) {
        int in = 0;
        for (int i = 0; i < in_bits; ++i) {
            const std::uint64_t pos = s * static_cast<std::uint64_t>(in_bits) + static_cast<std::uint64_t>(i);
            in = (in << 1) | (pos < bits.bit_length() ? bits.bit(pos) : 0);
        }
        int o = 0, next = 0;
        detail::conv_step(cfg, state, in, o, next);
        for (int i = cfg.outputs_per_step() - 1; i >= 0; --i) out.push_bit((o >> i) & 1);
        state = next;
    }
    return out;
}

// Hard-decision Viterbi over the full trellis. Tail steps admit only zero
// inputs (zero-tail contract); metric ties keep the lower-numbered
// predecessor state, then the lower input symbol.
inline BitStream viterbi_decode(const BitStream& bits, const ConvConfig& cfg) {
    if (bits.bit_length() == 0) return BitStream();
    const int out_bits = cfg.outputs_per_step();
    if (bits.bit_length() % static_cast<std::uint64_t>(out_bits) != 0)
        throw FramingError("coded length is not a whole number of trellis steps");
    const std::uint64_t steps = bits.bit_length() / static_cast<std::uint64_t>(out_bits);
    const auto tail = static_cast<std::uint64_t>(cfg.tail_steps());
    if (steps < tail) throw FramingError("coded stream shorter than the termination tail");
    const std::uint64_t payload_steps = steps - tail;

    const int n_states = cfg.n_states();
    const int n_inputs = 1 << cfg.inputs_per_step();
    struct Edge {
        int out;
        int next;
    };
    std::vector<Edge> edges(static_cast<std::size_t>(n_states * n_inputs));
    for (int s = 0; s < n_states; ++s)
        for (int u = 0; u < n_inputs; ++u)
            detail::conv_step(cfg, s, u, edges[static_cast<std::size_t>(s * n_inputs + u)].out,
                              edges[static_cast<std::size_t>(s * n_inputs + u)].next);

    constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> metric(static_cast<std::size_t>(n_states), kInf);
    std::vector<std::uint64_t> next_metric(static_cast<std::size_t>(n_states));
    metric[0] = 0;
    // survivor[step*n_states + state] packs (prev_state, input)
    std::vector<std::int16_t> survivor(static_cast<std::size_t>(steps) * static_cast<std::size_t>(n_states), -1);

    for (std::uint64_t step = 0; step < steps; ++step) {
        int observed = 0;
        for (int i = 0; i < out_bits; ++i)
            observed = (observed << 1) | bits.bit(step * static_cast<std::uint64_t>(out_bits) + static_cast<std::uint64_t>(i));
        std::fill(next_metric.begin(), next_metric.end(), kInf);
        const int input_limit = step >= payload_steps ? 1 : n_inputs;
        for (int s = 0; s < n_states; ++s) {
            if (metric[static_cast<std::size_t>(s)] == kInf) continue;
            for (int u = 0; u < input_limit; ++u) {
                const Edge& e = edges[static_cast<std::size_t>(s * n_inputs + u)];
                const std::uint64_t cand = metric[static_cast<std::size_t>(s)] +
                                           static_cast<std::uint64_t>(__builtin_popcount(
                                               static_cast<unsigned>(e.out ^ observed)));
                if (cand < next_metric[static_cast<std::size_t>(e.next)]) {
                    next_metric[static_cast<std::size_t>(e.next)] = cand;
                    survivor[step * static_cast<std::uint64_t>(n_states) + static_cast<std::uint64_t>(e.next)] =
                        static_cast<std::int16_t>((s << 2) | u);
                }
            }
        }
        metric.swap(next_metric);
    }

    std::vector<int> inputs(static_cast<std::size_t>(steps));
    int state = 0; // zero-tail termination ends in state 0
    for (std::uint64_t step = steps; step-- > 0;) {
        const std::int16_t packed = survivor[step * static_cast<std::uint64_t>(n_states) + static_cast<std::uint64_t>(state)];
        if (packed < 0) throw FramingError("trellis has no surviving path");
        inputs[step] = packed & 3;
        state = packed >> 2;
    }
    BitStream out;
    const int in_bits = cfg.inputs_per_step();
    for (std::uint64_t step = 0; step < payload_steps; ++step)
        for (int i = in_bits - 1; i >= 0; --i) out.push_bit((inputs[step] >> i) & 1);
    return out;
}

} // namespace itlab
