#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "itlab/bitstream.hpp"
#include "itlab/convolutional.hpp"
#include "itlab/errors.hpp"
#include "itlab/reed_solomon.hpp"
#include "itlab/serial.hpp"

namespace itlab {

enum class ChannelCode : std::uint8_t {
    RS15K5 = 0,
    RS15K9 = 1,
    RS15K13 = 2,
    ConvR14K3 = 3,
    ConvR23K43 = 4,
    None = 5,
};

inline const char* to_string(ChannelCode c) {
    switch (c) {
        case ChannelCode::RS15K5: return "rs15k5";
        case ChannelCode::RS15K9: return "rs15k9";
        case ChannelCode::RS15K13: return "rs15k13";
        case ChannelCode::ConvR14K3: return "conv-r14-k3";
        case ChannelCode::ConvR23K43: return "conv-r23-k43";
        default: return "none";
    }
}

inline ChannelCode parse_channel_code(std::string s) {
    for (char& c : s)
        if (c == '_') c = '-';
    if (s == "rs15k5") return ChannelCode::RS15K5;
    if (s == "rs15k9") return ChannelCode::RS15K9;
    if (s == "rs15k13") return ChannelCode::RS15K13;
    if (s == "conv-r14-k3") return ChannelCode::ConvR14K3;
    if (s == "conv-r23-k43") return ChannelCode::ConvR23K43;
    if (s == "none") return ChannelCode::None;
    throw ValidationError("unknown channel code: " + s);
}

namespace detail {

inline bool is_rs(ChannelCode c) {
    return c == ChannelCode::RS15K5 || c == ChannelCode::RS15K9 || c == ChannelCode::RS15K13;
}

inline int rs_k(ChannelCode c) {
    switch (c) {
        case ChannelCode::RS15K5: return 5;
        case ChannelCode::RS15K9: return 9;
        default: return 13;
    }
}

} // namespace detail

// Framing rules, fixed by code:
//   RS15Kk   pad payload with zero bits to whole 4-bit symbols and zero
//            symbols to whole k-symbol blocks; each block encodes to 15
//            symbols (60 bits). Symbols are packed big-endian: the first
//            payload bit is the high bit of the first symbol.
//   ConvR14K3   no padding; 2 zero tail input bits; coded = (bits+2)*4.
//   ConvR23K43  pad with one zero bit when the payload is odd; 3 zero tail
//               input pairs; coded = (pairs+3)*3.
//   None     coded = payload.
struct CodedFrame {
    ChannelCode code = ChannelCode::None;
    std::uint64_t payload_bits = 0;
    std::uint64_t pad_bits = 0;        // zero bits appended before coding
    std::uint64_t tail_input_bits = 0; // zero input bits appended for termination
    BitStream coded;
};

inline std::uint64_t code_overhead(ChannelCode code, std::uint64_t payload_bits) {
    switch (code) {
        case ChannelCode::RS15K5:
        case ChannelCode::RS15K9:
        case ChannelCode::RS15K13: {
            const auto k = static_cast<std::uint64_t>(detail::rs_k(code));
            const std::uint64_t symbols = (payload_bits + 3) / 4;
            const std::uint64_t blocks = symbols == 0 ? 0 : (symbols + k - 1) / k;
            return blocks * 60;
        }
        case ChannelCode::ConvR14K3:
            return (payload_bits + 2) * 4;
        case ChannelCode::ConvR23K43: {
            const std::uint64_t padded = payload_bits + (payload_bits & 1);
            return (padded / 2 + 3) * 3;
        }
        default:
            return payload_bits;
    }
}

inline CodedFrame channel_encode(const BitStream& payload, ChannelCode code) {
    CodedFrame frame;
    frame.code = code;
    frame.payload_bits = payload.bit_length();
    if (code == ChannelCode::None) {
        frame.coded = payload;
        return frame;
    }
    if (detail::is_rs(code)) {
        const RSConfig cfg = RSConfig::for_k(detail::rs_k(code));
        const auto k = static_cast<std::uint64_t>(cfg.k);
        const std::uint64_t symbols = (payload.bit_length() + 3) / 4;
        const std::uint64_t blocks = symbols == 0 ? 0 : (symbols + k - 1) / k;
        frame.pad_bits = blocks * k * 4 - payload.bit_length();
        auto bit_at = [&](std::uint64_t i) {
            return i < payload.bit_length() ? payload.bit(i) : 0;
        };
        for (std::uint64_t blk = 0; blk < blocks; ++blk) {
            std::vector<std::uint8_t> message(static_cast<std::size_t>(cfg.k), 0);
            for (std::uint64_t s = 0; s < k; ++s) {
                std::uint8_t v = 0;
                for (int b = 0; b < 4; ++b)
                    v = static_cast<std::uint8_t>((v << 1) | bit_at((blk * k + s) * 4 + static_cast<std::uint64_t>(b)));
                message[static_cast<std::size_t>(s)] = v;
            }
            for (std::uint8_t sym : rs_encode(message, cfg))
                for (int b = 3; b >= 0; --b) frame.coded.push_bit((sym >> b) & 1);
        }
        return frame;
    }
    const ConvConfig cfg = code == ChannelCode::ConvR14K3 ? ConvConfig::r14_k3()
                                                          : ConvConfig::r23_k43();
    BitStream input = payload;
    if (code == ChannelCode::ConvR23K43 && (input.bit_length() & 1)) {
        input.push_bit(0);
        frame.pad_bits = 1;
    }
    frame.tail_input_bits =
        static_cast<std::uint64_t>(cfg.tail_steps() * cfg.inputs_per_step());
    frame.coded = conv_encode(input, cfg);
    return frame;
}

// Best effort: an RS block whose error pattern exceeds t keeps its received
// message symbols unchanged, so the pipeline can count residual damage
// instead of aborting.
inline BitStream channel_decode(const CodedFrame& frame) {
    if (frame.code == ChannelCode::None) {
        if (frame.coded.bit_length() != frame.payload_bits)
            throw FramingError("frame length disagrees with payload length");
        return frame.coded;
    }
    BitStream decoded;
    if (detail::is_rs(frame.code)) {
        const RSConfig cfg = RSConfig::for_k(detail::rs_k(frame.code));
        if (frame.coded.bit_length() != code_overhead(frame.code, frame.payload_bits))
            throw FramingError("coded length disagrees with RS framing");
        const std::uint64_t blocks = frame.coded.bit_length() / 60;
        for (std::uint64_t blk = 0; blk < blocks; ++blk) {
            std::vector<std::uint8_t> received(15, 0);
            for (std::size_t s = 0; s < 15; ++s) {
                std::uint8_t v = 0;
                for (int b = 0; b < 4; ++b)
                    v = static_cast<std::uint8_t>(
                        (v << 1) | frame.coded.bit(blk * 60 + s * 4 + static_cast<std::uint64_t>(b)));
                received[s] = v;
            }
            std::vector<std::uint8_t> message;
            if (const auto res = rs_decode(received, cfg)) {
                message = res->message;
            } else {
                message.assign(received.begin(), received.begin() + cfg.k);
            }
            for (std::uint8_t sym : message)
                for (int b = 3; b >= 0; --b) {
                    if (decoded.bit_length() >= frame.payload_bits) break;
                    decoded.push_bit((sym >> b) & 1);
                }
        }
        if (decoded.bit_length() != frame.payload_bits)
            throw FramingError("RS frame too short for payload length");
        return decoded;
    }
    const ConvConfig cfg = frame.code == ChannelCode::ConvR14K3 ? ConvConfig::r14_k3()
                                                                : ConvConfig::r23_k43();
    if (frame.coded.bit_length() != code_overhead(frame.code, frame.payload_bits))
        throw FramingError("coded length disagrees with convolutional framing");
    const BitStream full = viterbi_decode(frame.coded, cfg);
    if (full.bit_length() < frame.payload_bits)
        throw FramingError("decoded payload shorter than frame header claims");
    for (std::uint64_t i = 0; i < frame.payload_bits; ++i) decoded.push_bit(full.bit(i));
    return decoded;
}

// Frame container layout (integers little-endian):
//   magic "ITF1" | version u8 | code u8 | payload_bits u64 | pad_bits u16 |
//   tail_input_bits u16 | coded_bits u64 | coded payload bytes
inline void write_coded_frame(std::ostream& out, const CodedFrame& frame) {
    serial::write_bytes(out, "ITF1", 4);
    serial::write_uint<std::uint8_t>(out, 1);
    serial::write_uint<std::uint8_t>(out, static_cast<std::uint8_t>(frame.code));
    serial::write_uint<std::uint64_t>(out, frame.payload_bits);
    serial::write_uint<std::uint16_t>(out, static_cast<std::uint16_t>(frame.pad_bits));
    serial::write_uint<std::uint16_t>(out, static_cast<std::uint16_t>(frame.tail_input_bits));
    serial::write_uint<std::uint64_t>(out, frame.coded.bit_length());
    if (!frame.coded.bytes().empty())
        serial::write_bytes(out, frame.coded.bytes().data(), frame.coded.bytes().size());
}

inline CodedFrame read_coded_frame(std::istream& in) {
    char magic[4];
    serial::read_bytes(in, magic, 4, "magic");
    if (std::string(magic, 4) != "ITF1") throw FramingError("bad magic, not a coded frame");
    if (serial::read_uint<std::uint8_t>(in, "version") != 1)
        throw FramingError("unsupported frame version");
    const auto code_tag = serial::read_uint<std::uint8_t>(in, "code");
    if (code_tag > 5) throw FramingError("unknown channel code tag");
    CodedFrame frame;
    frame.code = static_cast<ChannelCode>(code_tag);
    frame.payload_bits = serial::read_uint<std::uint64_t>(in, "payload bits");
    frame.pad_bits = serial::read_uint<std::uint16_t>(in, "pad bits");
    frame.tail_input_bits = serial::read_uint<std::uint16_t>(in, "tail bits");
    const auto coded_bits = serial::read_uint<std::uint64_t>(in, "coded bits");
    if (coded_bits != code_overhead(frame.code, frame.payload_bits))
        throw FramingError("coded length disagrees with code framing rules");
    std::vector<std::uint8_t> bytes((coded_bits + 7) / 8);
    if (!bytes.empty()) serial::read_bytes(in, bytes.data(), bytes.size(), "coded payload");
    frame.coded = BitStream(std::move(bytes), coded_bits);
    return frame;
}

} // namespace itlab
