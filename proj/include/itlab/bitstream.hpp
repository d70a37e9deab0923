#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "itlab/errors.hpp"

namespace itlab {

// Bit container, MSB-first within each byte. Bit i of the stream lives in
// byte i/8 at mask 0x80 >> (i%8). The final partial byte is zero padded.
class BitStream {
public:
    BitStream() = default;

    explicit BitStream(std::vector<std::uint8_t> bytes, std::uint64_t bit_length)
        : bytes_(std::move(bytes)), bit_length_(bit_length) {
        if (bytes_.size() * 8 < bit_length_)
            throw ValidationError("bit_length exceeds byte buffer");
    }

    void push_bit(int bit) {
        const std::uint64_t i = bit_length_++;
        if (i % 8 == 0) bytes_.push_back(0);
        if (bit) bytes_[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
    }

    void append(const BitStream& other) {
        for (std::uint64_t i = 0; i < other.bit_length_; ++i)
            push_bit(other.bit(i));
    }

    int bit(std::uint64_t i) const {
        if (i >= bit_length_) throw ValidationError("bit index out of range");
        return (bytes_[i / 8] >> (7 - i % 8)) & 1;
    }

    void flip_bit(std::uint64_t i) {
        if (i >= bit_length_) throw ValidationError("bit index out of range");
        bytes_[i / 8] ^= static_cast<std::uint8_t>(0x80u >> (i % 8));
    }

    std::uint64_t bit_length() const { return bit_length_; }
    const std::vector<std::uint8_t>& bytes() const { return bytes_; }

    std::string to_bit_string() const {
        std::string s;
        s.reserve(bit_length_);
        for (std::uint64_t i = 0; i < bit_length_; ++i)
            s.push_back(bit(i) ? '1' : '0');
        return s;
    }

    static BitStream from_bit_string(std::string_view s) {
        BitStream bs;
        for (char c : s) {
            if (c == '0') bs.push_bit(0);
            else if (c == '1') bs.push_bit(1);
            else throw ParseError("bit string may contain only 0 and 1");
        }
        return bs;
    }

    bool operator==(const BitStream& other) const {
        if (bit_length_ != other.bit_length_) return false;
        for (std::uint64_t i = 0; i < bit_length_; ++i)
            if (bit(i) != other.bit(i)) return false;
        return true;
    }

private:
    std::vector<std::uint8_t> bytes_;
    std::uint64_t bit_length_ = 0;
};

} // namespace itlab
