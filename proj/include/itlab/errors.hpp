#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace itlab {

// Error taxonomy, mapped onto CLI exit codes by the tool:
//   validation/parse/domain -> 1, I/O -> 2, decode/framing -> 3.

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CodingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DecodeError : public std::runtime_error {
public:
    explicit DecodeError(const std::string& what, std::uint64_t bit_offset = 0)
        : std::runtime_error(what), bit_offset(bit_offset) {}
    std::uint64_t bit_offset;
};

class FramingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace itlab
