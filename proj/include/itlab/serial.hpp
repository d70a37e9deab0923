#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>

#include "itlab/errors.hpp"

namespace itlab::serial {

// Little-endian primitives shared by the binary containers.

inline void write_bytes(std::ostream& out, const void* data, std::size_t n) {
    out.write(static_cast<const char*>(data), static_cast<std::streamsize>(n));
    if (!out) throw IoError("write failed");
}

template <typename T>
void write_uint(std::ostream& out, T value) {
    unsigned char buf[sizeof(T)];
    for (std::size_t i = 0; i < sizeof(T); ++i)
        buf[i] = static_cast<unsigned char>((value >> (8 * i)) & 0xFF);
    write_bytes(out, buf, sizeof(T));
}

inline void read_bytes(std::istream& in, void* data, std::size_t n, const char* what) {
    in.read(static_cast<char*>(data), static_cast<std::streamsize>(n));
    if (static_cast<std::size_t>(in.gcount()) != n)
        throw FramingError(std::string("truncated stream reading ") + what);
}

template <typename T>
T read_uint(std::istream& in, const char* what) {
    unsigned char buf[sizeof(T)];
    read_bytes(in, buf, sizeof(T), what);
    T value = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i)
        value |= static_cast<T>(buf[i]) << (8 * i);
    return value;
}

} // namespace itlab::serial
