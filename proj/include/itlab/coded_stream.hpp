#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <string>

#include "itlab/bitstream.hpp"
#include "itlab/errors.hpp"
#include "itlab/ngram.hpp"
#include "itlab/serial.hpp"
#include "itlab/utf8.hpp"

namespace itlab {

enum class SourceMethod : std::uint8_t { Huffman = 0, Arithmetic = 1 };
enum class SymbolDomain : std::uint8_t { Letter = 0, Digram = 1, Trigram = 2, Word = 3 };

inline const char* to_string(SourceMethod m) {
    return m == SourceMethod::Huffman ? "huffman" : "arithmetic";
}

inline const char* to_string(SymbolDomain d) {
    switch (d) {
        case SymbolDomain::Letter: return "letter";
        case SymbolDomain::Digram: return "digram";
        case SymbolDomain::Trigram: return "trigram";
        default: return "word";
    }
}

inline SourceMethod parse_source_method(const std::string& s) {
    if (s == "huffman") return SourceMethod::Huffman;
    if (s == "arithmetic") return SourceMethod::Arithmetic;
    throw ValidationError("unknown source coding method: " + s);
}

inline SymbolDomain parse_symbol_domain(const std::string& s) {
    if (s == "letter") return SymbolDomain::Letter;
    if (s == "digram") return SymbolDomain::Digram;
    if (s == "trigram") return SymbolDomain::Trigram;
    if (s == "word") return SymbolDomain::Word;
    throw ValidationError("unknown symbol domain: " + s);
}

// Source-coded stream container.
//
// Layout (integers little-endian):
//   magic "ITS1" | version u8 | method u8 | domain u8 | flags u8
//   n_symbols u64 | bit_length u64
//   [dictionary when flags bit0: entry_count u32,
//     then per entry: sym_len u16, sym UTF-8 bytes, count u64]
//   payload: ceil(bit_length/8) bytes, final byte zero-padded
//
// The dictionary can be omitted so payload-only sizes are measurable; a
// stream without it cannot be decoded on its own.
struct CodedStream {
    SourceMethod method = SourceMethod::Huffman;
    SymbolDomain domain = SymbolDomain::Word;
    bool has_dictionary = true;
    std::uint64_t n_symbols = 0;
    NGramCounts dictionary; // empty when has_dictionary is false
    BitStream payload;

    std::uint64_t payload_bytes() const { return (payload.bit_length() + 7) / 8; }
};

inline void write_coded_stream(std::ostream& out, const CodedStream& cs) {
    serial::write_bytes(out, "ITS1", 4);
    serial::write_uint<std::uint8_t>(out, 1);
    serial::write_uint<std::uint8_t>(out, static_cast<std::uint8_t>(cs.method));
    serial::write_uint<std::uint8_t>(out, static_cast<std::uint8_t>(cs.domain));
    serial::write_uint<std::uint8_t>(out, cs.has_dictionary ? 1 : 0);
    serial::write_uint<std::uint64_t>(out, cs.n_symbols);
    serial::write_uint<std::uint64_t>(out, cs.payload.bit_length());
    if (cs.has_dictionary) {
        serial::write_uint<std::uint32_t>(out, static_cast<std::uint32_t>(cs.dictionary.counts.size()));
        for (const auto& [sym, count] : cs.dictionary.counts) {
            const std::string bytes = utf8::encode(sym);
            serial::write_uint<std::uint16_t>(out, static_cast<std::uint16_t>(bytes.size()));
            serial::write_bytes(out, bytes.data(), bytes.size());
            serial::write_uint<std::uint64_t>(out, count);
        }
    }
    if (!cs.payload.bytes().empty())
        serial::write_bytes(out, cs.payload.bytes().data(), cs.payload.bytes().size());
}

inline CodedStream read_coded_stream(std::istream& in) {
    char magic[4];
    serial::read_bytes(in, magic, 4, "magic");
    if (std::string(magic, 4) != "ITS1") throw FramingError("bad magic, not a coded stream");
    const auto version = serial::read_uint<std::uint8_t>(in, "version");
    if (version != 1) throw FramingError("unsupported stream version");
    CodedStream cs;
    const auto method = serial::read_uint<std::uint8_t>(in, "method");
    if (method > 1) throw FramingError("unknown source method tag");
    cs.method = static_cast<SourceMethod>(method);
    const auto domain = serial::read_uint<std::uint8_t>(in, "domain");
    if (domain > 3) throw FramingError("unknown symbol domain tag");
    cs.domain = static_cast<SymbolDomain>(domain);
    const auto flags = serial::read_uint<std::uint8_t>(in, "flags");
    cs.has_dictionary = (flags & 1) != 0;
    cs.n_symbols = serial::read_uint<std::uint64_t>(in, "n_symbols");
    const auto bit_length = serial::read_uint<std::uint64_t>(in, "bit_length");
    if (cs.has_dictionary) {
        const auto entries = serial::read_uint<std::uint32_t>(in, "dictionary size");
        cs.dictionary.order = 0;
        for (std::uint32_t i = 0; i < entries; ++i) {
            const auto len = serial::read_uint<std::uint16_t>(in, "symbol length");
            std::string bytes(len, '\0');
            serial::read_bytes(in, bytes.data(), len, "symbol");
            const auto count = serial::read_uint<std::uint64_t>(in, "count");
            if (count == 0) throw FramingError("dictionary entry with zero count");
            const std::u32string sym = utf8::decode(bytes);
            if (!cs.dictionary.counts.emplace(sym, count).second)
                throw FramingError("duplicate dictionary entry");
            cs.dictionary.total += count;
        }
    }
    std::vector<std::uint8_t> payload((bit_length + 7) / 8);
    if (!payload.empty())
        serial::read_bytes(in, payload.data(), payload.size(), "payload");
    cs.payload = BitStream(std::move(payload), bit_length);
    return cs;
}

} // namespace itlab
