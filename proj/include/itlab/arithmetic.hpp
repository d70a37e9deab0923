#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "itlab/bitstream.hpp"
#include "itlab/errors.hpp"
#include "itlab/ngram.hpp"
#include "itlab/utf8.hpp"

namespace itlab {

// Static (two-pass) frequency model: symbols in codepoint order with their
// cumulative counts. Total is capped so 32-bit range times total fits u64.
class SymbolModel {
public:
    static constexpr std::uint64_t kMaxTotal = 1ull << 30;

    static SymbolModel from_counts(const NGramCounts& counts) {
        if (counts.counts.empty()) throw DomainError("cannot build a model over empty counts");
        if (counts.total > kMaxTotal)
            throw ValidationError("model total exceeds coder capacity");
        SymbolModel m;
        m.cum_.push_back(0);
        for (const auto& [sym, c] : counts.counts) {
            m.index_.emplace(sym, m.symbols_.size());
            m.symbols_.push_back(sym);
            m.cum_.push_back(m.cum_.back() + c);
        }
        return m;
    }

    std::size_t size() const { return symbols_.size(); }
    std::uint64_t total() const { return cum_.back(); }
    std::uint64_t low(std::size_t i) const { return cum_[i]; }
    std::uint64_t high(std::size_t i) const { return cum_[i + 1]; }
    const std::u32string& symbol(std::size_t i) const { return symbols_[i]; }

    std::size_t index_of(const std::u32string& s) const {
        const auto it = index_.find(s);
        if (it == index_.end()) throw CodingError("symbol not in model: " + utf8::encode(s));
        return it->second;
    }

    std::size_t find_by_cum(std::uint64_t scaled) const {
        const auto it = std::upper_bound(cum_.begin(), cum_.end(), scaled);
        return static_cast<std::size_t>(it - cum_.begin()) - 1;
    }

private:
    std::vector<std::u32string> symbols_;
    std::vector<std::uint64_t> cum_; // size()+1 entries, cum_[0] = 0
    std::map<std::u32string, std::size_t> index_;
};

namespace detail {

inline constexpr std::uint64_t kAcFull = 0xFFFFFFFFull;
inline constexpr std::uint64_t kAcHalf = 0x80000000ull;
inline constexpr std::uint64_t kAcQuarter = 0x40000000ull;
inline constexpr std::uint64_t kAcThreeQuarter = 0xC0000000ull;

} // namespace detail

// 32-bit integer range coder with underflow (pending-bit) handling. Flush
// costs at most 2 bits plus pending underflow bits; empty input emits
// nothing (the container header carries the symbol count).
inline BitStream arithmetic_encode(const std::vector<std::u32string>& symbols,
                                   const SymbolModel& model) {
    using namespace detail;
    BitStream out;
    if (symbols.empty()) return out;
    std::uint64_t low = 0, high = kAcFull, pending = 0;
    auto emit = [&](int bit) {
        out.push_bit(bit);
        for (; pending; --pending) out.push_bit(!bit);
    };
    const std::uint64_t total = model.total();
    for (const auto& s : symbols) {
        const std::size_t i = model.index_of(s);
        const std::uint64_t range = high - low + 1;
        high = low + range * model.high(i) / total - 1;
        low = low + range * model.low(i) / total;
        for (;;) {
            if (high < kAcHalf) {
                emit(0);
            } else if (low >= kAcHalf) {
                emit(1);
                low -= kAcHalf;
                high -= kAcHalf;
            } else if (low >= kAcQuarter && high < kAcThreeQuarter) {
                ++pending;
                low -= kAcQuarter;
                high -= kAcQuarter;
            } else {
                break;
            }
            low <<= 1;
            high = (high << 1) | 1;
        }
    }
    ++pending;
    emit(low < kAcQuarter ? 0 : 1);
    return out;
}

// Exact inverse for streams produced by arithmetic_encode with the same
// model. Bits past the end read as zero. A corrupted stream still yields
// n_symbols symbols, possibly wrong ones; that silence is inherent to the
// coder and callers compare against the source to detect it.
inline std::vector<std::u32string> arithmetic_decode(const BitStream& bits,
                                                     const SymbolModel& model,
                                                     std::uint64_t n_symbols) {
    using namespace detail;
    std::vector<std::u32string> out;
    if (n_symbols == 0) return out;
    out.reserve(static_cast<std::size_t>(n_symbols));
    std::uint64_t pos = 0;
    auto next_bit = [&]() -> std::uint64_t {
        return pos < bits.bit_length() ? static_cast<std::uint64_t>(bits.bit(pos++)) : 0ull;
    };
    std::uint64_t low = 0, high = kAcFull, value = 0;
    for (int i = 0; i < 32; ++i) value = (value << 1) | next_bit();
    const std::uint64_t total = model.total();
    for (std::uint64_t n = 0; n < n_symbols; ++n) {
        const std::uint64_t range = high - low + 1;
        std::uint64_t scaled = ((value - low + 1) * total - 1) / range;
        if (scaled >= total) scaled = total - 1; // possible only on corrupt input
        const std::size_t i = model.find_by_cum(scaled);
        out.push_back(model.symbol(i));
        high = low + range * model.high(i) / total - 1;
        low = low + range * model.low(i) / total;
        for (;;) {
            if (high < kAcHalf) {
            } else if (low >= kAcHalf) {
                value -= kAcHalf;
                low -= kAcHalf;
                high -= kAcHalf;
            } else if (low >= kAcQuarter && high < kAcThreeQuarter) {
                value -= kAcQuarter;
                low -= kAcQuarter;
                high -= kAcQuarter;
            } else {
                break;
            }
            low <<= 1;
            high = (high << 1) | 1;
            value = (value << 1) | next_bit();
        }
    }
    return out;
}

} // namespace itlab
