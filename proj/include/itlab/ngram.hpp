#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "itlab/alphabet.hpp"
#include "itlab/errors.hpp"
#include "itlab/kahan.hpp"
#include "itlab/utf8.hpp"

namespace itlab {

// order 1/2/3 = letter/digram/trigram; order 0 = whole-word (or otherwise
// variable-length) symbols.
struct NGramCounts {
    std::size_t order = 1;
    std::map<std::u32string, std::uint64_t> counts;
    std::uint64_t total = 0;
};

struct EntropyResult {
    double h_symbol = 0.0;      // bits/symbol
    double h_letter = 0.0;      // bits/letter (h_symbol for order 0)
    std::uint64_t sample_length_words = 0;
    std::size_t distinct_symbols = 0;
};

// Sliding windows within each word; n-grams never span a word boundary and
// words shorter than the order contribute nothing.
inline NGramCounts count_ngrams(const std::vector<std::u32string>& words,
                                std::size_t order, const Alphabet& alphabet) {
    if (order < 1) throw ValidationError("n-gram order must be >= 1");
    NGramCounts out;
    out.order = order;
    for (const auto& w : words) {
        for (char32_t c : w)
            if (!alphabet.contains(c)) throw DomainError("word contains symbol outside alphabet");
        if (w.size() < order) continue;
        for (std::size_t i = 0; i + order <= w.size(); ++i) {
            ++out.counts[w.substr(i, order)];
            ++out.total;
        }
    }
    return out;
}

inline NGramCounts count_words(const std::vector<std::u32string>& words) {
    NGramCounts out;
    out.order = 0;
    for (const auto& w : words) {
        ++out.counts[w];
        ++out.total;
    }
    return out;
}

inline NGramCounts merge(const NGramCounts& a, const NGramCounts& b) {
    if (a.order != b.order) throw ValidationError("cannot merge counts of different orders");
    NGramCounts out = a;
    for (const auto& [k, v] : b.counts) out.counts[k] += v;
    out.total += b.total;
    return out;
}

inline EntropyResult shannon_entropy(const NGramCounts& counts,
                                     std::uint64_t sample_length_words = 0) {
    if (counts.total == 0 || counts.counts.empty())
        throw DomainError("entropy of empty counts is undefined");
    KahanSum h;
    const double total = static_cast<double>(counts.total);
    for (const auto& [sym, c] : counts.counts) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / total;
        h.add(-p * std::log2(p));
    }
    EntropyResult r;
    r.h_symbol = h.value();
    r.h_letter = counts.order >= 1 ? r.h_symbol / static_cast<double>(counts.order)
                                   : r.h_symbol;
    r.sample_length_words = sample_length_words;
    r.distinct_symbols = counts.counts.size();
    return r;
}

// Rows sorted by frequency descending, ties by codepoint order. p uses six
// fixed decimals, the exported-table convention this format reproduces.
inline void export_frequency_csv(const NGramCounts& counts, std::ostream& sink) {
    sink << "symbol,frequency,p\n";
    std::vector<const std::pair<const std::u32string, std::uint64_t>*> rows;
    rows.reserve(counts.counts.size());
    for (const auto& kv : counts.counts) rows.push_back(&kv);
    std::stable_sort(rows.begin(), rows.end(), [](const auto* a, const auto* b) {
        if (a->second != b->second) return a->second > b->second;
        return a->first < b->first;
    });
    const double total = static_cast<double>(counts.total);
    char buf[32];
    for (const auto* kv : rows) {
        const double p = static_cast<double>(kv->second) / total;
        std::snprintf(buf, sizeof buf, "%.6f", p);
        sink << utf8::encode(kv->first) << ',' << kv->second << ',' << buf << '\n';
    }
    if (!sink) throw IoError("failed writing frequency csv");
}

} // namespace itlab
