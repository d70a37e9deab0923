#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "itlab/alphabet.hpp"
#include "itlab/errors.hpp"
#include "itlab/kahan.hpp"
#include "itlab/rng.hpp"
#include "itlab/utf8.hpp"

namespace itlab {

struct FrequencyRecord {
    std::u32string word;
    std::uint64_t count = 0;
    double probability = 0.0;
    std::uint32_t rank = 0;
};

struct WordFrequencyTable {
    std::vector<FrequencyRecord> records; // rank ascending
    std::uint64_t total_count = 0;

    std::size_t J() const { return records.size(); }
};

struct WordSequence {
    std::vector<std::u32string> words;
    std::uint64_t seed = 0; // 0 when loaded from a file rather than generated
};

namespace detail {

// Shared tail of table construction: sort by count descending with codepoint
// tie-break, then fill probability and rank.
inline WordFrequencyTable finish_table(std::vector<FrequencyRecord> records) {
    if (records.empty()) throw ValidationError("frequency table is empty");
    std::sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
        if (a.count != b.count) return a.count > b.count;
        return a.word < b.word;
    });
    WordFrequencyTable t;
    t.total_count = 0;
    for (const auto& r : records) t.total_count += r.count;
    std::uint32_t rank = 1;
    for (auto& r : records) {
        r.probability = static_cast<double>(r.count) / static_cast<double>(t.total_count);
        r.rank = rank++;
    }
    t.records = std::move(records);
    return t;
}

} // namespace detail

// CSV with header `word,count`, UTF-8, LF or CRLF. Words are normalized on
// ingestion and must consist purely of alphabet letters.
inline WordFrequencyTable load_frequency_table(std::istream& source,
                                               const Alphabet& alphabet = spanish_alphabet()) {
    std::string line;
    std::size_t line_no = 0;
    auto next_line = [&](std::string& out) {
        if (!std::getline(source, out)) return false;
        ++line_no;
        if (!out.empty() && out.back() == '\r') out.pop_back();
        return true;
    };
    if (!next_line(line) || line != "word,count")
        throw ParseError("line 1: expected header `word,count`");
    std::vector<FrequencyRecord> records;
    std::map<std::u32string, std::size_t> seen;
    while (next_line(line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos || comma == 0 ||
            line.find(',', comma + 1) != std::string::npos)
            throw ParseError("line " + std::to_string(line_no) + ": expected `word,count`");
        const std::string word_field = line.substr(0, comma);
        const std::string count_field = line.substr(comma + 1);
        if (count_field.empty() ||
            count_field.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("line " + std::to_string(line_no) + ": count must be a positive integer");
        std::uint64_t count = 0;
        for (char c : count_field) {
            if (count > (UINT64_MAX - 9) / 10)
                throw ParseError("line " + std::to_string(line_no) + ": count out of range");
            count = count * 10 + static_cast<std::uint64_t>(c - '0');
        }
        if (count == 0)
            throw ParseError("line " + std::to_string(line_no) + ": count must be positive");
        FrequencyRecord r;
        if (!normalize_word(word_field, alphabet, r.word))
            throw ValidationError("word `" + word_field + "` contains non-alphabet characters");
        if (!seen.emplace(r.word, line_no).second)
            throw ValidationError("duplicate word `" + utf8::encode(r.word) + "`");
        r.count = count;
        records.push_back(std::move(r));
    }
    return detail::finish_table(std::move(records));
}

inline void save_frequency_table(const WordFrequencyTable& table, std::ostream& sink) {
    sink << "word,count\n";
    for (const auto& r : table.records)
        sink << utf8::encode(r.word) << ',' << r.count << '\n';
    if (!sink) throw IoError("failed writing frequency table");
}

// Synthetic table with probabilities proportional to 1/rank. Word names are
// fixed-width base-26 strings so codepoint order equals rank order and every
// downstream tie-break stays consistent.
inline WordFrequencyTable synthesize_zipf_table(std::size_t J, double k,
                                                std::uint64_t min_count_scale) {
    if (J < 1) throw ValidationError("J must be >= 1");
    if (!(k > 0.0 && k < 1.0)) throw ValidationError("k must lie in (0,1)");
    if (min_count_scale < 1) throw ValidationError("min_count_scale must be >= 1");
    std::size_t width = 1;
    for (std::size_t cap = 26; cap < J; cap *= 26) ++width;
    KahanSum harmonic;
    for (std::size_t n = 1; n <= J; ++n) harmonic.add(1.0 / static_cast<double>(n));
    const double h_j = harmonic.value();
    std::vector<FrequencyRecord> records;
    records.reserve(J);
    for (std::size_t n = 1; n <= J; ++n) {
        FrequencyRecord r;
        std::u32string name(width, U'a');
        std::size_t v = n - 1;
        for (std::size_t pos = width; pos-- > 0 && v > 0; v /= 26)
            name[pos] = static_cast<char32_t>(U'a' + v % 26);
        r.word = std::move(name);
        const double p = (1.0 / static_cast<double>(n)) / h_j;
        const double scaled = p * static_cast<double>(min_count_scale) * static_cast<double>(J);
        r.count = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::llround(scaled)));
        records.push_back(std::move(r));
    }
    return detail::finish_table(std::move(records));
}

// First-order word approximation: i.i.d. draws by inverse CDF over the
// cumulative counts, using the library's documented splitmix64 stream.
inline WordSequence sample_text(const WordFrequencyTable& table, std::size_t n_words,
                                std::uint64_t seed) {
    if (n_words < 1) throw ValidationError("n_words must be >= 1");
    if (table.records.empty()) throw ValidationError("frequency table is empty");
    std::vector<std::uint64_t> cumulative;
    cumulative.reserve(table.records.size());
    std::uint64_t acc = 0;
    for (const auto& r : table.records) {
        acc += r.count;
        cumulative.push_back(acc);
    }
    SplitMix64 rng(seed);
    WordSequence seq;
    seq.seed = seed;
    seq.words.reserve(n_words);
    for (std::size_t i = 0; i < n_words; ++i) {
        const std::uint64_t v = rng.uniform_below(table.total_count);
        const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), v);
        seq.words.push_back(table.records[static_cast<std::size_t>(it - cumulative.begin())].word);
    }
    return seq;
}

inline double average_word_length(const WordFrequencyTable& table) {
    KahanSum s;
    for (const auto& r : table.records)
        s.add(static_cast<double>(r.word.size()) * r.probability);
    return s.value();
}

// Text serialization of a word sequence; with_spaces=false concatenates the
// words directly. No trailing newline either way.
inline std::string render_words(const std::vector<std::u32string>& words, bool with_spaces) {
    std::string out;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (with_spaces && i > 0) out.push_back(' ');
        out += utf8::encode(words[i]);
    }
    return out;
}

} // namespace itlab
