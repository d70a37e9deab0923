#include "doctest.h"

#include <cmath>

#include "itlab/arithmetic.hpp"
#include "itlab/ngram.hpp"
#include "itlab/rng.hpp"

using namespace itlab;

namespace {

std::u32string sym_name(std::size_t i) {
    std::u32string s;
    s.push_back(static_cast<char32_t>(U'a' + i % 26));
    if (i >= 26) s.push_back(static_cast<char32_t>(U'a' + (i / 26) % 26));
    return s;
}

// Draw a text, then model it with its own counts (two-pass, like the coder is
// used everywhere in this library).
struct Sample {
    std::vector<std::u32string> text;
    NGramCounts counts;
};

Sample random_sample(SplitMix64& rng, std::size_t n_symbols, std::size_t length) {
    std::vector<std::uint64_t> weights(n_symbols);
    std::uint64_t total = 0;
    for (auto& w : weights) {
        w = 1 + rng.uniform_below(100);
        total += w;
    }
    Sample s;
    s.counts.order = 0;
    for (std::size_t i = 0; i < length; ++i) {
        std::uint64_t v = rng.uniform_below(total);
        std::size_t idx = 0;
        while (v >= weights[idx]) {
            v -= weights[idx];
            ++idx;
        }
        s.text.push_back(sym_name(idx));
    }
    for (const auto& t : s.text) {
        ++s.counts.counts[t];
        ++s.counts.total;
    }
    return s;
}

} // namespace

TEST_SUITE("arithmetic") {

TEST_CASE("model construction and lookup") {
    NGramCounts c;
    c.order = 0;
    c.counts[U"a"] = 3;
    c.counts[U"b"] = 1;
    c.total = 4;
    const auto m = SymbolModel::from_counts(c);
    CHECK(m.size() == 2);
    CHECK(m.total() == 4);
    CHECK(m.low(0) == 0);
    CHECK(m.high(0) == 3);
    CHECK(m.high(1) == 4);
    CHECK(m.index_of(U"b") == 1);
    CHECK(m.find_by_cum(0) == 0);
    CHECK(m.find_by_cum(2) == 0);
    CHECK(m.find_by_cum(3) == 1);
    CHECK_THROWS_AS(m.index_of(U"zz"), CodingError);

    NGramCounts empty;
    CHECK_THROWS_AS(SymbolModel::from_counts(empty), DomainError);

    NGramCounts huge;
    huge.order = 0;
    huge.counts[U"a"] = (1ull << 30) + 1;
    huge.total = (1ull << 30) + 1;
    CHECK_THROWS_AS(SymbolModel::from_counts(huge), ValidationError);
}

TEST_CASE("empty input encodes to an empty stream") {
    NGramCounts c;
    c.order = 0;
    c.counts[U"a"] = 1;
    c.total = 1;
    const auto m = SymbolModel::from_counts(c);
    CHECK(arithmetic_encode({}, m).bit_length() == 0);
    CHECK(arithmetic_decode(BitStream(), m, 0).empty());
}

TEST_CASE("single-symbol alphabet roundtrip") {
    NGramCounts c;
    c.order = 0;
    c.counts[U"x"] = 5;
    c.total = 5;
    const auto m = SymbolModel::from_counts(c);
    for (std::size_t n = 1; n <= 5; ++n) {
        const std::vector<std::u32string> text(n, U"x");
        const auto bits = arithmetic_encode(text, m);
        CHECK(bits.bit_length() <= 64); // degenerate model, only flush bits
        CHECK(arithmetic_decode(bits, m, n) == text);
    }
}

TEST_CASE("roundtrip over random models") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n_symbols = 2 + rng.uniform_below(39);
        const std::size_t length = rng.uniform_below(2001);
        const Sample s = random_sample(rng, n_symbols, length);
        if (s.text.empty()) continue;
        const auto m = SymbolModel::from_counts(s.counts);
        const auto bits = arithmetic_encode(s.text, m);
        CHECK(arithmetic_decode(bits, m, s.text.size()) == s.text);
    }
}

TEST_CASE("encoded length stays near the empirical entropy") {
    SplitMix64 rng(123);
    for (int trial = 0; trial < 10; ++trial) {
        const Sample s = random_sample(rng, 3 + rng.uniform_below(30), 4000);
        const auto m = SymbolModel::from_counts(s.counts);
        const auto bits = arithmetic_encode(s.text, m);
        const double h = shannon_entropy(s.counts).h_symbol;
        CHECK(static_cast<double>(bits.bit_length()) <=
              static_cast<double>(s.text.size()) * h + 64.0);
    }
}

TEST_CASE("large roundtrip") {
    SplitMix64 rng(7);
    const Sample s = random_sample(rng, 40, 100000);
    const auto m = SymbolModel::from_counts(s.counts);
    const auto bits = arithmetic_encode(s.text, m);
    CHECK(arithmetic_decode(bits, m, s.text.size()) == s.text);
}

TEST_CASE("corrupt or truncated streams still yield n_symbols symbols") {
    SplitMix64 rng(31);
    const Sample s = random_sample(rng, 8, 300);
    const auto m = SymbolModel::from_counts(s.counts);
    auto bits = arithmetic_encode(s.text, m);
    REQUIRE(bits.bit_length() > 10);
    bits.flip_bit(bits.bit_length() / 2);
    const auto damaged = arithmetic_decode(bits, m, s.text.size());
    CHECK(damaged.size() == s.text.size());

    BitStream truncated;
    for (std::uint64_t i = 0; i < bits.bit_length() / 3; ++i) truncated.push_bit(bits.bit(i));
    CHECK(arithmetic_decode(truncated, m, s.text.size()).size() == s.text.size());
}

} // TEST_SUITE
