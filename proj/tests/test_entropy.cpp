#include "doctest.h"

#include <cmath>
#include <sstream>

#include "itlab/alphabet.hpp"
#include "itlab/ngram.hpp"

using namespace itlab;

namespace {
const double kH21 = std::log2(3.0) - 2.0 / 3.0; // H(2/3, 1/3)
}

TEST_SUITE("entropy") {

TEST_CASE("letter counts slide within words only") {
    const std::vector<std::u32string> words{U"ab", U"ca"};
    const auto c1 = count_ngrams(words, 1, spanish_alphabet());
    CHECK(c1.order == 1);
    CHECK(c1.total == 4);
    CHECK(c1.counts.at(U"a") == 2);
    CHECK(c1.counts.at(U"b") == 1);
    CHECK(c1.counts.at(U"c") == 1);

    const auto c2 = count_ngrams(words, 2, spanish_alphabet());
    CHECK(c2.total == 2); // "ab" and "ca"; no digram spans the boundary
    CHECK(c2.counts.at(U"ab") == 1);
    CHECK(c2.counts.at(U"ca") == 1);

    // words shorter than the order contribute nothing
    const auto c3 = count_ngrams({U"ab", U"c"}, 3, spanish_alphabet());
    CHECK(c3.total == 0);
    CHECK_THROWS_AS(shannon_entropy(c3), DomainError);
}

TEST_CASE("order and alphabet validation") {
    CHECK_THROWS_AS(count_ngrams({U"ab"}, 0, spanish_alphabet()), ValidationError);
    CHECK_THROWS_AS(count_ngrams({U"a1"}, 1, spanish_alphabet()), DomainError);
}

TEST_CASE("entropy of known distributions") {
    // counts {2,1,1}: H = 1.5 exactly
    const auto h211 = shannon_entropy(count_ngrams({U"ab", U"ca"}, 1, spanish_alphabet()));
    CHECK(h211.h_symbol == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(h211.distinct_symbols == 3);

    // counts {4,2,1,1}: H = 1.75 exactly
    NGramCounts c;
    c.order = 0;
    c.counts[U"a"] = 4;
    c.counts[U"b"] = 2;
    c.counts[U"c"] = 1;
    c.counts[U"d"] = 1;
    c.total = 8;
    CHECK(shannon_entropy(c).h_symbol == 1.75);

    // uniform over 32 symbols: exactly 5 bits
    NGramCounts u;
    u.order = 1;
    for (char32_t ch = U'a'; ch < U'a' + 32; ++ch) {
        u.counts[std::u32string(1, ch)] = 1;
        ++u.total;
    }
    CHECK(shannon_entropy(u).h_symbol == 5.0);
}

TEST_CASE("per-letter entropy divides by the order") {
    const std::vector<std::u32string> words{U"abab"};
    const auto c2 = count_ngrams(words, 2, spanish_alphabet()); // ab,ba,ab
    const auto r = shannon_entropy(c2, words.size());
    CHECK(r.h_symbol == doctest::Approx(kH21).epsilon(1e-15));
    CHECK(r.h_letter == doctest::Approx(r.h_symbol / 2.0).epsilon(1e-15));
    CHECK(r.sample_length_words == 1);

    const auto r0 = shannon_entropy(count_words({U"de", U"la", U"de"}));
    CHECK(r0.h_symbol == doctest::Approx(kH21).epsilon(1e-15));
    CHECK(r0.h_letter == r0.h_symbol); // order 0 is already per variable-length symbol
}

TEST_CASE("merge is order-checked and additive") {
    const auto a = count_ngrams({U"abc"}, 2, spanish_alphabet());
    const auto b = count_ngrams({U"bcd"}, 2, spanish_alphabet());
    const auto all = count_ngrams({U"abc", U"bcd"}, 2, spanish_alphabet());
    const auto merged = merge(a, b);
    CHECK(merged.total == all.total);
    CHECK(merged.counts == all.counts);
    CHECK(merge(b, a).counts == merged.counts);
    CHECK_THROWS_AS(merge(a, count_ngrams({U"abc"}, 1, spanish_alphabet())), ValidationError);
}

TEST_CASE("entropy is insensitive to how the sample was chunked") {
    std::vector<std::u32string> text;
    for (int i = 0; i < 500; ++i)
        text.push_back(i % 3 == 0 ? U"entropía" : i % 3 == 1 ? U"canal" : U"ruido");
    const auto whole = shannon_entropy(count_ngrams(text, 2, spanish_alphabet()));
    NGramCounts acc;
    acc.order = 2;
    for (std::size_t i = 0; i < text.size(); i += 7) {
        const std::vector<std::u32string> chunk(
            text.begin() + static_cast<std::ptrdiff_t>(i),
            text.begin() + static_cast<std::ptrdiff_t>(std::min(i + 7, text.size())));
        acc = merge(acc, count_ngrams(chunk, 2, spanish_alphabet()));
    }
    CHECK(std::fabs(shannon_entropy(acc).h_symbol - whole.h_symbol) <= 1e-9);
}

TEST_CASE("frequency csv format") {
    const auto counts = count_words({U"que", U"que", U"de"});
    std::ostringstream out;
    export_frequency_csv(counts, out);
    CHECK(out.str() == "symbol,frequency,p\nque,2,0.666667\nde,1,0.333333\n");
}

TEST_CASE("frequency csv breaks count ties by codepoint order") {
    const auto counts = count_words({U"ñu", U"be", U"ab"});
    std::ostringstream out;
    export_frequency_csv(counts, out);
    CHECK(out.str() == "symbol,frequency,p\nab,1,0.333333\nbe,1,0.333333\nñu,1,0.333333\n");
}

} // TEST_SUITE
