#include "doctest.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "itlab/barnard.hpp"
#include "itlab/corpus.hpp"

using namespace itlab;

namespace {

WordFrequencyTable table_from(const std::string& csv) {
    std::istringstream in(csv);
    return load_frequency_table(in);
}

WordFrequencyTable bundled_table() {
    std::ifstream in(ITLAB_DATA_DIR "/sample_table_1000.csv", std::ios::binary);
    REQUIRE(in);
    return load_frequency_table(in);
}

} // namespace

TEST_SUITE("corpus") {

TEST_CASE("load assigns ranks and probabilities") {
    const auto t = table_from("word,count\nde,6\nla,3\nque,1\n");
    REQUIRE(t.J() == 3);
    CHECK(t.total_count == 10);
    CHECK(t.records[0].word == U"de");
    CHECK(t.records[0].rank == 1);
    CHECK(t.records[0].probability == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(t.records[2].word == U"que");
    CHECK(t.records[2].probability == doctest::Approx(0.1).epsilon(1e-15));
}

TEST_CASE("load sorts by count descending, codepoint ascending on ties") {
    const auto t = table_from("word,count\nzeta,5\nbeta,5\nuno,9\n");
    CHECK(t.records[0].word == U"uno");
    CHECK(t.records[1].word == U"beta");
    CHECK(t.records[2].word == U"zeta");
}

TEST_CASE("load handles CRLF, blank lines and normalization") {
    const auto t = table_from("word,count\r\nCanción,4\r\n\r\nNIÑO,2\r\n");
    REQUIRE(t.J() == 2);
    CHECK(t.records[0].word == U"canción");
    CHECK(t.records[1].word == U"niño");
}

TEST_CASE("load rejects malformed input") {
    CHECK_THROWS_AS(table_from(""), ParseError);
    CHECK_THROWS_AS(table_from("frequency,word\nde,1\n"), ParseError);
    CHECK_THROWS_AS(table_from("word,count\nde\n"), ParseError);
    CHECK_THROWS_AS(table_from("word,count\nde,1,2\n"), ParseError);
    CHECK_THROWS_AS(table_from("word,count\nde,\n"), ParseError);
    CHECK_THROWS_AS(table_from("word,count\nde,x9\n"), ParseError);
    CHECK_THROWS_AS(table_from("word,count\nde,-4\n"), ParseError);
    CHECK_THROWS_AS(table_from("word,count\nde,0\n"), ParseError);
    CHECK_THROWS_AS(table_from("word,count\nde,18446744073709551616\n"), ParseError);
    CHECK_THROWS_AS(table_from("word,count\nd2e,1\n"), ValidationError);
    CHECK_THROWS_AS(table_from("word,count\nCasa,2\ncasa,1\n"), ValidationError);
    CHECK_THROWS_AS(table_from("word,count\n"), ValidationError); // no rows
}

TEST_CASE("save then load is the identity") {
    const auto t = table_from("word,count\nseñal,7\nruido,7\ncódigo,1\n");
    std::ostringstream first;
    save_frequency_table(t, first);
    std::istringstream back(first.str());
    const auto t2 = load_frequency_table(back);
    std::ostringstream second;
    save_frequency_table(t2, second);
    CHECK(first.str() == second.str());
    CHECK(t2.total_count == t.total_count);
    REQUIRE(t2.J() == t.J());
    for (std::size_t i = 0; i < t.J(); ++i) CHECK(t2.records[i].word == t.records[i].word);
}

TEST_CASE("bundled sample table statistics") {
    const auto t = bundled_table();
    REQUIRE(t.J() == 1000);
    CHECK(t.total_count == 898247);
    CHECK(t.records[0].word == U"de");
    CHECK(t.records[0].count == 120000);
    CHECK(std::fabs(word_entropy(t) - 7.4890120486391618) <= 1e-9);
    CHECK(std::fabs(average_word_length(t) - 4.1691962233105144) <= 1e-9);
    CHECK(std::fabs(estimate_k(t, 1, 1000) - 0.13358972198070243) <= 1e-12);
}

TEST_CASE("zipf synthesis matches its closed form") {
    const auto t = synthesize_zipf_table(1000, 0.5, 1000);
    REQUIRE(t.J() == 1000);
    CHECK(t.total_count == 999997);
    CHECK(std::fabs(estimate_k(t, 1, 1000) - 0.13359138277414831) <= 1e-12);
    // near 1/H_J by construction
    CHECK(std::fabs(estimate_k(t, 1, 1000) - 1.0 / harmonic_sum(1000)) <= 1e-5);
    // fixed-width base-26 names keep codepoint order equal to rank order
    CHECK(t.records[0].word == U"aaa");
    CHECK(t.records[1].word == U"aab");
    CHECK(t.records[26].word == U"aba");
    for (std::size_t i = 1; i < t.J(); ++i) {
        CHECK(t.records[i - 1].word < t.records[i].word);
        CHECK(t.records[i - 1].count >= t.records[i].count);
    }
}

TEST_CASE("zipf synthesis validation") {
    CHECK_THROWS_AS(synthesize_zipf_table(0, 0.5, 1), ValidationError);
    CHECK_THROWS_AS(synthesize_zipf_table(10, 0.0, 1), ValidationError);
    CHECK_THROWS_AS(synthesize_zipf_table(10, 1.0, 1), ValidationError);
    CHECK_THROWS_AS(synthesize_zipf_table(10, 0.5, 0), ValidationError);
}

TEST_CASE("sampling is deterministic in the seed") {
    const auto t = bundled_table();
    const auto a = sample_text(t, 200, 42);
    const auto b = sample_text(t, 200, 42);
    const auto c = sample_text(t, 200, 43);
    CHECK(a.words == b.words);
    CHECK(a.seed == 42);
    CHECK(a.words.size() == 200);
    CHECK_FALSE(a.words == c.words);
}

TEST_CASE("sampling follows the table distribution") {
    const auto t = bundled_table();
    const auto seq = sample_text(t, 20000, 7);
    std::size_t de = 0;
    for (const auto& w : seq.words)
        if (w == U"de") ++de;
    const double observed = static_cast<double>(de) / 20000.0;
    CHECK(std::fabs(observed - t.records[0].probability) <= 0.02);
}

TEST_CASE("sampling edge cases") {
    const auto single = table_from("word,count\nsolo,3\n");
    const auto seq = sample_text(single, 50, 1);
    for (const auto& w : seq.words) CHECK(w == U"solo");
    CHECK_THROWS_AS(sample_text(single, 0, 1), ValidationError);
}

TEST_CASE("average word length is probability weighted") {
    const auto t = table_from("word,count\nde,3\ntres,1\n");
    CHECK(average_word_length(t) == doctest::Approx(2.5).epsilon(1e-15));
}

TEST_CASE("render with and without spaces") {
    const std::vector<std::u32string> words{U"la", U"señal", U"sube"};
    CHECK(render_words(words, true) == "la señal sube");
    CHECK(render_words(words, false) == "laseñalsube");
    CHECK(render_words({}, true).empty());
}

} // TEST_SUITE
