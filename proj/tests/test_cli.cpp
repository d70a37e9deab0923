#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

const char* kBin = ITLAB_BIN;
const char* kTable = ITLAB_DATA_DIR "/sample_table_1000.csv";

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout + stderr
};

fs::path work_dir() {
    static const fs::path p = [] {
        const fs::path d = fs::temp_directory_path() / "itlab_cli_tests";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return p;
}

RunResult run(const std::string& args) {
    static int counter = 0;
    const fs::path log = work_dir() / ("out_" + std::to_string(counter++) + ".log");
    const std::string cmd =
        '"' + std::string(kBin) + "\" " + args + " > \"" + log.string() + "\" 2>&1";
    const int status = std::system(cmd.c_str());
    RunResult r;
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    std::ifstream in(log, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    r.output = ss.str();
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string q(const fs::path& p) { return '"' + p.string() + '"'; }

} // namespace

TEST_SUITE("cli") {

TEST_CASE("requires a subcommand and offers help") {
    CHECK(run("").exit_code == 1);
    const auto help = run("--help");
    CHECK(help.exit_code == 0);
    CHECK(help.output.find("gen") != std::string::npos);
    CHECK(help.output.find("pipeline") != std::string::npos);
    CHECK(run("frobnicate").exit_code == 1);
}

TEST_CASE("gen writes deterministic text") {
    const fs::path a = work_dir() / "gen_a.txt";
    const fs::path b = work_dir() / "gen_b.txt";
    const std::string base =
        std::string("gen --table \"") + kTable + "\" --words 50 --seed 9 -o ";
    CHECK(run(base + q(a)).exit_code == 0);
    CHECK(run(base + q(b)).exit_code == 0);
    const std::string text = slurp(a);
    CHECK(text == slurp(b));
    std::size_t spaces = 0;
    for (char c : text)
        if (c == ' ') ++spaces;
    CHECK(spaces == 49);

    const fs::path c = work_dir() / "gen_c.txt";
    CHECK(run(std::string("gen --table \"") + kTable +
              "\" --words 50 --seed 9 --no-spaces -o " + q(c))
              .exit_code == 0);
    CHECK(slurp(c).find(' ') == std::string::npos);

    CHECK(run("gen --words 5").exit_code == 1);                         // missing --table
    CHECK(run("gen --table /missing.csv --words 5").exit_code == 2);    // unreadable
}

TEST_CASE("ngram and wordfreq report entropies") {
    const fs::path text = work_dir() / "sample.txt";
    REQUIRE(run(std::string("gen --table \"") + kTable + "\" --words 400 --seed 3 -o " + q(text))
                .exit_code == 0);

    const fs::path csv = work_dir() / "letters.csv";
    const auto n1 = run("ngram --order 1 --in " + q(text) + " --csv " + q(csv));
    CHECK(n1.exit_code == 0);
    CHECK(n1.output.find("H_symbol:") != std::string::npos);
    CHECK(n1.output.find("H_letter:") != std::string::npos);
    CHECK(slurp(csv).rfind("symbol,frequency,p\n", 0) == 0);

    CHECK(run("ngram --order 3 --in " + q(text)).exit_code == 0);
    CHECK(run("ngram --order 5 --in " + q(text)).exit_code == 1);
    CHECK(run("ngram --order 1 --in /missing.txt").exit_code == 2);

    const auto wf = run("wordfreq --in " + q(text));
    CHECK(wf.exit_code == 0);
    CHECK(wf.output.find("H_word:") != std::string::npos);
}

TEST_CASE("barnard from explicit parameters") {
    const auto r = run("barnard --k 0.0817 --j 81323 --alpha 4.6978");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("ln M: 11.6627") != std::string::npos);
    CHECK(r.output.find("F_W: 2.4737") != std::string::npos);
    CHECK(run("barnard --k 0.5").exit_code == 1);  // needs --j too
    CHECK(run("barnard").exit_code == 1);
}

TEST_CASE("barnard from a table") {
    const fs::path curve = work_dir() / "curve.csv";
    const auto r = run(std::string("barnard --table \"") + kTable + "\" --curve " + q(curve));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("k: 0.133590") != std::string::npos);
    CHECK(r.output.find("H_word:") != std::string::npos);
    CHECK(r.output.find("Entropy rate:") != std::string::npos);
    CHECK(slurp(curve).rfind("rank,probability,log10_rank,log10_p\n", 0) == 0);
}

TEST_CASE("encode/decode roundtrip through files") {
    const fs::path text = work_dir() / "roundtrip.txt";
    REQUIRE(run(std::string("gen --table \"") + kTable + "\" --words 200 --seed 5 -o " + q(text))
                .exit_code == 0);
    const std::string original = slurp(text);

    const fs::path stream = work_dir() / "roundtrip.its";
    const fs::path book = work_dir() / "roundtrip_book.csv";
    const auto enc = run("encode --method huffman --symbols word --in " + q(text) + " --out " +
                         q(stream) + " --codebook-csv " + q(book));
    CHECK(enc.exit_code == 0);
    CHECK(enc.output.find("Average code length:") != std::string::npos);
    CHECK(slurp(book).rfind("symbol,code\n", 0) == 0);

    const fs::path decoded = work_dir() / "roundtrip_out.txt";
    CHECK(run("decode --in " + q(stream) + " --out " + q(decoded)).exit_code == 0);
    CHECK(slurp(decoded) == original);

    // arithmetic digram roundtrip
    const fs::path stream2 = work_dir() / "roundtrip2.its";
    CHECK(run("encode --method arithmetic --symbols digram --in " + q(text) + " --out " +
              q(stream2))
              .exit_code == 0);
    const fs::path decoded2 = work_dir() / "roundtrip2_out.txt";
    CHECK(run("decode --in " + q(stream2) + " --out " + q(decoded2) + " --method arithmetic")
              .exit_code == 0);
    std::string packed;
    for (char c : original)
        if (c != ' ') packed.push_back(c);
    CHECK(slurp(decoded2) == packed);

    // mismatched expectations and bad streams
    CHECK(run("decode --in " + q(stream2) + " --out " + q(decoded2) + " --method huffman")
              .exit_code == 1);
    CHECK(run("encode --method arithmetic --symbols word --in " + q(text) + " --out " +
              q(stream2) + " --codebook-csv " + q(book))
              .exit_code == 1);
    const fs::path garbage = work_dir() / "garbage.its";
    std::ofstream(garbage, std::ios::binary) << "this is not a coded stream";
    CHECK(run("decode --in " + q(garbage) + " --out " + q(decoded)).exit_code == 3);

    const fs::path nodict = work_dir() / "nodict.its";
    CHECK(run("encode --method huffman --symbols word --no-dict --in " + q(text) + " --out " +
              q(nodict))
              .exit_code == 0);
    CHECK(run("decode --in " + q(nodict) + " --out " + q(decoded)).exit_code == 1);
}

TEST_CASE("channel subcommand") {
    const fs::path payload = work_dir() / "payload.bin";
    std::ofstream(payload, std::ios::binary) << "some channel payload bytes";

    const fs::path out = work_dir() / "payload_out.bin";
    const auto clean = run("channel --code rs15k5 --p 0 --in " + q(payload) + " --out " + q(out));
    CHECK(clean.exit_code == 0);
    CHECK(clean.output.find("Residual error bits: 0") != std::string::npos);
    CHECK(slurp(out) == slurp(payload));

    const fs::path received = work_dir() / "payload_rx.itf";
    const auto noisy = run("channel --code none --p 0.5 --seed 3 --in " + q(payload) + " --out " +
                           q(out) + " --received-out " + q(received));
    CHECK(noisy.exit_code == 3); // residual damage is a decode failure
    CHECK(noisy.output.find("Error bits:") != std::string::npos);
    CHECK(fs::exists(received));

    CHECK(run("channel --code hamming --p 0 --in " + q(payload) + " --out " + q(out)).exit_code ==
          1);
    CHECK(run("channel --code none --in /missing.bin --out " + q(out)).exit_code == 2);
}

TEST_CASE("pipeline subcommand") {
    const fs::path dir = work_dir() / "pipe";
    const fs::path cfg = work_dir() / "pipe.json";
    std::ofstream(cfg) << "{\n"
                       << "  \"table_path\": \"" << kTable << "\",\n"
                       << "  \"output_dir\": \"" << dir.string() << "\",\n"
                       << "  \"n_words\": 200,\n"
                       << "  \"source_coder\": \"huffman\",\n"
                       << "  \"symbol_domain\": \"word\",\n"
                       << "  \"channel_coder\": \"rs15k13\",\n"
                       << "  \"p\": 0.002,\n"
                       << "  \"seed\": 5\n"
                       << "}\n";
    const auto r = run("pipeline --config " + q(cfg));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("File size: 200 words") != std::string::npos);
    CHECK(r.output.find("Compression rate:") != std::string::npos);
    CHECK(r.output.find("Correction rate:") != std::string::npos);
    CHECK(fs::exists(dir / "report.json"));

    const fs::path bad = work_dir() / "bad.json";
    std::ofstream(bad) << "{ \"output_dir\": 3 }";
    CHECK(run("pipeline --config " + q(bad)).exit_code == 1);
    CHECK(run("pipeline --config /missing.json").exit_code == 2);
}

} // TEST_SUITE
