// itlab: entropy, source coding and channel coding experiments over
// word-frequency corpora. See README for the full tour.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "itlab/itlab.hpp"

namespace {

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw itlab::IoError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw itlab::IoError("read failed for " + path);
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw itlab::IoError("cannot open " + path);
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) throw itlab::IoError("write failed for " + path);
}

itlab::WordFrequencyTable load_table(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw itlab::IoError("cannot open table file " + path);
    return itlab::load_frequency_table(in);
}

struct GenArgs {
    std::string table;
    std::uint64_t words = 0;
    std::uint64_t seed = 1;
    bool no_spaces = false;
    std::string out;
};

int cmd_gen(const GenArgs& a) {
    const auto table = load_table(a.table);
    const auto seq = itlab::sample_text(table, a.words, a.seed);
    const std::string text = itlab::render_words(seq.words, !a.no_spaces);
    if (a.out.empty())
        std::cout << text << '\n';
    else
        write_text_file(a.out, text);
    return 0;
}

struct NgramArgs {
    int order = 1;
    std::string in;
    std::string csv;
};

int cmd_ngram(const NgramArgs& a) {
    const auto words = itlab::normalize_text(read_text_file(a.in), itlab::spanish_alphabet());
    const auto counts =
        itlab::count_ngrams(words, static_cast<std::size_t>(a.order), itlab::spanish_alphabet());
    const auto result = itlab::shannon_entropy(counts, words.size());
    const char* kind = a.order == 1 ? "letters" : a.order == 2 ? "digrams" : "trigrams";
    std::printf("Symbols: %s\n", kind);
    std::printf("Sample length (words): %llu\n",
                static_cast<unsigned long long>(result.sample_length_words));
    std::printf("Distinct symbols: %zu\n", result.distinct_symbols);
    std::printf("Total symbols: %llu\n", static_cast<unsigned long long>(counts.total));
    std::printf("H_symbol: %.4f bits/symbol\n", result.h_symbol);
    std::printf("H_letter: %.4f bits/letter\n", result.h_letter);
    if (!a.csv.empty()) {
        std::ofstream out(a.csv, std::ios::binary);
        if (!out) throw itlab::IoError("cannot open " + a.csv);
        itlab::export_frequency_csv(counts, out);
    }
    return 0;
}

struct WordfreqArgs {
    std::string in;
    std::string csv;
};

int cmd_wordfreq(const WordfreqArgs& a) {
    const auto words = itlab::normalize_text(read_text_file(a.in), itlab::spanish_alphabet());
    const auto counts = itlab::count_words(words);
    const auto result = itlab::shannon_entropy(counts, words.size());
    std::printf("Words: %llu\n", static_cast<unsigned long long>(counts.total));
    std::printf("Distinct words: %zu\n", result.distinct_symbols);
    std::printf("H_word: %.4f bits/word\n", result.h_symbol);
    if (!a.csv.empty()) {
        std::ofstream out(a.csv, std::ios::binary);
        if (!out) throw itlab::IoError("cannot open " + a.csv);
        itlab::export_frequency_csv(counts, out);
    }
    return 0;
}

struct BarnardArgs {
    std::string table;
    std::uint64_t rank_lo = 1;
    std::uint64_t rank_hi = 1000;
    bool rank_hi_set = false;
    std::optional<double> alpha;
    std::optional<double> k;
    std::optional<std::uint64_t> j;
    std::string curve;
    std::size_t curve_points = 200;
};

int cmd_barnard(const BarnardArgs& a) {
    std::optional<itlab::WordFrequencyTable> table;
    if (!a.table.empty()) table = load_table(a.table);
    if (!table && (!a.k || !a.j))
        throw itlab::ValidationError("need --table, or --k together with --j");

    const std::uint64_t J = a.j ? *a.j : table->J();
    double k;
    if (a.k) {
        k = *a.k;
    } else {
        std::uint64_t hi = a.rank_hi;
        if (!a.rank_hi_set && hi > table->J()) hi = table->J();
        k = itlab::estimate_k(*table, a.rank_lo, hi);
    }
    std::printf("k: %.6f\n", k);
    std::printf("J: %llu\n", static_cast<unsigned long long>(J));
    std::printf("ln M: %.4f\n", itlab::solve_ln_M(k, J));

    std::optional<double> alpha = a.alpha;
    if (!alpha && table) alpha = itlab::average_word_length(*table);
    if (alpha) {
        std::printf("alpha: %.4f letters/word\n", *alpha);
        const auto res = itlab::letter_entropy_per_word({k, *alpha, J});
        std::printf("F_W: %.4f bits/letter\n", res.f_w);
    }
    if (table) {
        const double h_word = itlab::word_entropy(*table);
        std::printf("H_word: %.4f bits/word\n", h_word);
        if (alpha)
            std::printf("Entropy rate: %.4f bits/letter\n", itlab::entropy_rate(h_word, *alpha));
        if (!a.curve.empty()) {
            std::ofstream out(a.curve, std::ios::binary);
            if (!out) throw itlab::IoError("cannot open " + a.curve);
            itlab::export_rank_curve_csv(itlab::rank_probability_curve(*table, a.curve_points), out);
        }
    } else if (!a.curve.empty()) {
        throw itlab::ValidationError("--curve needs --table");
    }
    return 0;
}

struct EncodeArgs {
    std::string method;
    std::string symbols;
    std::string in;
    std::string out;
    bool no_dict = false;
    std::string codebook_csv;
    std::string freq_csv;
};

int cmd_encode(const EncodeArgs& a) {
    const auto method = itlab::parse_source_method(a.method);
    const auto domain = itlab::parse_symbol_domain(a.symbols);
    const auto words = itlab::normalize_text(read_text_file(a.in), itlab::spanish_alphabet());
    if (words.empty()) throw itlab::ValidationError("input contains no alphabet words");
    const auto symbols = itlab::symbolize(words, domain);
    const auto counts = itlab::count_words(symbols);

    itlab::CodedStream stream;
    stream.method = method;
    stream.domain = domain;
    stream.has_dictionary = !a.no_dict;
    if (stream.has_dictionary) stream.dictionary = counts;
    stream.n_symbols = counts.total;
    double avg_length = 0.0;
    if (method == itlab::SourceMethod::Huffman) {
        const auto book = itlab::huffman_build(counts);
        stream.payload = itlab::huffman_encode(symbols, book);
        avg_length = book.avg_length;
        if (!a.codebook_csv.empty()) {
            std::ofstream cb(a.codebook_csv, std::ios::binary);
            if (!cb) throw itlab::IoError("cannot open " + a.codebook_csv);
            itlab::export_codebook_csv(book, cb);
        }
    } else {
        if (!a.codebook_csv.empty())
            throw itlab::ValidationError("--codebook-csv applies to huffman only");
        const auto model = itlab::SymbolModel::from_counts(counts);
        stream.payload = itlab::arithmetic_encode(symbols, model);
        avg_length = static_cast<double>(stream.payload.bit_length()) /
                     static_cast<double>(counts.total);
    }
    if (!a.freq_csv.empty()) {
        std::ofstream fr(a.freq_csv, std::ios::binary);
        if (!fr) throw itlab::IoError("cannot open " + a.freq_csv);
        itlab::export_frequency_csv(counts, fr);
    }
    {
        std::ofstream out(a.out, std::ios::binary);
        if (!out) throw itlab::IoError("cannot open " + a.out);
        itlab::write_coded_stream(out, stream);
    }
    const auto entropy = itlab::shannon_entropy(counts, words.size());
    std::printf("Symbols: %llu (%zu distinct)\n",
                static_cast<unsigned long long>(counts.total), counts.counts.size());
    std::printf("Source entropy: %.4f bits/symbol\n", entropy.h_symbol);
    std::printf("Average code length: %.4f bits/symbol\n", avg_length);
    std::printf("Payload: %llu bits (%llu bytes)\n",
                static_cast<unsigned long long>(stream.payload.bit_length()),
                static_cast<unsigned long long>(stream.payload_bytes()));
    return 0;
}

struct DecodeArgs {
    std::string in;
    std::string out;
    std::string method;
    std::string symbols;
};

int cmd_decode(const DecodeArgs& a) {
    std::ifstream in(a.in, std::ios::binary);
    if (!in) throw itlab::IoError("cannot open " + a.in);
    const auto stream = itlab::read_coded_stream(in);
    if (!a.method.empty() && itlab::parse_source_method(a.method) != stream.method)
        throw itlab::ValidationError("stream was encoded with a different method");
    if (!a.symbols.empty() && itlab::parse_symbol_domain(a.symbols) != stream.domain)
        throw itlab::ValidationError("stream was encoded over a different symbol domain");
    if (!stream.has_dictionary)
        throw itlab::ValidationError("stream has no inline dictionary; re-encode without --no-dict");
    std::vector<std::u32string> symbols;
    if (stream.method == itlab::SourceMethod::Huffman) {
        symbols = itlab::huffman_decode(stream.payload, itlab::huffman_build(stream.dictionary));
    } else {
        symbols = itlab::arithmetic_decode(stream.payload,
                                           itlab::SymbolModel::from_counts(stream.dictionary),
                                           stream.n_symbols);
    }
    write_text_file(a.out, itlab::render_words(symbols, stream.domain == itlab::SymbolDomain::Word));
    std::printf("Decoded %zu symbols\n", symbols.size());
    return 0;
}

struct ChannelArgs {
    std::string code;
    double p = 0.0;
    std::uint64_t seed = 1;
    std::string in;
    std::string out;
    std::string received_out;
};

int cmd_channel(const ChannelArgs& a) {
    const auto code = itlab::parse_channel_code(a.code);
    const std::string data = read_text_file(a.in);
    itlab::BitStream payload(
        std::vector<std::uint8_t>(data.begin(), data.end()),
        static_cast<std::uint64_t>(data.size()) * 8);

    const auto sent = itlab::channel_encode(payload, code);
    const auto outcome = itlab::bsc_transmit(sent.coded, a.p, a.seed);
    itlab::CodedFrame received = sent;
    received.coded = outcome.received;
    if (!a.received_out.empty()) {
        std::ofstream rec(a.received_out, std::ios::binary);
        if (!rec) throw itlab::IoError("cannot open " + a.received_out);
        itlab::write_coded_frame(rec, received);
    }
    const auto recovered = itlab::channel_decode(received);
    const auto residual = itlab::hamming_distance(payload, recovered);
    std::string out_data(recovered.bytes().begin(), recovered.bytes().end());
    out_data.resize(data.size());
    write_text_file(a.out, out_data);

    std::printf("Payload bits: %llu\n", static_cast<unsigned long long>(payload.bit_length()));
    std::printf("Transmitted bits: %llu\n",
                static_cast<unsigned long long>(sent.coded.bit_length()));
    std::printf("Error bits: %llu\n", static_cast<unsigned long long>(outcome.errors_introduced));
    std::printf("Residual error bits: %llu\n", static_cast<unsigned long long>(residual));
    const double correction =
        outcome.errors_introduced > 0
            ? 100.0 *
                  (static_cast<double>(outcome.errors_introduced) - static_cast<double>(residual)) /
                  static_cast<double>(outcome.errors_introduced)
            : 100.0;
    std::printf("Correction rate: %.4f%%\n", correction);
    return residual == 0 ? 0 : 3;
}

struct PipelineArgs {
    std::string config;
};

int cmd_pipeline(const PipelineArgs& a) {
    const auto cfg = itlab::load_pipeline_config(a.config);
    const auto report = itlab::run_pipeline(cfg);
    std::fputs(itlab::render_report_text(report).c_str(), stdout);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"entropy, source coding and channel coding lab"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "generate first-order word-approximation text");
    gen_cmd->add_option("--table", gen.table, "word,count CSV")->required();
    gen_cmd->add_option("--words", gen.words, "number of words to draw")->required();
    gen_cmd->add_option("--seed", gen.seed, "PRNG seed (default 1)");
    gen_cmd->add_flag("--no-spaces", gen.no_spaces, "concatenate words without spaces");
    gen_cmd->add_option("-o,--out", gen.out, "output file (default stdout)");

    NgramArgs ngram;
    auto* ngram_cmd = app.add_subcommand("ngram", "letter n-gram entropy of a text");
    ngram_cmd->add_option("--order", ngram.order, "1=letters, 2=digrams, 3=trigrams")
        ->required()
        ->check(CLI::Range(1, 3));
    ngram_cmd->add_option("--in", ngram.in, "input text file")->required();
    ngram_cmd->add_option("--csv", ngram.csv, "frequency CSV output");

    WordfreqArgs wordfreq;
    auto* wf_cmd = app.add_subcommand("wordfreq", "word frequencies and word entropy of a text");
    wf_cmd->add_option("--in", wordfreq.in, "input text file")->required();
    wf_cmd->add_option("--csv", wordfreq.csv, "frequency CSV output");

    BarnardArgs barnard;
    auto* barnard_cmd =
        app.add_subcommand("barnard", "letter entropy per word from a rank-probability curve");
    barnard_cmd->add_option("--table", barnard.table, "word,count CSV");
    barnard_cmd->add_option("--rank-lo", barnard.rank_lo, "first rank of the k window (default 1)");
    auto* hi_opt = barnard_cmd->add_option("--rank-hi", barnard.rank_hi,
                                           "last rank of the k window (default min(1000, J))");
    barnard_cmd->add_option("--alpha", barnard.alpha, "average letters per word");
    barnard_cmd->add_option("--k", barnard.k, "language constant (skips estimation)");
    barnard_cmd->add_option("--j", barnard.j, "dictionary size (defaults to table size)");
    barnard_cmd->add_option("--curve", barnard.curve, "rank-probability curve CSV output");
    barnard_cmd->add_option("--curve-points", barnard.curve_points,
                            "max curve points (default 200)");

    EncodeArgs encode;
    auto* enc_cmd = app.add_subcommand("encode", "source-code a text file");
    enc_cmd->add_option("--method", encode.method, "huffman or arithmetic")->required();
    enc_cmd->add_option("--symbols", encode.symbols, "letter, digram, trigram or word")->required();
    enc_cmd->add_option("--in", encode.in, "input text file")->required();
    enc_cmd->add_option("--out", encode.out, "coded stream output")->required();
    enc_cmd->add_flag("--no-dict", encode.no_dict, "omit the inline dictionary");
    enc_cmd->add_option("--codebook-csv", encode.codebook_csv, "Huffman dictionary CSV output");
    enc_cmd->add_option("--freq-csv", encode.freq_csv, "symbol frequency CSV output");

    DecodeArgs decode;
    auto* dec_cmd = app.add_subcommand("decode", "decode a coded stream back to text");
    dec_cmd->add_option("--in", decode.in, "coded stream input")->required();
    dec_cmd->add_option("--out", decode.out, "decoded text output")->required();
    dec_cmd->add_option("--method", decode.method, "expected method (validated)");
    dec_cmd->add_option("--symbols", decode.symbols, "expected symbol domain (validated)");

    ChannelArgs channel;
    auto* chan_cmd =
        app.add_subcommand("channel", "send a file through channel coding and a BSC");
    chan_cmd
        ->add_option("--code", channel.code,
                     "rs15k5, rs15k9, rs15k13, conv-r14-k3, conv-r23-k43 or none")
        ->required();
    chan_cmd->add_option("--p", channel.p, "bit flip probability (default 0)");
    chan_cmd->add_option("--seed", channel.seed, "PRNG seed (default 1)");
    chan_cmd->add_option("--in", channel.in, "input file (treated as raw bits)")->required();
    chan_cmd->add_option("--out", channel.out, "decoded output file")->required();
    chan_cmd->add_option("--received-out", channel.received_out, "received frame output");

    PipelineArgs pipeline;
    auto* pipe_cmd = app.add_subcommand("pipeline", "run the full experiment from a config file");
    pipe_cmd->add_option("--config", pipeline.config, "JSON config file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        barnard.rank_hi_set = hi_opt->count() > 0;
        if (gen_cmd->parsed()) return cmd_gen(gen);
        if (ngram_cmd->parsed()) return cmd_ngram(ngram);
        if (wf_cmd->parsed()) return cmd_wordfreq(wordfreq);
        if (barnard_cmd->parsed()) return cmd_barnard(barnard);
        if (enc_cmd->parsed()) return cmd_encode(encode);
        if (dec_cmd->parsed()) return cmd_decode(decode);
        if (chan_cmd->parsed()) return cmd_channel(channel);
        if (pipe_cmd->parsed()) return cmd_pipeline(pipeline);
    } catch (const itlab::DecodeError& e) {
        std::fprintf(stderr, "error: %s (bit offset %llu)\n", e.what(),
                     static_cast<unsigned long long>(e.bit_offset));
        return 3;
    } catch (const itlab::FramingError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const itlab::IoError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const itlab::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::runtime_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
