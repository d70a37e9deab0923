#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "itlab/alphabet.hpp"
#include "itlab/arithmetic.hpp"
#include "itlab/barnard.hpp"
#include "itlab/bitstream.hpp"
#include "itlab/channel.hpp"
#include "itlab/channel_code.hpp"
#include "itlab/coded_stream.hpp"
#include "itlab/corpus.hpp"
#include "itlab/errors.hpp"
#include "itlab/huffman.hpp"
#include "itlab/ngram.hpp"

namespace itlab {

struct PipelineConfig {
    std::string table_path;
    std::uint64_t n_words = 1000;
    SymbolDomain symbol_domain = SymbolDomain::Word;
    SourceMethod source_coder = SourceMethod::Huffman;
    ChannelCode channel_coder = ChannelCode::None;
    double p = 0.0;
    std::uint64_t seed = 1;
    std::string output_dir;
};

struct PipelineReport {
    std::uint64_t n_words = 0;
    SourceMethod source_coder = SourceMethod::Huffman;
    SymbolDomain symbol_domain = SymbolDomain::Word;
    ChannelCode channel_coder = ChannelCode::None;
    double p = 0.0;
    std::uint64_t seed = 0;
    std::uint64_t n_symbols = 0;
    std::uint64_t distinct_symbols = 0;
    double source_entropy_bits_per_symbol = 0.0;
    double avg_code_length = 0.0;
    std::string shortest_code; // empty for arithmetic coding (no dictionary)
    std::string longest_code;
    std::uint64_t original_size_bytes = 0;
    std::uint64_t encoded_size_bytes = 0;
    double compression_rate_percent = 0.0;
    std::uint64_t info_bits = 0;
    std::uint64_t transmitted_bits = 0;
    std::uint64_t error_bits = 0;
    std::uint64_t residual_error_bits = 0;
    double ber = 0.0;         // residual errors over information bits
    double channel_ber = 0.0; // raw channel errors over transmitted bits
    double correction_rate_percent = 0.0;
    std::uint64_t symbol_mismatches = 0;
    bool files_identical = false;
};

struct Rates {
    double ber = 0.0;
    double correction_rate_percent = 0.0;
    double compression_rate_percent = 0.0;
};

// A decoder driven past its capability can emit more damage than the channel
// put in; the correction rate then goes negative rather than failing.
inline Rates compute_rates(std::uint64_t error_bits, std::uint64_t residual,
                           std::uint64_t info_bits, std::uint64_t original_bytes,
                           std::uint64_t encoded_bytes) {
    if (info_bits < 1) throw DomainError("info_bits must be >= 1");
    if (original_bytes < 1) throw DomainError("original_bytes must be >= 1");
    Rates r;
    r.ber = static_cast<double>(residual) / static_cast<double>(info_bits);
    r.correction_rate_percent =
        error_bits > 0
            ? 100.0 * (static_cast<double>(error_bits) - static_cast<double>(residual)) /
                  static_cast<double>(error_bits)
            : 100.0;
    r.compression_rate_percent =
        (1.0 - static_cast<double>(encoded_bytes) / static_cast<double>(original_bytes)) * 100.0;
    return r;
}

// Positionwise mismatches plus the length difference.
inline std::uint64_t compare_files(const std::vector<std::u32string>& a,
                                   const std::vector<std::u32string>& b) {
    const std::size_t common = std::min(a.size(), b.size());
    std::uint64_t mismatches = 0;
    for (std::size_t i = 0; i < common; ++i)
        if (a[i] != b[i]) ++mismatches;
    mismatches += static_cast<std::uint64_t>(std::max(a.size(), b.size()) - common);
    return mismatches;
}

// Coding symbolization. Unlike entropy counting, coding needs a reversible
// partition, so digrams/trigrams here are non-overlapping chunks of the
// concatenated letter stream (the final chunk may be shorter).
inline std::vector<std::u32string> symbolize(const std::vector<std::u32string>& words,
                                             SymbolDomain domain) {
    if (domain == SymbolDomain::Word) return words;
    std::u32string letters;
    for (const auto& w : words) letters += w;
    std::vector<std::u32string> symbols;
    const std::size_t width = domain == SymbolDomain::Letter ? 1
                              : domain == SymbolDomain::Digram ? 2
                                                               : 3;
    for (std::size_t i = 0; i < letters.size(); i += width)
        symbols.push_back(letters.substr(i, width));
    return symbols;
}

inline PipelineConfig pipeline_config_from_json(const nlohmann::json& j) {
    PipelineConfig cfg;
    try {
        cfg.table_path = j.at("table_path").get<std::string>();
        cfg.output_dir = j.at("output_dir").get<std::string>();
        if (j.contains("n_words")) cfg.n_words = j.at("n_words").get<std::uint64_t>();
        if (j.contains("symbol_domain"))
            cfg.symbol_domain = parse_symbol_domain(j.at("symbol_domain").get<std::string>());
        if (j.contains("source_coder"))
            cfg.source_coder = parse_source_method(j.at("source_coder").get<std::string>());
        if (j.contains("channel_coder"))
            cfg.channel_coder = parse_channel_code(j.at("channel_coder").get<std::string>());
        if (j.contains("p")) cfg.p = j.at("p").get<double>();
        if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("config: ") + e.what());
    }
    if (cfg.n_words < 1) throw ValidationError("config: n_words must be >= 1");
    if (!(cfg.p >= 0.0 && cfg.p <= 1.0)) throw ValidationError("config: p must lie in [0,1]");
    return cfg;
}

inline PipelineConfig load_pipeline_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("config " + path + ": " + e.what());
    }
    return pipeline_config_from_json(j);
}

inline std::string channel_code_description(ChannelCode c) {
    switch (c) {
        case ChannelCode::RS15K5: return "Reed-Solomon (n=15, k=5)";
        case ChannelCode::RS15K9: return "Reed-Solomon (n=15, k=9)";
        case ChannelCode::RS15K13: return "Reed-Solomon (n=15, k=13)";
        case ChannelCode::ConvR14K3: return "Convolutional (rate=1/4, K=3)";
        case ChannelCode::ConvR23K43: return "Convolutional (rate=2/3, K=[4, 3])";
        default: return "None";
    }
}

inline std::string render_report_text(const PipelineReport& r) {
    std::ostringstream out;
    char buf[64];
    auto fixed = [&buf](double v, int digits) {
        std::snprintf(buf, sizeof buf, "%.*f", digits, v);
        return std::string(buf);
    };
    out << "File size: " << r.n_words << " words\n";
    out << "Source coding: " << (r.source_coder == SourceMethod::Huffman ? "Huffman" : "Arithmetic")
        << " method\n";
    out << "Source symbols: " << to_string(r.symbol_domain) << "s\n";
    out << "Channel Coding: " << channel_code_description(r.channel_coder) << "\n";
    std::snprintf(buf, sizeof buf, "%g", r.p);
    out << "BSC Error Probability: " << buf << "\n";
    out << "Source Entropy: " << fixed(r.source_entropy_bits_per_symbol, 3) << " bits/symbol\n";
    out << "Average Code Length: " << fixed(r.avg_code_length, 3) << " bits/symbol\n";
    out << "Shortest code: " << (r.shortest_code.empty() ? "-" : r.shortest_code) << "\n";
    out << "Largest code: " << (r.longest_code.empty() ? "-" : r.longest_code) << "\n";
    out << "Original File Size: " << r.original_size_bytes << " bytes\n";
    out << "Encoded File Size: " << r.encoded_size_bytes << " bytes\n";
    out << "Compression rate: " << fixed(r.compression_rate_percent, 4) << "%\n";
    out << "Number of transmitted bits: " << r.transmitted_bits << "\n";
    out << "Error Bits: " << r.error_bits << "\n";
    out << "Error Bits after correction: " << r.residual_error_bits << "\n";
    out << "BER: " << fixed(r.ber, 8) << "\n";
    out << "Channel BER: " << fixed(r.channel_ber, 8) << "\n";
    out << "Correction rate: " << fixed(r.correction_rate_percent, 4) << "%\n";
    out << "Source file " << (r.files_identical ? "=" : "!=") << " Destination File\n";
    return out.str();
}

inline nlohmann::json report_to_json(const PipelineReport& r) {
    return nlohmann::json{
        {"n_words", r.n_words},
        {"source_coder", to_string(r.source_coder)},
        {"symbol_domain", to_string(r.symbol_domain)},
        {"channel_coder", to_string(r.channel_coder)},
        {"p", r.p},
        {"seed", r.seed},
        {"n_symbols", r.n_symbols},
        {"distinct_symbols", r.distinct_symbols},
        {"source_entropy_bits_per_symbol", r.source_entropy_bits_per_symbol},
        {"avg_code_length", r.avg_code_length},
        {"shortest_code", r.shortest_code},
        {"longest_code", r.longest_code},
        {"original_size_bytes", r.original_size_bytes},
        {"encoded_size_bytes", r.encoded_size_bytes},
        {"compression_rate_percent", r.compression_rate_percent},
        {"info_bits", r.info_bits},
        {"transmitted_bits", r.transmitted_bits},
        {"error_bits", r.error_bits},
        {"residual_error_bits", r.residual_error_bits},
        {"ber", r.ber},
        {"channel_ber", r.channel_ber},
        {"correction_rate_percent", r.correction_rate_percent},
        {"symbol_mismatches", r.symbol_mismatches},
        {"files_identical", r.files_identical},
    };
}

namespace detail {

inline void write_file(const std::filesystem::path& path, const std::string& data,
                       const char* stage) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError(std::string(stage) + ": cannot open " + path.string());
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) throw IoError(std::string(stage) + ": write failed for " + path.string());
}

} // namespace detail

// Full chain: sample -> source code -> channel code -> BSC -> decode both
// layers -> compare and report. The channel uses seed+1 so its noise stream
// is decoupled from the text sampler. Residual decode damage never aborts
// the run; it shows up in the report instead.
inline PipelineReport run_pipeline(const PipelineConfig& cfg) {
    namespace fs = std::filesystem;
    if (cfg.output_dir.empty()) throw ValidationError("config: output_dir is required");
    if (!(cfg.p >= 0.0 && cfg.p <= 1.0)) throw ValidationError("config: p must lie in [0,1]");
    if (cfg.n_words < 1) throw ValidationError("config: n_words must be >= 1");
    std::error_code ec;
    fs::create_directories(cfg.output_dir, ec);
    if (ec) throw IoError("cannot create output dir " + cfg.output_dir + ": " + ec.message());
    const fs::path out_dir(cfg.output_dir);

    std::ifstream table_in(cfg.table_path, std::ios::binary);
    if (!table_in) throw IoError("source: cannot open table file " + cfg.table_path);
    const WordFrequencyTable table = load_frequency_table(table_in);

    const WordSequence sample = sample_text(table, cfg.n_words, cfg.seed);
    const bool spaced = cfg.symbol_domain == SymbolDomain::Word;
    const std::string source_text = render_words(sample.words, spaced);
    detail::write_file(out_dir / "source.txt", source_text, "source");

    const std::vector<std::u32string> source_symbols = symbolize(sample.words, cfg.symbol_domain);
    NGramCounts counts = count_words(source_symbols);

    {
        std::ofstream freq(out_dir / "frequencies.csv", std::ios::binary);
        if (!freq) throw IoError("source: cannot open frequencies.csv");
        export_frequency_csv(counts, freq);
    }

    PipelineReport report;
    report.n_words = cfg.n_words;
    report.source_coder = cfg.source_coder;
    report.symbol_domain = cfg.symbol_domain;
    report.channel_coder = cfg.channel_coder;
    report.p = cfg.p;
    report.seed = cfg.seed;
    report.n_symbols = counts.total;
    report.distinct_symbols = counts.counts.size();
    report.source_entropy_bits_per_symbol = shannon_entropy(counts, cfg.n_words).h_symbol;
    report.original_size_bytes = source_text.size();

    CodedStream stream;
    stream.method = cfg.source_coder;
    stream.domain = cfg.symbol_domain;
    stream.has_dictionary = true;
    stream.dictionary = counts;
    stream.n_symbols = counts.total;
    CodeBook book;
    SymbolModel model = SymbolModel::from_counts(counts);
    if (cfg.source_coder == SourceMethod::Huffman) {
        book = huffman_build(counts);
        stream.payload = huffman_encode(source_symbols, book);
        report.avg_code_length = book.avg_length;
        report.shortest_code = book.shortest;
        report.longest_code = book.longest;
        std::ofstream cb(out_dir / "codebook.csv", std::ios::binary);
        if (!cb) throw IoError("source coding: cannot open codebook.csv");
        export_codebook_csv(book, cb);
    } else {
        stream.payload = arithmetic_encode(source_symbols, model);
        report.avg_code_length = counts.total > 0 ? static_cast<double>(stream.payload.bit_length()) /
                                                        static_cast<double>(counts.total)
                                                  : 0.0;
    }
    {
        std::ofstream enc(out_dir / "encoded.bin", std::ios::binary);
        if (!enc) throw IoError("source coding: cannot open encoded.bin");
        write_coded_stream(enc, stream);
    }
    report.info_bits = stream.payload.bit_length();
    report.encoded_size_bytes = stream.payload_bytes();

    const CodedFrame sent = channel_encode(stream.payload, cfg.channel_coder);
    report.transmitted_bits = sent.coded.bit_length();

    const ChannelOutcome outcome = bsc_transmit(sent.coded, cfg.p, cfg.seed + 1);
    report.error_bits = outcome.errors_introduced;
    CodedFrame received = sent;
    received.coded = outcome.received;
    {
        std::ofstream rec(out_dir / "received.bin", std::ios::binary);
        if (!rec) throw IoError("channel: cannot open received.bin");
        write_coded_frame(rec, received);
    }

    const BitStream recovered = channel_decode(received);
    report.residual_error_bits = hamming_distance(stream.payload, recovered);

    std::vector<std::u32string> decoded_symbols;
    if (cfg.source_coder == SourceMethod::Huffman) {
        decoded_symbols = huffman_decode_best_effort(recovered, book);
    } else {
        decoded_symbols = arithmetic_decode(recovered, model, stream.n_symbols);
    }
    const std::string decoded_text = render_words(decoded_symbols, spaced);
    detail::write_file(out_dir / "decoded.txt", decoded_text, "source decoding");

    report.symbol_mismatches = compare_files(decoded_symbols, source_symbols);
    report.files_identical = report.symbol_mismatches == 0;

    report.channel_ber = report.transmitted_bits > 0
                             ? static_cast<double>(report.error_bits) /
                                   static_cast<double>(report.transmitted_bits)
                             : 0.0;
    const Rates rates = compute_rates(report.error_bits, report.residual_error_bits,
                                      report.info_bits, report.original_size_bytes,
                                      report.encoded_size_bytes);
    report.ber = rates.ber;
    report.correction_rate_percent = rates.correction_rate_percent;
    report.compression_rate_percent = rates.compression_rate_percent;

    detail::write_file(out_dir / "report.txt", render_report_text(report), "report");
    detail::write_file(out_dir / "report.json", report_to_json(report).dump(2) + "\n", "report");
    return report;
}

} // namespace itlab
