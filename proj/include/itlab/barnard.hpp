#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <vector>

#include "itlab/corpus.hpp"
#include "itlab/errors.hpp"
#include "itlab/kahan.hpp"

namespace itlab {

struct BarnardInputs {
    double k = 0.0;     // language constant, 0 < k < 1
    double alpha = 0.0; // average letters per word, >= 1
    std::uint64_t J = 0;
};

struct BarnardResult {
    double ln_M = 0.0;         // log of extrapolated vocabulary size
    double f_w = 0.0;          // letter entropy per word, bits/letter
    double harmonic_sum = 0.0; // sum 1/n, n=1..J
    double logsum = 0.0;       // sum ln(n)/n, n=1..J
};

struct RankCurvePoint {
    std::uint64_t rank = 0;
    double probability = 0.0;
    double log10_rank = 0.0;
    double log10_probability = 0.0;
};

// Both sums are evaluated term by term (no asymptotic shortcuts); the
// reference arithmetic this module reproduces depends on the exact sums.
inline double harmonic_sum(std::uint64_t J) {
    KahanSum s;
    for (std::uint64_t n = 1; n <= J; ++n) s.add(1.0 / static_cast<double>(n));
    return s.value();
}

inline double log_over_n_sum(std::uint64_t J) {
    KahanSum s;
    for (std::uint64_t n = 2; n <= J; ++n)
        s.add(std::log(static_cast<double>(n)) / static_cast<double>(n));
    return s.value();
}

// Mean of n*P_n over the rank window; Zipf's law makes this nearly constant
// over mid ranks, which is what qualifies it as the language constant.
inline double estimate_k(const WordFrequencyTable& table, std::uint64_t rank_lo = 1,
                         std::uint64_t rank_hi = 1000) {
    if (rank_lo < 1 || rank_lo > rank_hi || rank_hi > table.J())
        throw DomainError("rank window outside table");
    KahanSum s;
    for (std::uint64_t n = rank_lo; n <= rank_hi; ++n)
        s.add(static_cast<double>(n) * table.records[n - 1].probability);
    return s.value() / static_cast<double>(rank_hi - rank_lo + 1);
}

// ln M = 1/k - sum_{n=1..J} 1/n + ln(J + 0.5): the rank at which the
// extrapolated Zipf tail accumulates total probability 1.
inline double solve_ln_M(double k, std::uint64_t J) {
    if (!(k > 0.0)) throw DomainError("k must be positive");
    if (J < 1) throw DomainError("J must be >= 1");
    return 1.0 / k - harmonic_sum(J) + std::log(static_cast<double>(J) + 0.5);
}

// Barnard's letter-entropy-per-word estimate. The leading constant is
// log2(e) rounded to five decimals; it is kept at that precision because the
// method's reference arithmetic is stated with it.
inline BarnardResult letter_entropy_per_word(const BarnardInputs& in) {
    if (!(in.k > 0.0) || in.k >= 1.0) throw DomainError("k must lie in (0,1)");
    if (!(in.alpha >= 1.0)) throw DomainError("alpha must be >= 1");
    if (in.J < 1) throw DomainError("J must be >= 1");
    constexpr double log2e = 1.44269;
    BarnardResult r;
    r.harmonic_sum = harmonic_sum(in.J);
    r.logsum = log_over_n_sum(in.J);
    r.ln_M = 1.0 / in.k - r.harmonic_sum + std::log(static_cast<double>(in.J) + 0.5);
    const double ln_j_half = std::log(static_cast<double>(in.J) + 0.5);
    const double inner = r.logsum + (r.ln_M * r.ln_M / 2.0 - ln_j_half * ln_j_half / 2.0);
    r.f_w = (-log2e / in.alpha) * (std::log(in.k) - in.k * inner);
    return r;
}

inline double word_entropy(const WordFrequencyTable& table) {
    KahanSum h;
    for (const auto& r : table.records)
        h.add(-r.probability * std::log2(r.probability));
    return h.value();
}

inline double entropy_rate(double h_word, double alpha) {
    if (!(alpha >= 1.0)) throw DomainError("alpha must be >= 1");
    return h_word / alpha;
}

// Rank/probability pairs subsampled logarithmically in rank (all ranks when
// the table is small enough), for log-log plotting.
inline std::vector<RankCurvePoint> rank_probability_curve(const WordFrequencyTable& table,
                                                          std::size_t max_points) {
    if (max_points < 2) throw ValidationError("max_points must be >= 2");
    const std::uint64_t J = table.J();
    std::vector<std::uint64_t> ranks;
    if (J <= max_points) {
        for (std::uint64_t n = 1; n <= J; ++n) ranks.push_back(n);
    } else {
        const double log_j = std::log(static_cast<double>(J));
        std::uint64_t prev = 0;
        for (std::size_t i = 0; i < max_points; ++i) {
            const double f = static_cast<double>(i) / static_cast<double>(max_points - 1);
            auto r = static_cast<std::uint64_t>(std::llround(std::exp(f * log_j)));
            if (r < 1) r = 1;
            if (r > J) r = J;
            if (r != prev) ranks.push_back(r);
            prev = r;
        }
    }
    std::vector<RankCurvePoint> out;
    out.reserve(ranks.size());
    for (std::uint64_t n : ranks) {
        RankCurvePoint pt;
        pt.rank = n;
        pt.probability = table.records[n - 1].probability;
        pt.log10_rank = std::log10(static_cast<double>(n));
        pt.log10_probability = std::log10(pt.probability);
        out.push_back(pt);
    }
    return out;
}

inline void export_rank_curve_csv(const std::vector<RankCurvePoint>& points,
                                  std::ostream& sink) {
    sink << "rank,probability,log10_rank,log10_p\n";
    char buf[96];
    for (const auto& pt : points) {
        std::snprintf(buf, sizeof buf, "%llu,%.9g,%.9g,%.9g",
                      static_cast<unsigned long long>(pt.rank), pt.probability,
                      pt.log10_rank, pt.log10_probability);
        sink << buf << '\n';
    }
    if (!sink) throw IoError("failed writing rank curve csv");
}

} // namespace itlab
