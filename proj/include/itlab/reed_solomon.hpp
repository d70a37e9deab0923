#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "itlab/errors.hpp"
#include "itlab/gf16.hpp"

namespace itlab {

// RS(15, k) over GF(16), systematic, with g(x) = prod_{i=1..n-k} (x - alpha^i).
// Codewords are stored first-symbol-first; symbol index i carries the
// coefficient of x^(n-1-i).
struct RSConfig {
    int n = 15;
    int k = 0;
    int m = 4;
    int t = 0;

    static RSConfig for_k(int k) {
        if (k != 5 && k != 9 && k != 13)
            throw ValidationError("RS message length k must be 5, 9 or 13");
        RSConfig cfg;
        cfg.k = k;
        cfg.t = (cfg.n - k) / 2;
        return cfg;
    }
};

// Generator polynomial coefficients, ascending degree (index 0 = constant).
inline std::vector<std::uint8_t> rs_generator(int n_minus_k) {
    std::vector<std::uint8_t> g{1};
    for (int i = 1; i <= n_minus_k; ++i) {
        const std::uint8_t a = gf16::alpha_pow(static_cast<unsigned>(i));
        std::vector<std::uint8_t> ng(g.size() + 1, 0);
        for (std::size_t j = 0; j < g.size(); ++j) {
            ng[j] = gf16::add(ng[j], gf16::mul(g[j], a));
            ng[j + 1] = gf16::add(ng[j + 1], g[j]);
        }
        g = std::move(ng);
    }
    return g;
}

inline std::vector<std::uint8_t> rs_encode(const std::vector<std::uint8_t>& message,
                                           const RSConfig& cfg) {
    if (static_cast<int>(message.size()) != cfg.k)
        throw DomainError("message length must equal k");
    for (std::uint8_t s : message)
        if (s > 15) throw DomainError("symbols must be 4-bit values");
    const int nk = cfg.n - cfg.k;
    const std::vector<std::uint8_t> g = rs_generator(nk);
    // long division of message(x) * x^(n-k) by g(x); work in descending order
    std::vector<std::uint8_t> work(message);
    work.resize(static_cast<std::size_t>(cfg.n), 0);
    for (int i = 0; i < cfg.k; ++i) {
        const std::uint8_t c = work[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        for (int j = 0; j <= nk; ++j)
            work[static_cast<std::size_t>(i + j)] = gf16::add(
                work[static_cast<std::size_t>(i + j)],
                gf16::mul(c, g[static_cast<std::size_t>(nk - j)]));
    }
    std::vector<std::uint8_t> codeword(message);
    codeword.insert(codeword.end(), work.begin() + cfg.k, work.end());
    return codeword;
}

struct RSDecoded {
    std::vector<std::uint8_t> message;
    int corrected = 0;
};

namespace detail {

// Horner evaluation of a first-symbol-first codeword at point a.
inline std::uint8_t rs_poly_eval(const std::vector<std::uint8_t>& cw, std::uint8_t a) {
    std::uint8_t acc = 0;
    for (std::uint8_t c : cw) acc = gf16::add(gf16::mul(acc, a), c);
    return acc;
}

} // namespace detail

// Syndromes, Berlekamp-Massey locator, Chien search, Forney values. Up to t
// symbol errors are corrected; beyond that the decoder either reports
// failure (nullopt) or, undetectably, lands on a different codeword.
inline std::optional<RSDecoded> rs_decode(const std::vector<std::uint8_t>& received,
                                          const RSConfig& cfg) {
    if (static_cast<int>(received.size()) != cfg.n)
        throw DomainError("received word must have n symbols");
    const int nk = cfg.n - cfg.k;
    std::vector<std::uint8_t> synd(static_cast<std::size_t>(nk));
    bool clean = true;
    for (int j = 1; j <= nk; ++j) {
        const std::uint8_t s = detail::rs_poly_eval(received, gf16::alpha_pow(static_cast<unsigned>(j)));
        synd[static_cast<std::size_t>(j - 1)] = s;
        if (s != 0) clean = false;
    }
    if (clean)
        return RSDecoded{std::vector<std::uint8_t>(received.begin(), received.begin() + cfg.k), 0};

    // Berlekamp-Massey for the error locator Lambda(x), ascending coefficients.
    std::vector<std::uint8_t> lambda{1}, prev{1};
    int L = 0, m = 1;
    std::uint8_t b = 1;
    for (int n = 0; n < nk; ++n) {
        std::uint8_t d = synd[static_cast<std::size_t>(n)];
        for (int i = 1; i <= L && i < static_cast<int>(lambda.size()); ++i)
            d = gf16::add(d, gf16::mul(lambda[static_cast<std::size_t>(i)],
                                       synd[static_cast<std::size_t>(n - i)]));
        if (d == 0) {
            ++m;
            continue;
        }
        const std::uint8_t coef = gf16::mul(d, gf16::inv(b));
        std::vector<std::uint8_t> next = lambda;
        if (next.size() < prev.size() + static_cast<std::size_t>(m))
            next.resize(prev.size() + static_cast<std::size_t>(m), 0);
        for (std::size_t i = 0; i < prev.size(); ++i)
            next[i + static_cast<std::size_t>(m)] =
                gf16::add(next[i + static_cast<std::size_t>(m)], gf16::mul(coef, prev[i]));
        if (2 * L <= n) {
            prev = lambda;
            L = n + 1 - L;
            b = d;
            m = 1;
        } else {
            ++m;
        }
        lambda = std::move(next);
    }
    while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
    const int deg = static_cast<int>(lambda.size()) - 1;
    if (deg != L || L > cfg.t) return std::nullopt;

    // Chien search: an error at symbol index i (degree n-1-i) has locator
    // alpha^(n-1-i); its inverse root is alpha^-(n-1-i).
    std::vector<int> error_degrees;
    for (int d = 0; d < cfg.n; ++d) {
        const std::uint8_t x = gf16::alpha_pow(static_cast<unsigned>((15 - d % 15) % 15));
        std::uint8_t acc = 0;
        std::uint8_t xp = 1;
        for (std::uint8_t c : lambda) {
            acc = gf16::add(acc, gf16::mul(c, xp));
            xp = gf16::mul(xp, x);
        }
        if (acc == 0) error_degrees.push_back(d);
    }
    if (static_cast<int>(error_degrees.size()) != L) return std::nullopt;

    // Forney: Omega(x) = S(x)Lambda(x) mod x^(n-k), error value at locator X
    // is Omega(X^-1) / Lambda'(X^-1) for syndromes starting at alpha^1.
    std::vector<std::uint8_t> omega(static_cast<std::size_t>(nk), 0);
    for (std::size_t i = 0; i < static_cast<std::size_t>(nk); ++i) {
        for (std::size_t j = 0; j < lambda.size() && j <= i; ++j)
            omega[i] = gf16::add(omega[i], gf16::mul(synd[i - j], lambda[j]));
    }
    std::vector<std::uint8_t> corrected = received;
    for (int d : error_degrees) {
        const std::uint8_t x_inv = gf16::alpha_pow(static_cast<unsigned>((15 - d % 15) % 15));
        std::uint8_t om = 0, xp = 1;
        for (std::uint8_t c : omega) {
            om = gf16::add(om, gf16::mul(c, xp));
            xp = gf16::mul(xp, x_inv);
        }
        // Lambda'(x): formal derivative keeps odd-degree terms only.
        std::uint8_t dl = 0;
        xp = 1;
        for (std::size_t i = 1; i < lambda.size(); i += 2) {
            dl = gf16::add(dl, gf16::mul(lambda[i], xp));
            xp = gf16::mul(xp, gf16::mul(x_inv, x_inv));
        }
        if (dl == 0) return std::nullopt;
        const std::uint8_t magnitude = gf16::mul(om, gf16::inv(dl));
        const std::size_t idx = static_cast<std::size_t>(cfg.n - 1 - d);
        corrected[idx] = gf16::add(corrected[idx], magnitude);
    }
    for (int j = 1; j <= nk; ++j)
        if (detail::rs_poly_eval(corrected, gf16::alpha_pow(static_cast<unsigned>(j))) != 0)
            return std::nullopt;
    return RSDecoded{std::vector<std::uint8_t>(corrected.begin(), corrected.begin() + cfg.k), L};
}

} // namespace itlab
