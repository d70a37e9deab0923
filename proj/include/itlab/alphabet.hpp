#pragma once

#include <algorithm>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "itlab/errors.hpp"
#include "itlab/utf8.hpp"

namespace itlab {

// Ordered symbol set over Unicode codepoints. Symbol indices follow the
// stored order; spanish_alphabet() stores ascending codepoints, so index
// order, codepoint order and UTF-8 byte order all agree.
class Alphabet {
public:
    explicit Alphabet(std::vector<char32_t> symbols) : symbols_(std::move(symbols)) {
        if (symbols_.empty()) throw ValidationError("alphabet must not be empty");
        for (std::size_t i = 0; i < symbols_.size(); ++i) {
            if (!index_.emplace(symbols_[i], i).second)
                throw ValidationError("alphabet contains a duplicate symbol");
        }
    }

    std::size_t size() const { return symbols_.size(); }
    char32_t symbol(std::size_t i) const { return symbols_.at(i); }
    const std::vector<char32_t>& symbols() const { return symbols_; }

    bool contains(char32_t c) const { return index_.count(c) != 0; }

    std::size_t index_of(char32_t c) const {
        auto it = index_.find(c);
        if (it == index_.end()) throw DomainError("symbol not in alphabet");
        return it->second;
    }

private:
    std::vector<char32_t> symbols_;
    std::unordered_map<char32_t, std::size_t> index_;
};

// 33 letters: a-z plus the accented vowels, u-umlaut and n-tilde, in
// ascending codepoint order.
inline const Alphabet& spanish_alphabet() {
    static const Alphabet a([] {
        std::vector<char32_t> s;
        for (char32_t c = U'a'; c <= U'z'; ++c) s.push_back(c);
        s.push_back(U'á'); // a acute
        s.push_back(U'é'); // e acute
        s.push_back(U'í'); // i acute
        s.push_back(U'ñ'); // n tilde
        s.push_back(U'ó'); // o acute
        s.push_back(U'ú'); // u acute
        s.push_back(U'ü'); // u umlaut
        return s;
    }());
    return a;
}

namespace detail {

inline char32_t fold_lower(char32_t c) {
    if (c >= U'A' && c <= U'Z') return c + 32;
    switch (c) {
        case U'Á': return U'á';
        case U'É': return U'é';
        case U'Í': return U'í';
        case U'Ñ': return U'ñ';
        case U'Ó': return U'ó';
        case U'Ú': return U'ú';
        case U'Ü': return U'ü';
        default: return c;
    }
}

// Compose a lowercased base letter with a combining mark. Returns 0 when the
// pair has no precomposed form we care about.
inline char32_t compose(char32_t base, char32_t mark) {
    if (mark == U'́') { // acute
        switch (base) {
            case U'a': return U'á';
            case U'e': return U'é';
            case U'i': return U'í';
            case U'o': return U'ó';
            case U'u': return U'ú';
            default: return 0;
        }
    }
    if (mark == U'̃' && base == U'n') return U'ñ'; // tilde
    if (mark == U'̈' && base == U'u') return U'ü'; // diaeresis
    return 0;
}

inline bool is_combining_mark(char32_t c) {
    return c == U'́' || c == U'̃' || c == U'̈';
}

} // namespace detail

// Normalizes one token that must consist purely of alphabet letters.
// Returns false (leaving out untouched) if any codepoint fails to land in
// the alphabet after case folding and mark composition.
inline bool normalize_word(std::string_view token, const Alphabet& alphabet,
                           std::u32string& out) {
    const std::u32string cps = utf8::decode(token);
    std::u32string w;
    for (char32_t raw : cps) {
        const char32_t c = detail::fold_lower(raw);
        if (detail::is_combining_mark(c) && !w.empty()) {
            const char32_t composed = detail::compose(w.back(), c);
            if (composed != 0 && alphabet.contains(composed)) {
                w.back() = composed;
                continue;
            }
            return false;
        }
        if (!alphabet.contains(c)) return false;
        w.push_back(c);
    }
    if (w.empty()) return false;
    out = std::move(w);
    return true;
}

// Lowercases, folds combining sequences into precomposed letters, and splits
// on anything outside the alphabet. Decomposed input ("n" + combining tilde)
// lands on the same symbol as precomposed input.
inline std::vector<std::u32string> normalize_text(std::string_view text,
                                                  const Alphabet& alphabet) {
    const std::u32string cps = utf8::decode(text);
    std::vector<std::u32string> words;
    std::u32string cur;
    auto flush = [&] {
        if (!cur.empty()) {
            words.push_back(cur);
            cur.clear();
        }
    };
    for (char32_t raw : cps) {
        const char32_t c = detail::fold_lower(raw);
        if (detail::is_combining_mark(c) && !cur.empty()) {
            const char32_t composed = detail::compose(cur.back(), c);
            if (composed != 0 && alphabet.contains(composed)) {
                cur.back() = composed;
                continue;
            }
        }
        if (alphabet.contains(c)) {
            cur.push_back(c);
        } else {
            flush();
        }
    }
    flush();
    return words;
}

} // namespace itlab
