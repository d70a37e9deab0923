#pragma once

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "itlab/bitstream.hpp"
#include "itlab/errors.hpp"
#include "itlab/kahan.hpp"
#include "itlab/ngram.hpp"
#include "itlab/utf8.hpp"

namespace itlab {

struct CodeBook {
    std::map<std::u32string, std::string> entries; // symbol -> 0/1 code
    double avg_length = 0.0;                       // frequency-weighted bits/symbol
    std::string shortest;
    std::string longest;
};

// Repeated lowest-count merge. Ties are broken by the codepoint order of the
// lexicographically smallest symbol under each node, and the first node
// popped takes branch 0, so identical counts always yield identical books.
inline CodeBook huffman_build(const NGramCounts& counts) {
    if (counts.counts.empty()) throw DomainError("cannot build a code over empty counts");
    struct Node {
        std::uint64_t count = 0;
        std::u32string min_sym;
        int left = -1, right = -1;
        bool leaf = false;
    };
    std::vector<Node> arena;
    arena.reserve(counts.counts.size() * 2);
    for (const auto& [sym, c] : counts.counts) {
        Node n;
        n.count = c;
        n.min_sym = sym;
        n.leaf = true;
        arena.push_back(std::move(n));
    }
    auto after = [&arena](int a, int b) {
        if (arena[a].count != arena[b].count) return arena[a].count > arena[b].count;
        return arena[a].min_sym > arena[b].min_sym;
    };
    std::vector<int> heap(arena.size());
    std::iota(heap.begin(), heap.end(), 0);
    std::make_heap(heap.begin(), heap.end(), after);
    auto pop = [&] {
        std::pop_heap(heap.begin(), heap.end(), after);
        const int v = heap.back();
        heap.pop_back();
        return v;
    };
    while (heap.size() > 1) {
        const int a = pop();
        const int b = pop();
        Node p;
        p.count = arena[a].count + arena[b].count;
        p.min_sym = std::min(arena[a].min_sym, arena[b].min_sym);
        p.left = a;
        p.right = b;
        arena.push_back(std::move(p));
        heap.push_back(static_cast<int>(arena.size()) - 1);
        std::push_heap(heap.begin(), heap.end(), after);
    }

    CodeBook book;
    const int root = heap.front();
    if (arena[root].leaf) {
        book.entries[arena[root].min_sym] = "0";
    } else {
        std::vector<std::pair<int, std::string>> stack;
        stack.emplace_back(root, "");
        while (!stack.empty()) {
            auto [idx, code] = std::move(stack.back());
            stack.pop_back();
            const Node& n = arena[idx];
            if (n.leaf) {
                book.entries[n.min_sym] = std::move(code);
                continue;
            }
            stack.emplace_back(n.right, code + "1");
            stack.emplace_back(n.left, code + "0");
        }
    }

    KahanSum weighted;
    for (const auto& [sym, code] : book.entries)
        weighted.add(static_cast<double>(code.size()) *
                     static_cast<double>(counts.counts.at(sym)));
    book.avg_length = weighted.value() / static_cast<double>(counts.total);
    const std::string* sh = nullptr;
    const std::string* lo = nullptr;
    for (const auto& [sym, code] : book.entries) {
        if (!sh || code.size() < sh->size()) sh = &code;
        if (!lo || code.size() > lo->size()) lo = &code;
    }
    book.shortest = *sh;
    book.longest = *lo;
    return book;
}

inline BitStream huffman_encode(const std::vector<std::u32string>& symbols,
                                const CodeBook& book) {
    BitStream out;
    for (const auto& s : symbols) {
        const auto it = book.entries.find(s);
        if (it == book.entries.end())
            throw CodingError("symbol not in codebook: " + utf8::encode(s));
        for (char c : it->second) out.push_bit(c == '1');
    }
    return out;
}

namespace detail {

struct CodeTrie {
    struct TNode {
        int child[2] = {-1, -1};
        int leaf = -1;
    };
    std::vector<TNode> nodes;
    std::vector<const std::u32string*> leaves;

    explicit CodeTrie(const CodeBook& book) {
        nodes.emplace_back();
        for (const auto& [sym, code] : book.entries) {
            int cur = 0;
            for (char c : code) {
                const int b = c == '1';
                if (nodes[cur].child[b] < 0) {
                    nodes[cur].child[b] = static_cast<int>(nodes.size());
                    nodes.emplace_back();
                }
                cur = nodes[cur].child[b];
            }
            nodes[cur].leaf = static_cast<int>(leaves.size());
            leaves.push_back(&sym);
        }
    }
};

inline std::vector<std::u32string> huffman_decode_impl(const BitStream& bits,
                                                       const CodeBook& book,
                                                       bool strict) {
    const CodeTrie trie(book);
    std::vector<std::u32string> out;
    int cur = 0;
    std::uint64_t code_start = 0;
    for (std::uint64_t i = 0; i < bits.bit_length(); ++i) {
        const int next = trie.nodes[cur].child[bits.bit(i)];
        if (next < 0) {
            if (strict) throw DecodeError("bit sequence matches no code", code_start);
            return out;
        }
        cur = next;
        const int leaf = trie.nodes[cur].leaf;
        if (leaf >= 0) {
            out.push_back(*trie.leaves[leaf]);
            cur = 0;
            code_start = i + 1;
        }
    }
    if (cur != 0 && strict)
        throw DecodeError("stream ends inside a code", code_start);
    return out;
}

} // namespace detail

inline std::vector<std::u32string> huffman_decode(const BitStream& bits,
                                                  const CodeBook& book) {
    return detail::huffman_decode_impl(bits, book, true);
}

// Decodes as far as the stream stays consistent with the book, then stops.
// Used after a noisy channel where aborting would hide the damage report.
inline std::vector<std::u32string> huffman_decode_best_effort(const BitStream& bits,
                                                              const CodeBook& book) {
    return detail::huffman_decode_impl(bits, book, false);
}

// Rows ordered by (code length, code); summary rows are prefixed with `#`,
// which no alphabet symbol can start with.
inline void export_codebook_csv(const CodeBook& book, std::ostream& sink) {
    sink << "symbol,code\n";
    std::vector<std::pair<const std::string*, const std::u32string*>> rows;
    rows.reserve(book.entries.size());
    for (const auto& [sym, code] : book.entries) rows.emplace_back(&code, &sym);
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (a.first->size() != b.first->size()) return a.first->size() < b.first->size();
        return *a.first < *b.first;
    });
    for (const auto& [code, sym] : rows)
        sink << utf8::encode(*sym) << ',' << *code << '\n';
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", book.avg_length);
    sink << "#avg_length," << buf << '\n';
    sink << "#shortest," << book.shortest << '\n';
    sink << "#longest," << book.longest << '\n';
    if (!sink) throw IoError("failed writing codebook csv");
}

} // namespace itlab
