#pragma once

// graph6 codec. Canonical form: N(n) header (one byte n+63 for n <= 62,
// '~' + 3 bytes for n <= 258047, '~~' + 6 bytes above), then the upper
// triangle x(0,1), x(0,2), x(1,2), x(0,3), ... packed 6 bits per byte,
// MSB first, zero-padded, each byte offset by 63. The parser also accepts
// the optional ">>graph6<<" prefix and non-minimal headers; the writer
// always emits the minimal header and no prefix.

#include <cstdint>
#include <string>
#include <string_view>

#include "tightsrg/errors.hpp"
#include "tightsrg/graph.hpp"

namespace tightsrg {

namespace detail {

inline int g6_byte(std::string_view s, size_t i, const char* what) {
    if (i >= s.size()) throw TruncatedBits(std::string("missing ") + what);
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126)
        throw MalformedHeader("byte " + std::to_string(i) + " = " + std::to_string(c) +
                              " outside the graph6 range [63,126]");
    return c - 63;
}

}  // namespace detail

inline Graph parse_graph6(std::string_view text) {
    // strip line ending and optional format prefix
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    constexpr std::string_view prefix = ">>graph6<<";
    if (text.substr(0, prefix.size()) == prefix) text.remove_prefix(prefix.size());
    if (text.empty()) throw MalformedHeader("empty input");

    size_t pos = 0;
    long long n;
    int first = detail::g6_byte(text, pos, "size byte");
    if (first < 63) {
        n = first;
        pos = 1;
    } else if (text.size() >= 2 && detail::g6_byte(text, 1, "size byte") < 63) {
        n = 0;
        for (size_t i = 1; i <= 3; ++i) n = (n << 6) | detail::g6_byte(text, i, "size byte");
        pos = 4;
    } else {
        n = 0;
        for (size_t i = 2; i <= 7; ++i) n = (n << 6) | detail::g6_byte(text, i, "size byte");
        pos = 8;
    }
    if (n > 100000) throw MalformedHeader("vertex count " + std::to_string(n) + " too large");

    Graph g(static_cast<int>(n));
    const long long nbits = n * (n - 1) / 2;
    const size_t nbytes = static_cast<size_t>((nbits + 5) / 6);
    if (text.size() - pos < nbytes)
        throw TruncatedBits("need " + std::to_string(nbytes) + " data bytes, got " +
                            std::to_string(text.size() - pos));
    if (text.size() - pos > nbytes)
        throw NonCanonicalPadding("unexpected trailing bytes after the bit string");

    long long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = detail::g6_byte(text, pos + static_cast<size_t>(bit / 6), "data byte");
            if ((byte >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    // remaining pad bits must be zero
    for (long long b = nbits; b < static_cast<long long>(nbytes) * 6; ++b) {
        int byte = detail::g6_byte(text, pos + static_cast<size_t>(b / 6), "data byte");
        if ((byte >> (5 - b % 6)) & 1)
            throw NonCanonicalPadding("nonzero padding bit " + std::to_string(b));
    }
    return g;
}

inline std::string write_graph6(const Graph& g) {
    const long long n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int acc = 0, fill = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++fill == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = fill = 0;
            }
        }
    if (fill) out.push_back(static_cast<char>((acc << (6 - fill)) + 63));
    return out;
}

}  // namespace tightsrg
