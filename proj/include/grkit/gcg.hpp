#pragma once

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "grkit/graph.hpp"

namespace grkit {

// GCG text format, bit-exact:
//   line 1: "GCG 1"
//   line 2: "<n> <k>"
//   then n-1 lines; line i (1-based) holds c(i-1,j) for j = i..n-1,
//   space-separated decimals, each line ending with '\n'.
// '#'-prefixed lines before the header are comments: accepted on parse,
// never emitted by serialize.

inline std::string serialize(const Graph& g) {
    std::string out = "GCG 1\n";
    out += std::to_string(g.n());
    out += ' ';
    out += std::to_string(g.k());
    out += '\n';
    for (int u = 0; u + 1 < g.n(); ++u) {
        for (int v = u + 1; v < g.n(); ++v) {
            if (v > u + 1) out += ' ';
            out += std::to_string(g.color_fast(u, v));
        }
        out += '\n';
    }
    return out;
}

namespace detail {

inline bool next_line(std::string_view& rest, std::string_view& line) {
    if (rest.empty()) return false;
    size_t nl = rest.find('\n');
    if (nl == std::string_view::npos) {
        line = rest;
        rest = {};
    } else {
        line = rest.substr(0, nl);
        rest = rest.substr(nl + 1);
    }
    return true;
}

inline int parse_int(std::string_view tok, const char* what) {
    int value = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || p != tok.data() + tok.size())
        throw error(std::string("GCG: bad ") + what + " '" + std::string(tok) + "'");
    return value;
}

}  // namespace detail

inline Graph parse(std::string_view text) {
    using detail::next_line;
    std::string_view rest = text, line;

    // leading comments
    for (;;) {
        if (!next_line(rest, line)) throw error("GCG: missing header");
        if (!line.empty() && line[0] == '#') continue;
        break;
    }
    if (line != "GCG 1") throw error("GCG: malformed header line");

    if (!next_line(rest, line)) throw error("GCG: missing size line");
    size_t sp = line.find(' ');
    if (sp == std::string_view::npos || line.find(' ', sp + 1) != std::string_view::npos)
        throw error("GCG: size line must be '<n> <k>'");
    int n = detail::parse_int(line.substr(0, sp), "n");
    int k = detail::parse_int(line.substr(sp + 1), "k");
    if (n < 1 || k < 1) throw error("GCG: n and k must be >= 1");

    std::vector<uint8_t> table;
    table.reserve(size_t(n) * (n - 1) / 2);
    for (int i = 1; i <= n - 1; ++i) {
        if (!next_line(rest, line))
            throw error("GCG: missing row " + std::to_string(i));
        int expected = n - i;
        int seen = 0;
        size_t pos = 0;
        while (pos < line.size()) {
            size_t end = line.find(' ', pos);
            std::string_view tok = end == std::string_view::npos
                                       ? line.substr(pos)
                                       : line.substr(pos, end - pos);
            int c = detail::parse_int(tok, "color");
            if (c < 1 || c > k)
                throw error("GCG: color " + std::to_string(c) +
                            " out of range 1.." + std::to_string(k));
            table.push_back(uint8_t(c));
            ++seen;
            if (end == std::string_view::npos) break;
            pos = end + 1;
        }
        if (seen != expected)
            throw error("GCG: row " + std::to_string(i) + " has " +
                        std::to_string(seen) + " colors, expected " +
                        std::to_string(expected));
    }
    while (next_line(rest, line))
        if (!line.empty()) throw error("GCG: trailing content after last row");
    return Graph(n, k, table);
}

inline Graph parse_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

inline void write_file(const std::string& path, const Graph& g) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error("cannot write '" + path + "'");
    out << serialize(g);
    if (!out) throw error("write failed for '" + path + "'");
}

}  // namespace grkit
