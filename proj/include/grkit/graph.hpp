#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "grkit/bigint.hpp"

namespace grkit {

// Edge-colored complete graph on n vertices with colors 1..k. Immutable after
// construction; per-color adjacency bitsets are built eagerly so concurrent
// readers never race on a cache.
class ColoredCompleteGraph {
  public:
    ColoredCompleteGraph(int n, int k, const std::vector<uint8_t>& upper)
        : n_(n), k_(k), colors_(upper), words_((n + 63) / 64) {
        if (n < 1) throw error("graph needs n >= 1");
        if (k < 1) throw error("graph needs k >= 1");
        if (k > 255) throw error("at most 255 colors supported");
        const size_t pairs = size_t(n) * (n - 1) / 2;
        if (colors_.size() != pairs)
            throw error("color table has " + std::to_string(colors_.size()) +
                        " entries, expected " + std::to_string(pairs));
        for (uint8_t c : colors_)
            if (c < 1 || int(c) > k)
                throw error("edge color " + std::to_string(int(c)) +
                            " out of range 1.." + std::to_string(k));
        build_bitsets();
    }

    int n() const { return n_; }
    int k() const { return k_; }

    int color(int u, int v) const {
        if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
            throw error("bad vertex pair");
        return colors_[idx(u, v)];
    }

    // unchecked variant for hot loops
    int color_fast(int u, int v) const { return colors_[idx(u, v)]; }

    int words() const { return words_; }

    // bitset of color-c neighbours of u (c is 1-based)
    const uint64_t* row(int c, int u) const {
        return bits_.data() + (size_t(c - 1) * n_ + u) * words_;
    }

    bool adj(int c, int u, int v) const {
        return (row(c, u)[v >> 6] >> (v & 63)) & 1u;
    }

    int color_degree(int c, int u) const {
        int d = 0;
        const uint64_t* r = row(c, u);
        for (int w = 0; w < words_; ++w) d += __builtin_popcountll(r[w]);
        return d;
    }

    const std::vector<uint8_t>& color_table() const { return colors_; }

    bool operator==(const ColoredCompleteGraph& o) const {
        return n_ == o.n_ && k_ == o.k_ && colors_ == o.colors_;
    }

    size_t idx(int u, int v) const {
        if (u > v) std::swap(u, v);
        return size_t(u) * n_ - size_t(u) * (u + 1) / 2 + (v - u - 1);
    }

  private:
    void build_bitsets() {
        bits_.assign(size_t(k_) * n_ * words_, 0);
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v) {
                int c = colors_[idx(u, v)];
                bits_[(size_t(c - 1) * n_ + u) * words_ + (v >> 6)] |= uint64_t(1) << (v & 63);
                bits_[(size_t(c - 1) * n_ + v) * words_ + (u >> 6)] |= uint64_t(1) << (u & 63);
            }
    }

    int n_, k_;
    std::vector<uint8_t> colors_;
    int words_;
    std::vector<uint64_t> bits_;
};

using Graph = ColoredCompleteGraph;

inline Graph new_graph(int n, int k, const std::vector<uint8_t>& upper) {
    return Graph(n, k, upper);
}

// convenience builder taking explicit (u,v,color) triples; every pair must be
// covered or the constructor rejects the table
inline Graph graph_from_edges(int n, int k,
                              const std::vector<std::array<int, 3>>& eds) {
    std::vector<uint8_t> t(size_t(n) * (n - 1) / 2, 0);
    for (auto [u, v, c] : eds) {
        if (u > v) std::swap(u, v);
        t[size_t(u) * n - size_t(u) * (u + 1) / 2 + (v - u - 1)] = uint8_t(c);
    }
    return Graph(n, k, t);
}

inline Graph monochromatic(int n, int k, int c) {
    std::vector<uint8_t> t(size_t(n) * (n - 1) / 2, uint8_t(c));
    return Graph(n, k, t);
}

// Blow-up: vertex i of outer is replaced by parts[i]; edges inside a copy keep
// the part's color, edges between copies i and j take outer.color(i,j).
// Vertex order is outer order, then part-internal order.
inline Graph substitute(const Graph& outer, std::span<const Graph> parts) {
    if (int(parts.size()) != outer.n())
        throw error("substitute: need exactly one part per outer vertex");
    for (const Graph& p : parts)
        if (p.k() != outer.k()) throw error("substitute: palette (k) mismatch");
    int total = 0;
    std::vector<int> offset(parts.size());
    std::vector<int> owner;
    for (size_t i = 0; i < parts.size(); ++i) {
        offset[i] = total;
        total += parts[i].n();
        for (int t = 0; t < parts[i].n(); ++t) owner.push_back(int(i));
    }
    std::vector<uint8_t> table(size_t(total) * (total - 1) / 2);
    size_t pos = 0;
    for (int u = 0; u < total; ++u)
        for (int v = u + 1; v < total; ++v, ++pos) {
            int pu = owner[u], pv = owner[v];
            table[pos] = pu == pv
                ? uint8_t(parts[pu].color_fast(u - offset[pu], v - offset[pv]))
                : uint8_t(outer.color_fast(pu, pv));
        }
    return Graph(total, outer.k(), table);
}

inline Graph substitute(const Graph& outer, const std::vector<Graph>& parts) {
    return substitute(outer, std::span<const Graph>(parts));
}

inline Graph join_two_copies(const Graph& g, int color) {
    if (color < 1 || color > g.k()) throw error("join color out of range");
    std::vector<uint8_t> k2(1, uint8_t(color));
    Graph outer(2, g.k(), k2);
    std::vector<Graph> parts{g, g};
    return substitute(outer, parts);
}

inline Graph induced(const Graph& g, std::span<const int> vs) {
    if (vs.empty()) throw error("induced: empty vertex set");
    for (int v : vs)
        if (v < 0 || v >= g.n()) throw error("induced: vertex out of range");
    int m = int(vs.size());
    std::vector<uint8_t> table(size_t(m) * (m - 1) / 2);
    size_t pos = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j, ++pos) {
            if (vs[i] == vs[j]) throw error("induced: duplicate vertex");
            table[pos] = uint8_t(g.color(vs[i], vs[j]));
        }
    return Graph(m, g.k(), table);
}

inline Graph induced(const Graph& g, const std::vector<int>& vs) {
    return induced(g, std::span<const int>(vs));
}

// Remap colors: map[c] is the new color of old color c (1-based), new palette
// size new_k. Used to place canonical base graphs into a plan's palette.
inline Graph recolor(const Graph& g, const std::vector<int>& map, int new_k) {
    if (int(map.size()) != g.k() + 1) throw error("recolor: map size must be k+1");
    std::vector<uint8_t> table = g.color_table();
    for (uint8_t& c : table) {
        int nc = map[c];
        if (nc < 1 || nc > new_k) throw error("recolor: mapped color out of range");
        c = uint8_t(nc);
    }
    return Graph(g.n(), new_k, table);
}

}  // namespace grkit
