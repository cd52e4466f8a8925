#pragma once

// Test-only brute-force oracles, kept independent of the library's search
// paths: plain injection enumeration, subset scans, direct reconstructions.

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "grkit/detect.hpp"
#include "grkit/graph.hpp"
#include "grkit/pattern.hpp"

namespace oracles {

using grkit::Embedding;
using grkit::Graph;
using grkit::Pattern;

// first (lexicographic) injective tuple whose pattern edges are all color c
inline std::optional<Embedding> brute_find_mono(const Graph& g, const Pattern& pat,
                                                int c) {
    const int n = g.n(), m = pat.m;
    std::vector<int> img(m, -1);
    std::vector<char> used(n, 0);
    std::optional<Embedding> out;
    auto rec = [&](auto&& self, int j) -> bool {
        if (j == m) {
            out = Embedding{img};
            return true;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            bool ok = true;
            for (int i = 0; i < j && ok; ++i)
                if (pat.has_edge(i, j) && g.color(img[i], v) != c) ok = false;
            if (!ok) continue;
            img[j] = v;
            used[v] = 1;
            if (self(self, j + 1)) return true;
            used[v] = 0;
        }
        return false;
    };
    rec(rec, 0);
    return out;
}

inline std::optional<std::array<int, 3>> brute_rainbow(const Graph& g) {
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            for (int w = v + 1; w < g.n(); ++w) {
                int a = g.color(u, v), b = g.color(u, w), c = g.color(v, w);
                if (a != b && a != c && b != c) return std::array<int, 3>{u, v, w};
            }
    return std::nullopt;
}

// all color modules of g as bitmasks (n <= 20)
inline bool is_module(const Graph& g, uint32_t mask) {
    for (int x = 0; x < g.n(); ++x) {
        if ((mask >> x) & 1) continue;
        int seen = 0;
        for (int m = 0; m < g.n(); ++m) {
            if (!((mask >> m) & 1)) continue;
            int c = g.color(x, m);
            if (seen == 0)
                seen = c;
            else if (c != seen)
                return false;
        }
    }
    return true;
}

inline uint32_t brute_smallest_module(const Graph& g, int u, int v) {
    uint32_t best = 0;
    int best_size = g.n() + 1;
    for (uint32_t mask = 0; mask < (uint32_t(1) << g.n()); ++mask) {
        if (!((mask >> u) & 1) || !((mask >> v) & 1)) continue;
        int size = __builtin_popcount(mask);
        if (size >= best_size) continue;
        if (is_module(g, mask)) {
            best = mask;
            best_size = size;
        }
    }
    return best;
}

// direct product reconstruction, used to cross-check substitute()
inline Graph brute_substitute(const Graph& outer, const std::vector<Graph>& parts) {
    int total = 0;
    std::vector<int> owner, local;
    for (size_t i = 0; i < parts.size(); ++i)
        for (int t = 0; t < parts[i].n(); ++t) {
            owner.push_back(int(i));
            local.push_back(t);
            ++total;
        }
    std::vector<uint8_t> table;
    for (int u = 0; u < total; ++u)
        for (int v = u + 1; v < total; ++v)
            table.push_back(uint8_t(owner[u] == owner[v]
                                        ? parts[owner[u]].color(local[u], local[v])
                                        : outer.color(owner[u], owner[v])));
    return Graph(total, outer.k(), table);
}

// --- random graph generators (all deterministic via the passed rng) ---

inline Graph random_coloring(int n, int k, std::mt19937_64& rng) {
    std::vector<uint8_t> t(size_t(n) * (n - 1) / 2);
    for (auto& c : t) c = uint8_t(1 + rng() % k);
    return Graph(n, k, t);
}

// recursive substitution product with <= 2-colored outers: rainbow-free by
// construction
inline Graph random_gallai(int n, int k, std::mt19937_64& rng, int depth = 0) {
    if (n == 1) return Graph(1, k, {});
    if (n <= 3 || depth >= 4) {
        int a = 1 + int(rng() % k);
        int b = 1 + int(rng() % k);
        std::vector<uint8_t> t(size_t(n) * (n - 1) / 2);
        for (auto& c : t) c = uint8_t((rng() & 1) ? a : b);
        return Graph(n, k, t);
    }
    int m = 2 + int(rng() % uint64_t(std::min(5, n) - 1));  // outer size 2..min(5,n)
    std::vector<int> sizes(m, 1);
    for (int extra = n - m; extra > 0; --extra) ++sizes[rng() % m];
    int a = 1 + int(rng() % k);
    int b = 1 + int(rng() % k);
    std::vector<uint8_t> t(size_t(m) * (m - 1) / 2);
    for (auto& c : t) c = uint8_t((rng() & 1) ? a : b);
    Graph outer(m, k, t);
    std::vector<Graph> parts;
    for (int i = 0; i < m; ++i) parts.push_back(random_gallai(sizes[i], k, rng, depth + 1));
    return grkit::substitute(outer, parts);
}

// random coloring repaired into a Gallai coloring by collapsing rainbow
// triangles; falls back to a substitution product if repair stalls
inline Graph random_rainbow_free(int n, int k, std::mt19937_64& rng) {
    Graph g = random_coloring(n, k, rng);
    std::vector<uint8_t> t = g.color_table();
    auto idx = [n](int u, int v) {
        if (u > v) std::swap(u, v);
        return size_t(u) * n - size_t(u) * (u + 1) / 2 + (v - u - 1);
    };
    for (long guard = 0; guard < long(n) * n * 4; ++guard) {
        Graph cur(n, k, t);
        auto tri = grkit::find_rainbow_triangle(cur);
        if (!tri) return cur;
        auto [u, v, w] = *tri;
        t[idx(v, w)] = t[idx(u, v)];
    }
    return random_gallai(n, k, rng);
}

}  // namespace oracles
