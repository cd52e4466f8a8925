#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <thread>
#include <vector>

#include "grkit/detect.hpp"
#include "grkit/gcg.hpp"
#include "grkit/graph.hpp"
#include "grkit/pattern.hpp"

namespace grkit {

// One forbidden monochromatic pattern per color; index 0 is color 1.
struct ForbiddenSpec {
    std::vector<const Pattern*> per_color;

    int k() const { return int(per_color.size()); }
    bool symmetric_two() const {
        return per_color.size() == 2 && per_color[0] == per_color[1];
    }
};

struct SearchBudget {
    long long node_limit = 200'000'000;  // backtracking assignment count
    long long iter_limit = 20'000;       // local search iterations
    uint64_t seed = 1;
};

inline bool satisfies_spec(const Graph& g, const ForbiddenSpec& spec) {
    if (g.k() != spec.k()) return false;
    for (int c = 1; c <= g.k(); ++c)
        if (has_mono_copy(g, *spec.per_color[c - 1], c)) return false;
    return true;
}

inline Graph circulant_graph(int n, uint32_t mask) {
    // difference class d (1..n/2) gets color 2 when bit d-1 of mask is set
    std::vector<uint8_t> table(size_t(n) * (n - 1) / 2);
    size_t pos = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++pos) {
            int d = std::min(v - u, n - (v - u));
            table[pos] = uint8_t(((mask >> (d - 1)) & 1) ? 2 : 1);
        }
    return Graph(n, 2, table);
}

inline Graph swap_two_colors(const Graph& g) {
    std::vector<uint8_t> t = g.color_table();
    for (uint8_t& c : t) c = uint8_t(3 - c);
    return Graph(g.n(), 2, t);
}

// Enumerates all 2-splits of the difference classes of Z_n in mask order and
// returns the first split whose circulant coloring satisfies the spec. For a
// color-symmetric spec the two orientations of a split are the same split;
// the returned coloring is then the lex-least GCG of the two orientations.
inline std::optional<Graph> search_circulant(int n, const ForbiddenSpec& spec,
                                             int jobs = 1) {
    if (spec.k() != 2) throw error("search_circulant: spec must have 2 colors");
    if (n < 2) throw error("search_circulant: need n >= 2");
    int m = n / 2;
    if (m > 30) throw error("search_circulant: too many difference classes");
    const uint32_t total = uint32_t(1) << m;

    uint32_t found = total;
    if (jobs <= 1) {
        for (uint32_t mask = 0; mask < total; ++mask) {
            if (satisfies_spec(circulant_graph(n, mask), spec)) {
                found = mask;
                break;
            }
        }
    } else {
        std::vector<uint32_t> best(jobs, total);
        std::vector<std::thread> pool;
        uint32_t chunk = (total + jobs - 1) / jobs;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&, t]() {
                uint32_t lo = t * chunk;
                uint32_t hi = std::min(total, lo + chunk);
                for (uint32_t mask = lo; mask < hi; ++mask)
                    if (satisfies_spec(circulant_graph(n, mask), spec)) {
                        best[t] = mask;
                        break;
                    }
            });
        for (auto& th : pool) th.join();
        for (uint32_t b : best) found = std::min(found, b);
    }
    if (found == total) return std::nullopt;
    Graph g = circulant_graph(n, found);
    if (spec.symmetric_two()) {
        Graph h = swap_two_colors(g);
        if (serialize(h) < serialize(g)) return h;
    }
    return g;
}

enum class SearchStatus { Found, Exhausted, Budget };

struct SearchResult {
    SearchStatus status;
    std::optional<Graph> graph;
    long long nodes = 0;
};

namespace detail_search {

// partial coloring over <= 32 vertices; color 0 = unassigned
struct Partial {
    int n, k;
    std::vector<uint32_t> adj;     // adj[(c-1)*n + u]
    std::vector<int8_t> colors;    // n*n matrix

    Partial(int n_, int k_) : n(n_), k(k_), adj(size_t(k_) * n_, 0), colors(size_t(n_) * n_, 0) {}

    int color(int u, int v) const { return colors[size_t(u) * n + v]; }
    void set(int u, int v, int c) {
        colors[size_t(u) * n + v] = colors[size_t(v) * n + u] = int8_t(c);
        adj[size_t(c - 1) * n + u] |= uint32_t(1) << v;
        adj[size_t(c - 1) * n + v] |= uint32_t(1) << u;
    }
    void clear(int u, int v) {
        int c = color(u, v);
        colors[size_t(u) * n + v] = colors[size_t(v) * n + u] = 0;
        adj[size_t(c - 1) * n + u] &= ~(uint32_t(1) << v);
        adj[size_t(c - 1) * n + v] &= ~(uint32_t(1) << u);
    }
    uint32_t row(int c, int u) const { return adj[size_t(c - 1) * n + u]; }
};

// does the color-c class contain the pattern with the edge (u,v) used by some
// pattern edge? called right after assigning (u,v) to c
inline bool completes(const Partial& p, const Pattern& pat, int c, int u, int v) {
    const int m = pat.m;
    int img[5];
    uint32_t used;
    // assign the pattern vertices other than the pinned pair; candidates are
    // constrained by every already-placed neighbour
    auto extend = [&](auto&& self, int idx) -> bool {
        if (idx == m) return true;
        if (img[idx] >= 0) return self(self, idx + 1);
        uint32_t cand = ~used & ((uint32_t(1) << p.n) - 1);
        for (int i = 0; i < m; ++i)
            if (img[i] >= 0 && pat.has_edge(i, idx)) cand &= p.row(c, img[i]);
        while (cand) {
            int w = __builtin_ctz(cand);
            cand &= cand - 1;
            img[idx] = w;
            used |= uint32_t(1) << w;
            if (self(self, idx + 1)) return true;
            img[idx] = -1;
            used &= ~(uint32_t(1) << w);
        }
        return false;
    };
    for (auto [a, b] : pat.edges) {
        for (int flip = 0; flip < 2; ++flip) {
            int x = flip ? v : u, y = flip ? u : v;
            for (int i = 0; i < m; ++i) img[i] = -1;
            img[a] = x;
            img[b] = y;
            used = (uint32_t(1) << x) | (uint32_t(1) << y);
            if (extend(extend, 0)) return true;
        }
    }
    return false;
}

inline Graph to_graph(const Partial& p) {
    std::vector<uint8_t> table(size_t(p.n) * (p.n - 1) / 2);
    size_t pos = 0;
    for (int u = 0; u < p.n; ++u)
        for (int v = u + 1; v < p.n; ++v, ++pos) table[pos] = uint8_t(p.color(u, v));
    return Graph(p.n, p.k, table);
}

// DFS over the remaining edges in lex order. Returns Found with the first
// completion-free full coloring, Exhausted, or Budget.
inline SearchStatus dfs_color(Partial& p, const ForbiddenSpec& spec,
                              const std::vector<std::pair<int, int>>& edges,
                              size_t at, long long& nodes, long long node_limit) {
    if (at == edges.size()) return SearchStatus::Found;
    auto [u, v] = edges[at];
    for (int c = 1; c <= p.k; ++c) {
        if (++nodes > node_limit) return SearchStatus::Budget;
        p.set(u, v, c);
        if (!completes(p, *spec.per_color[c - 1], c, u, v)) {
            SearchStatus st = dfs_color(p, spec, edges, at + 1, nodes, node_limit);
            if (st != SearchStatus::Exhausted) return st;
        }
        p.clear(u, v);
    }
    return SearchStatus::Exhausted;
}

}  // namespace detail_search

// Backtracking search for a coloring of K_n avoiding every forbidden pattern.
inline SearchResult search_backtrack(int n, const ForbiddenSpec& spec,
                                     const SearchBudget& budget = {}) {
    if (n < 2 || n > 32) throw error("search_backtrack: need 2 <= n <= 32");
    if (spec.k() < 1) throw error("search_backtrack: empty spec");
    detail_search::Partial p(n, spec.k());
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    long long nodes = 0;
    SearchStatus st =
        detail_search::dfs_color(p, spec, edges, 0, nodes, budget.node_limit);
    SearchResult res{st, std::nullopt, nodes};
    if (st == SearchStatus::Found) res.graph = detail_search::to_graph(p);
    return res;
}

enum class ProveOutcome { Proven, Refuted, Budget };

struct ProveResult {
    ProveOutcome outcome;
    std::optional<Graph> counterexample;  // avoiding coloring when refuted
    long long nodes = 0;
};

// Exhaustively decides whether every 2-coloring of K_n contains a forbidden
// pattern (n >= the Ramsey number). Symmetry reduction: the color multiset of
// vertex 0's edges is fixed up to relabeling, and up to color swap when the
// spec is symmetric.
inline ProveResult prove_ramsey_upper(int n, const ForbiddenSpec& spec,
                                      const SearchBudget& budget = {}) {
    if (spec.k() != 2) throw error("prove_ramsey_upper: spec must have 2 colors");
    if (n < 2 || n > 9) throw error("prove_ramsey_upper: feasible sizes are 2..9");
    std::vector<std::pair<int, int>> rest;
    for (int u = 1; u < n; ++u)
        for (int v = u + 1; v < n; ++v) rest.push_back({u, v});

    long long nodes = 0;
    for (int a = n - 1; a >= 0; --a) {
        if (spec.symmetric_two() && 2 * a < n - 1) break;  // color swap
        detail_search::Partial p(n, 2);
        bool dead = false;
        for (int j = 1; j < n && !dead; ++j) {
            int c = j <= a ? 1 : 2;
            p.set(0, j, c);
            if (detail_search::completes(p, *spec.per_color[c - 1], c, 0, j))
                dead = true;
        }
        if (dead) continue;
        SearchStatus st = detail_search::dfs_color(p, spec, rest, 0, nodes,
                                                   budget.node_limit);
        if (st == SearchStatus::Budget) return {ProveOutcome::Budget, std::nullopt, nodes};
        if (st == SearchStatus::Found)
            return {ProveOutcome::Refuted, detail_search::to_graph(p), nodes};
    }
    return {ProveOutcome::Proven, std::nullopt, nodes};
}

namespace detail_search {

// subset-style witness counts on plain bitmask adjacency, used by the local
// search objective (64-vertex cap)
inline long long count_k4e(const std::vector<uint64_t>& adj, int n) {
    long long cnt = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (!((adj[u] >> v) & 1)) continue;
            int c = __builtin_popcountll(adj[u] & adj[v]);
            cnt += (long long)c * (c - 1) / 2;
        }
    return cnt;
}

inline long long count_k4_plus(const std::vector<uint64_t>& adj, int n, int need) {
    long long cnt = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (!((adj[u] >> v) & 1)) continue;
            uint64_t cuv = adj[u] & adj[v];
            for (int w = v + 1; w < n; ++w) {
                if (!((cuv >> w) & 1)) continue;
                uint64_t cw = cuv & adj[w];
                for (int x = w + 1; x < n; ++x) {
                    if (!((cw >> x) & 1)) continue;
                    uint64_t quad = (uint64_t(1) << u) | (uint64_t(1) << v) |
                                    (uint64_t(1) << w) | (uint64_t(1) << x);
                    uint64_t r[4] = {adj[u], adj[v], adj[w], adj[x]};
                    uint64_t acc = 0;
                    if (need == 1) acc = r[0] | r[1] | r[2] | r[3];
                    else if (need == 2) {
                        for (int i = 0; i < 4; ++i)
                            for (int j = i + 1; j < 4; ++j) acc |= r[i] & r[j];
                    } else if (need == 3) {
                        acc = (r[0] & r[1] & r[2]) | (r[0] & r[1] & r[3]) |
                              (r[0] & r[2] & r[3]) | (r[1] & r[2] & r[3]);
                    } else {
                        acc = r[0] & r[1] & r[2] & r[3];
                    }
                    cnt += __builtin_popcountll(acc & ~quad);
                }
            }
        }
    return cnt;
}

inline long long count_pattern(const std::vector<uint64_t>& adj, int n,
                               const Pattern& pat) {
    const std::string& nm = pat.name;
    if (nm == "K2") {
        long long e = 0;
        for (int u = 0; u < n; ++u) e += __builtin_popcountll(adj[u]);
        return e / 2;
    }
    if (nm == "P3") {
        long long c = 0;
        for (int u = 0; u < n; ++u) {
            long long d = __builtin_popcountll(adj[u]);
            c += d * (d - 1) / 2;
        }
        return c;
    }
    if (nm == "K3") {
        long long c = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if ((adj[u] >> v) & 1)
                    c += __builtin_popcountll(adj[u] & adj[v] & (~uint64_t(0) << (v + 1)));
        return c;
    }
    if (nm == "K4-e") return count_k4e(adj, n);
    if (nm == "K4") {
        long long c = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (!((adj[u] >> v) & 1)) continue;
                uint64_t cuv = adj[u] & adj[v];
                for (int w = v + 1; w < n; ++w)
                    if ((cuv >> w) & 1)
                        c += __builtin_popcountll(cuv & adj[w] & (~uint64_t(0) << (w + 1)));
            }
        return c;
    }
    if (nm == "H1") return count_k4_plus(adj, n, 1);
    if (nm == "H2") return count_k4_plus(adj, n, 2);
    if (nm == "H3") return count_k4_plus(adj, n, 3);
    if (nm == "K5") return count_k4_plus(adj, n, 4);
    throw error("local search: unsupported pattern " + nm);
}

}  // namespace detail_search

// Tabu descent over single-edge recolorings; the objective weights exact
// forbidden-pattern counts heavily and adds the diamond (K4-e) count of each
// color class as a smoothing proxy for the 5-vertex patterns. Deterministic
// per (seed, limits); absence at budget is a Budget outcome, never a proof.
inline SearchResult search_local(int n, const ForbiddenSpec& spec,
                                 const SearchBudget& budget = {}) {
    if (spec.k() != 2) throw error("search_local: spec must have 2 colors");
    if (n < 2 || n > 64) throw error("search_local: need 2 <= n <= 64");
    using detail_search::count_pattern;

    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    const int ne = int(edges.size());

    std::vector<uint64_t> adj[2] = {std::vector<uint64_t>(n, 0),
                                    std::vector<uint64_t>(n, 0)};
    std::vector<int> col(ne, 0);

    auto flip = [&](int i) {
        auto [u, v] = edges[i];
        int c = col[i];
        adj[c][u] &= ~(uint64_t(1) << v);
        adj[c][v] &= ~(uint64_t(1) << u);
        col[i] ^= 1;
        adj[col[i]][u] |= uint64_t(1) << v;
        adj[col[i]][v] |= uint64_t(1) << u;
    };
    auto violations = [&]() {
        long long t = 0;
        for (int c = 0; c < 2; ++c) t += count_pattern(adj[c], n, *spec.per_color[c]);
        return t;
    };
    auto objective = [&]() {
        long long t = 0;
        for (int c = 0; c < 2; ++c) {
            t += 100 * count_pattern(adj[c], n, *spec.per_color[c]);
            if (spec.per_color[c]->m == 5) t += detail_search::count_k4e(adj[c], n);
        }
        return t;
    };

    const long long restart_every = 5000;
    long long it = 0;
    std::vector<long long> tabu(ne, -1);
    std::vector<int> order(ne);
    std::mt19937_64 rng(budget.seed);

    auto reset = [&]() {
        adj[0].assign(n, 0);
        adj[1].assign(n, 0);
        for (int i = 0; i < ne; ++i) {
            col[i] = int(rng() & 1);
            auto [u, v] = edges[i];
            adj[col[i]][u] |= uint64_t(1) << v;
            adj[col[i]][v] |= uint64_t(1) << u;
        }
        std::fill(tabu.begin(), tabu.end(), -1);
    };
    auto snapshot = [&]() {
        std::vector<uint8_t> table(ne);
        for (int i = 0; i < ne; ++i) table[size_t(i)] = uint8_t(col[i] + 1);
        // edges vector is already in upper-triangular row-major order
        return Graph(n, 2, table);
    };
    reset();
    long long cur = objective();

    for (; it <= budget.iter_limit; ++it) {
        if (violations() == 0) return {SearchStatus::Found, snapshot(), it};
        if (it == budget.iter_limit) break;
        if (it > 0 && it % restart_every == 0) {
            reset();
            cur = objective();
            continue;
        }
        for (int i = 0; i < ne; ++i) order[i] = i;
        std::shuffle(order.begin(), order.end(), rng);
        long long best = -1;
        int best_i = -1;
        for (int oi = 0; oi < ne; ++oi) {
            int i = order[oi];
            if (tabu[i] > it) continue;
            flip(i);
            long long o = objective();
            flip(i);
            if (best_i < 0 || o < best) {
                best = o;
                best_i = i;
                if (o < cur) break;  // first improvement
            }
        }
        if (best_i < 0) continue;
        flip(best_i);
        tabu[best_i] = it + 5 + int(rng() % 10);
        cur = best;
    }
    return {SearchStatus::Budget, std::nullopt, it};
}

}  // namespace grkit
