#pragma once

#include <array>
#include <optional>
#include <vector>

#include "grkit/graph.hpp"
#include "grkit/pattern.hpp"

namespace grkit {

// pattern vertex i -> graph vertex map[i]
struct Embedding {
    std::vector<int> map;
};

inline std::optional<std::array<int, 3>> find_rainbow_triangle(const Graph& g) {
    const int n = g.n();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int cuv = g.color_fast(u, v);
            for (int w = v + 1; w < n; ++w) {
                int cuw = g.color_fast(u, w);
                if (cuw == cuv) continue;
                int cvw = g.color_fast(v, w);
                if (cvw != cuv && cvw != cuw) return std::array<int, 3>{u, v, w};
            }
        }
    return std::nullopt;
}

namespace detail {

inline int next_bit(const uint64_t* b, int words, int from) {
    if (from >= words * 64) return -1;
    int wi = from >> 6;
    uint64_t cur = b[wi] & (~uint64_t(0) << (from & 63));
    for (;;) {
        if (cur) return wi * 64 + __builtin_ctzll(cur);
        if (++wi >= words) return -1;
        cur = b[wi];
    }
}

inline void band(uint64_t* dst, const uint64_t* a, const uint64_t* b, int words) {
    for (int i = 0; i < words; ++i) dst[i] = a[i] & b[i];
}

// K4 enumeration with a per-quad extension test. visit(u,v,w,x,quad_mask)
// returns true to stop the scan.
template <class Visit>
bool scan_mono_k4(const Graph& g, int c, Visit&& visit) {
    const int n = g.n(), words = g.words();
    std::vector<uint64_t> cm(words), cw(words);
    for (int u = 0; u < n; ++u) {
        const uint64_t* nu = g.row(c, u);
        for (int v = next_bit(nu, words, u + 1); v >= 0;
             v = next_bit(nu, words, v + 1)) {
            band(cm.data(), nu, g.row(c, v), words);
            for (int w = next_bit(cm.data(), words, v + 1); w >= 0;
                 w = next_bit(cm.data(), words, w + 1)) {
                band(cw.data(), cm.data(), g.row(c, w), words);
                for (int x = next_bit(cw.data(), words, w + 1); x >= 0;
                     x = next_bit(cw.data(), words, x + 1)) {
                    if (visit(u, v, w, x)) return true;
                }
            }
        }
    }
    return false;
}

// Existence of a mono K4 plus a fifth vertex adjacent to at least `need` of
// its vertices. need: 1 -> H1, 2 -> H2, 3 -> H3 (K5-e), 4 -> K5.
inline bool exists_k4_plus(const Graph& g, int c, int need) {
    const int words = g.words();
    std::vector<uint64_t> acc(words), t(words);
    return scan_mono_k4(g, c, [&](int u, int v, int w, int x) {
        const uint64_t* r[4] = {g.row(c, u), g.row(c, v), g.row(c, w), g.row(c, x)};
        std::fill(acc.begin(), acc.end(), 0);
        if (need == 1) {
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < words; ++j) acc[j] |= r[i][j];
        } else if (need == 2) {
            for (int a = 0; a < 4; ++a)
                for (int b = a + 1; b < 4; ++b)
                    for (int j = 0; j < words; ++j) acc[j] |= r[a][j] & r[b][j];
        } else if (need == 3) {
            for (int a = 0; a < 4; ++a) {
                // intersection of the three rows other than a
                for (int j = 0; j < words; ++j) t[j] = ~uint64_t(0);
                for (int b = 0; b < 4; ++b)
                    if (b != a)
                        for (int j = 0; j < words; ++j) t[j] &= r[b][j];
                for (int j = 0; j < words; ++j) acc[j] |= t[j];
            }
        } else {
            for (int j = 0; j < words; ++j)
                acc[j] = r[0][j] & r[1][j] & r[2][j] & r[3][j];
        }
        acc[u >> 6] &= ~(uint64_t(1) << (u & 63));
        acc[v >> 6] &= ~(uint64_t(1) << (v & 63));
        acc[w >> 6] &= ~(uint64_t(1) << (w & 63));
        acc[x >> 6] &= ~(uint64_t(1) << (x & 63));
        for (int j = 0; j < words; ++j)
            if (acc[j]) return true;
        return false;
    });
}

inline bool exists_edge(const Graph& g, int c) {
    for (int u = 0; u < g.n(); ++u)
        if (next_bit(g.row(c, u), g.words(), u + 1) >= 0) return true;
    return false;
}

inline bool exists_p3(const Graph& g, int c) {
    for (int u = 0; u < g.n(); ++u)
        if (g.color_degree(c, u) >= 2) return true;
    return false;
}

inline bool exists_k3(const Graph& g, int c) {
    const int words = g.words();
    for (int u = 0; u < g.n(); ++u) {
        const uint64_t* nu = g.row(c, u);
        for (int v = next_bit(nu, words, u + 1); v >= 0;
             v = next_bit(nu, words, v + 1)) {
            const uint64_t* nv = g.row(c, v);
            for (int j = 0; j < words; ++j)
                if (nu[j] & nv[j]) return true;
        }
    }
    return false;
}

inline bool exists_k4e(const Graph& g, int c) {
    const int words = g.words();
    for (int u = 0; u < g.n(); ++u) {
        const uint64_t* nu = g.row(c, u);
        for (int v = next_bit(nu, words, u + 1); v >= 0;
             v = next_bit(nu, words, v + 1)) {
            const uint64_t* nv = g.row(c, v);
            int common = 0;
            for (int j = 0; j < words; ++j) {
                common += __builtin_popcountll(nu[j] & nv[j]);
                if (common >= 2) return true;
            }
        }
    }
    return false;
}

inline bool exists_k4(const Graph& g, int c) {
    return scan_mono_k4(g, c, [](int, int, int, int) { return true; });
}

// Lexicographically least embedding via ordered DFS; pattern vertex j is
// assigned an ascending candidate constrained by its already-placed
// neighbours, so the first complete assignment is the lex-least tuple.
inline std::optional<Embedding> dfs_embed(const Graph& g, const Pattern& pat, int c) {
    const int n = g.n(), words = g.words(), m = pat.m;
    if (m > n) return std::nullopt;
    std::vector<std::vector<uint64_t>> cand(m, std::vector<uint64_t>(words));
    std::vector<uint64_t> used(words, 0);
    std::vector<int> img(m, -1);

    auto build_cand = [&](int j) {
        auto& C = cand[j];
        std::fill(C.begin(), C.end(), ~uint64_t(0));
        if (n & 63) C[words - 1] = (~uint64_t(0)) >> (64 - (n & 63));
        uint8_t nbrs = pat.adj(j) & uint8_t((1u << j) - 1);
        for (int i = 0; i < j; ++i)
            if ((nbrs >> i) & 1)
                for (int w = 0; w < words; ++w) C[w] &= g.row(c, img[i])[w];
        for (int w = 0; w < words; ++w) C[w] &= ~used[w];
    };

    int j = 0;
    std::vector<int> cursor(m, 0);
    build_cand(0);
    for (;;) {
        int v = detail::next_bit(cand[j].data(), words, cursor[j]);
        if (v < 0) {
            if (j == 0) return std::nullopt;
            --j;
            int pv = img[j];
            used[pv >> 6] &= ~(uint64_t(1) << (pv & 63));
            cursor[j] = pv + 1;
            continue;
        }
        img[j] = v;
        used[v >> 6] |= uint64_t(1) << (v & 63);
        if (j + 1 == m) return Embedding{img};
        ++j;
        cursor[j] = 0;
        build_cand(j);
    }
}

}  // namespace detail

// Fast existence test (subgraph containment of pat in the color-c class).
inline bool has_mono_copy(const Graph& g, const Pattern& pat, int color) {
    if (color < 1 || color > g.k()) throw error("color out of range");
    const std::string& nm = pat.name;
    if (nm == "K2") return detail::exists_edge(g, color);
    if (nm == "P3") return detail::exists_p3(g, color);
    if (nm == "K3") return detail::exists_k3(g, color);
    if (nm == "K4-e") return detail::exists_k4e(g, color);
    if (nm == "K4") return detail::exists_k4(g, color);
    if (nm == "H1") return detail::exists_k4_plus(g, color, 1);
    if (nm == "H2") return detail::exists_k4_plus(g, color, 2);
    if (nm == "H3") return detail::exists_k4_plus(g, color, 3);
    if (nm == "K5") return detail::exists_k4_plus(g, color, 4);
    return detail::dfs_embed(g, pat, color).has_value();
}

// Lexicographically least monochromatic embedding, or absence.
inline std::optional<Embedding> find_mono_copy(const Graph& g, const Pattern& pat,
                                               int color) {
    if (!has_mono_copy(g, pat, color)) return std::nullopt;
    auto e = detail::dfs_embed(g, pat, color);
    if (!e) throw error("detector disagreement for pattern " + pat.name);
    return e;
}

struct Violation {
    int color;
    std::string pattern;
    Embedding embedding;
};

struct WitnessReport {
    std::optional<std::array<int, 3>> rainbow_triangle;
    std::vector<Violation> violations;
    bool valid = false;
};

inline WitnessReport validate_witness(const Graph& g, const RoleAssignment& roles) {
    if (roles.k != g.k())
        throw error("role/graph palette mismatch (roles.k=" + std::to_string(roles.k) +
                    ", graph k=" + std::to_string(g.k()) + ")");
    WitnessReport rep;
    rep.rainbow_triangle = find_rainbow_triangle(g);
    for (int c = 1; c <= g.k(); ++c) {
        const Pattern& pat = roles.forbidden(c);
        if (has_mono_copy(g, pat, c))
            rep.violations.push_back({c, pat.name, *find_mono_copy(g, pat, c)});
    }
    rep.valid = !rep.rainbow_triangle && rep.violations.empty();
    return rep;
}

enum class PatternClass { H12, H3 };

// Conditions 1-4 under which two mc-adjacent sets force a monochromatic H in
// the joining color; condition 1 applies to the H1/H2 class only.
inline std::optional<int> check_merge_condition(const Graph& g,
                                                const std::vector<int>& x1,
                                                const std::vector<int>& x2,
                                                int color, PatternClass cls) {
    if (color < 1 || color > g.k()) throw error("color out of range");
    if (x1.empty() || x2.empty()) throw error("merge condition: empty side");
    std::vector<char> seen(g.n(), 0);
    for (int v : x1) {
        if (v < 0 || v >= g.n()) throw error("merge condition: vertex out of range");
        seen[v] = 1;
    }
    for (int v : x2) {
        if (v < 0 || v >= g.n()) throw error("merge condition: vertex out of range");
        if (seen[v]) throw error("merge condition: sides not disjoint");
    }
    for (int u : x1)
        for (int v : x2)
            if (g.color(u, v) != color)
                throw error("merge condition: sides not mc-adjacent in color " +
                            std::to_string(color));

    Graph g1 = induced(g, x1);
    Graph g2 = induced(g, x2);
    bool e1 = has_mono_copy(g1, patterns::k2(), color);
    if (cls == PatternClass::H12 && e1 &&
        has_mono_copy(g2, patterns::k2(), color) &&
        int(x1.size() + x2.size()) >= 5)
        return 1;
    if (int(x1.size()) >= 2 && has_mono_copy(g2, patterns::k3(), color)) return 2;
    if (has_mono_copy(g2, patterns::k4e(), color)) return 3;
    if (e1 && has_mono_copy(g2, patterns::p3(), color)) return 4;
    return std::nullopt;
}

}  // namespace grkit
