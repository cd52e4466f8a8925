#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "grkit/bigint.hpp"

namespace grkit {

// A small forbidden subgraph (<= 5 vertices). Vertex numbering of the catalog
// entries is chosen so that every vertex j > 0 has a neighbour i < j; the
// embedding search relies on that for the built-in patterns.
struct Pattern {
    std::string name;
    int m = 0;
    std::vector<std::pair<int, int>> edges;  // u < v

    // adjacency mask of vertex i within the pattern
    uint8_t adj(int i) const {
        uint8_t a = 0;
        for (auto [u, v] : edges) {
            if (u == i) a |= uint8_t(1u << v);
            if (v == i) a |= uint8_t(1u << u);
        }
        return a;
    }
    int degree(int i) const {
        int d = 0;
        for (auto [u, v] : edges) d += (u == i) + (v == i);
        return d;
    }
    bool has_edge(int u, int v) const {
        if (u > v) std::swap(u, v);
        for (auto e : edges)
            if (e.first == u && e.second == v) return true;
        return false;
    }
    bool operator==(const Pattern& o) const { return name == o.name; }
};

namespace patterns {

inline Pattern complete(const std::string& name, int m) {
    Pattern p{name, m, {}};
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) p.edges.push_back({u, v});
    return p;
}

inline const Pattern& k2() { static const Pattern p = complete("K2", 2); return p; }
inline const Pattern& k3() { static const Pattern p = complete("K3", 3); return p; }
inline const Pattern& k4() { static const Pattern p = complete("K4", 4); return p; }
inline const Pattern& k5() { static const Pattern p = complete("K5", 5); return p; }

inline const Pattern& p3() {
    static const Pattern p{"P3", 3, {{0, 1}, {1, 2}}};
    return p;
}

// K4 minus the edge {2,3} (the diamond)
inline const Pattern& k4e() {
    static const Pattern p{"K4-e", 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}};
    return p;
}

// K4 on {0,1,2,3} plus a pendant vertex 4 attached to 3
inline const Pattern& h1() {
    static const Pattern p{"H1", 5,
        {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}}};
    return p;
}

// K4 on {0,1,2,3} plus vertex 4 adjacent to exactly 0 and 1
inline const Pattern& h2() {
    static const Pattern p{"H2", 5,
        {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 4}}};
    return p;
}

// K5 minus the edge {3,4}
inline const Pattern& h3() {
    static const Pattern p{"H3", 5,
        {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}};
    return p;
}

inline const Pattern& h(int index) {
    switch (index) {
        case 1: return h1();
        case 2: return h2();
        case 3: return h3();
    }
    throw error("unknown H index " + std::to_string(index));
}

inline const Pattern* find(const std::string& name) {
    static const Pattern* all[] = {&k2(), &p3(), &k3(), &k4(), &k4e(),
                                   &k5(), &h1(), &h2(), &h3()};
    for (const Pattern* p : all) {
        if (p->name == name) return p;
    }
    // accepted aliases for the diamond
    if (name == "K4e" || name == "K4me") return &k4e();
    return nullptr;
}

inline const Pattern& by_name(const std::string& name) {
    if (const Pattern* p = find(name)) return *p;
    throw error("unknown pattern '" + name + "'");
}

}  // namespace patterns

// Which pattern each color must avoid: colors 1..r forbid H (hIndex picks
// H1/H2/H3), colors r+1..r+s forbid K3, the last k-r-s colors forbid P3.
struct RoleAssignment {
    int k = 0;
    int r = 0;
    int s = 0;
    int h_index = 3;

    RoleAssignment(int k_, int r_, int s_, int h_index_ = 3)
        : k(k_), r(r_), s(s_), h_index(h_index_) {
        if (k < 1 || r < 0 || s < 0 || r + s > k)
            throw error("invalid role assignment (k=" + std::to_string(k) +
                        " r=" + std::to_string(r) + " s=" + std::to_string(s) + ")");
        if (h_index < 1 || h_index > 3) throw error("h index must be 1, 2 or 3");
    }

    int p3_colors() const { return k - r - s; }

    const Pattern& forbidden(int color) const {
        if (color < 1 || color > k) throw error("color out of range");
        if (color <= r) return patterns::h(h_index);
        if (color <= r + s) return patterns::k3();
        return patterns::p3();
    }
};

}  // namespace grkit
