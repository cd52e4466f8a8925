#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <vector>

#include "grkit/detect.hpp"
#include "grkit/graph.hpp"

namespace grkit {

using Partition = std::vector<std::vector<int>>;

struct rainbow_error : error {
    std::array<int, 3> triangle;
    explicit rainbow_error(std::array<int, 3> t)
        : error("graph contains a rainbow triangle (" + std::to_string(t[0]) + "," +
                std::to_string(t[1]) + "," + std::to_string(t[2]) + ")"),
          triangle(t) {}
};

// Validates partition shape (nonempty disjoint parts covering V); then true
// iff l >= 2, every pair of parts is joined monochromatically, and at most
// two colors appear between parts.
inline bool is_gallai_partition(const Graph& g, const Partition& parts) {
    std::vector<char> seen(g.n(), 0);
    int covered = 0;
    for (const auto& p : parts) {
        if (p.empty()) throw error("partition has an empty part");
        for (int v : p) {
            if (v < 0 || v >= g.n()) throw error("partition vertex out of range");
            if (seen[v]) throw error("partition parts overlap");
            seen[v] = 1;
            ++covered;
        }
    }
    if (covered != g.n()) throw error("partition does not cover the vertex set");

    if (parts.size() < 2) return false;
    std::set<int> cross;
    for (size_t i = 0; i < parts.size(); ++i)
        for (size_t j = i + 1; j < parts.size(); ++j) {
            int c = g.color(parts[i][0], parts[j][0]);
            for (int u : parts[i])
                for (int v : parts[j])
                    if (g.color_fast(u, v) != c) return false;
            cross.insert(c);
            if (cross.size() > 2) return false;
        }
    return true;
}

// Inclusion-minimal color module containing {u,v}: grow by adding any outside
// vertex that sees the current set in more than one color.
inline std::vector<int> smallest_module(const Graph& g, int u, int v) {
    if (u == v || u < 0 || v < 0 || u >= g.n() || v >= g.n())
        throw error("smallest_module: need two distinct vertices");
    const int n = g.n();
    std::vector<char> in_m(n, 0), queued(n, 0);
    std::vector<int> ref(n, 0);  // color of x toward the current set, 0 = unset
    std::vector<int> queue{u, v};
    queued[u] = queued[v] = 1;
    size_t head = 0;
    while (head < queue.size()) {
        int m = queue[head++];
        in_m[m] = 1;
        for (int x = 0; x < n; ++x) {
            if (in_m[x] || queued[x] || x == m) continue;
            int c = g.color_fast(std::min(x, m), std::max(x, m));
            if (ref[x] == 0) {
                ref[x] = c;
            } else if (ref[x] != c) {
                queued[x] = 1;
                queue.push_back(x);
            }
        }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
}

// Canonical Gallai partition: the quotient into maximal proper modules.
// Requires n >= 2 and no rainbow triangle (certified error otherwise).
inline Partition gallai_partition(const Graph& g) {
    if (g.n() < 2) throw error("gallai_partition: need n >= 2");
    if (auto t = find_rainbow_triangle(g)) throw rainbow_error(*t);

    const int n = g.n();
    std::vector<char> used_color(g.k() + 1, 0);
    int distinct = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int c = g.color_fast(u, v);
            if (!used_color[c]) {
                used_color[c] = 1;
                ++distinct;
            }
        }
    if (distinct <= 2) {
        Partition parts(n);
        for (int v = 0; v < n; ++v) parts[v] = {v};
        return parts;
    }

    // complete root: some color c whose non-c graph is disconnected; the
    // components are the maximal modules and all cross edges carry c
    for (int c = 1; c <= g.k(); ++c) {
        if (!used_color[c]) continue;
        std::vector<int> comp(n, -1);
        int ncomp = 0;
        for (int s = 0; s < n; ++s) {
            if (comp[s] >= 0) continue;
            comp[s] = ncomp;
            std::vector<int> stack{s};
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int y = 0; y < n; ++y)
                    if (y != x && comp[y] < 0 &&
                        g.color_fast(std::min(x, y), std::max(x, y)) != c) {
                        comp[y] = ncomp;
                        stack.push_back(y);
                    }
            }
            ++ncomp;
        }
        if (ncomp >= 2) {
            Partition parts(ncomp);
            for (int v = 0; v < n; ++v) parts[comp[v]].push_back(v);
            return parts;
        }
    }

    // prime root: the part containing u is the union of all proper smallest
    // modules through u
    std::vector<char> assigned(n, 0);
    Partition parts;
    for (int u = 0; u < n; ++u) {
        if (assigned[u]) continue;
        std::vector<char> in_part(n, 0);
        in_part[u] = 1;
        for (int v = 0; v < n; ++v) {
            if (v == u || in_part[v] || assigned[v]) continue;
            std::vector<int> m = smallest_module(g, u, v);
            if (int(m.size()) == n) continue;
            for (int x : m) in_part[x] = 1;
        }
        std::vector<int> part;
        for (int v = 0; v < n; ++v)
            if (in_part[v]) {
                part.push_back(v);
                assigned[v] = 1;
            }
        parts.push_back(std::move(part));
    }
    return parts;
}

// One representative per part; cross-part colors inherited.
inline Graph reduced_graph(const Graph& g, const Partition& parts) {
    if (!is_gallai_partition(g, parts))
        throw error("reduced_graph: not a Gallai partition");
    int l = int(parts.size());
    std::vector<uint8_t> table(size_t(l) * (l - 1) / 2);
    size_t pos = 0;
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j, ++pos)
            table[pos] = uint8_t(g.color(parts[i][0], parts[j][0]));
    return Graph(l, g.k(), table);
}

struct PeelResult {
    std::vector<int> order;   // t_1, t_2, ...
    std::vector<int> colors;  // c(t_j)
    std::vector<int> remainder;
};

// Greedy maximal sequence of vertices uniform toward the rest; lowest index
// first. Stops when no uniform vertex remains or the remainder has one vertex.
inline PeelResult peel_uniform_vertices(const Graph& g) {
    const int n = g.n();
    std::vector<char> removed(n, 0);
    int remaining = n;
    PeelResult res;
    while (remaining >= 2) {
        int pick = -1, pick_color = 0;
        for (int t = 0; t < n && pick < 0; ++t) {
            if (removed[t]) continue;
            int c0 = 0;
            bool uniform = true;
            for (int x = 0; x < n; ++x) {
                if (x == t || removed[x]) continue;
                int c = g.color_fast(std::min(t, x), std::max(t, x));
                if (c0 == 0)
                    c0 = c;
                else if (c != c0) {
                    uniform = false;
                    break;
                }
            }
            if (uniform) {
                pick = t;
                pick_color = c0;
            }
        }
        if (pick < 0) break;
        removed[pick] = 1;
        --remaining;
        res.order.push_back(pick);
        res.colors.push_back(pick_color);
    }
    for (int v = 0; v < n; ++v)
        if (!removed[v]) res.remainder.push_back(v);
    return res;
}

}  // namespace grkit
