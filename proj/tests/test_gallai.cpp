#include <catch2/catch_amalgamated.hpp>

#include "grkit/construct.hpp"
#include "grkit/gallai.hpp"
#include "oracles.hpp"

using namespace grkit;

namespace {

Partition singletons(int n) {
    Partition p(n);
    for (int v = 0; v < n; ++v) p[v] = {v};
    return p;
}

}  // namespace

TEST_CASE("is_gallai_partition") {
    Graph pent = base("pentagon5");
    REQUIRE(is_gallai_partition(pent, singletons(5)));

    // blow-up with the copies as parts
    Graph part = monochromatic(2, 3, 3);
    Graph outer = recolor(base("pentagon5"), {0, 1, 2}, 3);
    Graph g = substitute(outer, std::vector<Graph>(5, part));
    Partition copies;
    for (int i = 0; i < 5; ++i) copies.push_back({2 * i, 2 * i + 1});
    REQUIRE(is_gallai_partition(g, copies));

    Graph rainbow(3, 3, {1, 2, 3});
    REQUIRE(!is_gallai_partition(rainbow, singletons(3)));  // 3 cross colors

    REQUIRE(!is_gallai_partition(pent, {{0, 1, 2, 3, 4}}));  // l = 1

    REQUIRE_THROWS_AS(is_gallai_partition(pent, {{0, 1}, {1, 2}, {3, 4}}), error);
    REQUIRE_THROWS_AS(is_gallai_partition(pent, {{0, 1}, {2, 3}}), error);
    REQUIRE_THROWS_AS(is_gallai_partition(pent, {{0, 1}, {}, {2, 3, 4}}), error);
}

TEST_CASE("smallest_module basics") {
    Graph mono = monochromatic(6, 1, 1);
    REQUIRE(smallest_module(mono, 1, 4) == std::vector<int>{1, 4});

    Graph rainbow(3, 3, {1, 2, 3});
    REQUIRE(smallest_module(rainbow, 0, 1) == std::vector<int>{0, 1, 2});

    // a pair inside one copy of a blow-up stays inside the copy
    Graph part = monochromatic(3, 3, 3);
    Graph outer = recolor(base("pentagon5"), {0, 1, 2}, 3);
    Graph g = substitute(outer, std::vector<Graph>(5, part));
    auto m = smallest_module(g, 0, 2);
    for (int v : m) REQUIRE(v < 3);

    REQUIRE_THROWS_AS(smallest_module(mono, 2, 2), error);
}

TEST_CASE("smallest_module equals brute force on n <= 7") {
    std::mt19937_64 rng(31);
    for (int iter = 0; iter < 80; ++iter) {
        int n = 3 + int(rng() % 5);
        int k = 2 + int(rng() % 3);
        Graph g = oracles::random_coloring(n, k, rng);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                auto m = smallest_module(g, u, v);
                uint32_t mask = 0;
                for (int x : m) mask |= uint32_t(1) << x;
                REQUIRE(oracles::is_module(g, mask));
                REQUIRE(__builtin_popcount(oracles::brute_smallest_module(g, u, v)) ==
                        int(m.size()));
            }
    }
}

TEST_CASE("gallai_partition basics") {
    Graph pent = base("pentagon5");
    Partition p = gallai_partition(pent);
    REQUIRE(p.size() == 5);  // two colors: singleton partition
    REQUIRE(is_gallai_partition(pent, p));

    Graph rainbow(3, 3, {1, 2, 3});
    try {
        gallai_partition(rainbow);
        FAIL("expected rainbow_error");
    } catch (const rainbow_error& e) {
        REQUIRE(e.triangle == std::array<int, 3>{0, 1, 2});
    }

    REQUIRE_THROWS_AS(gallai_partition(Graph(1, 1, {})), error);
    REQUIRE(gallai_partition(Graph(2, 1, {1})).size() == 2);
}

TEST_CASE("gallai_partition of a blow-up recovers the copies") {
    Graph w421 = build(plan_w(4, 2, 1));  // qr17 outer over 5-vertex parts
    Partition p = gallai_partition(w421);
    REQUIRE(p.size() == 17);
    for (const auto& part : p) REQUIRE(part.size() == 5);
    REQUIRE(is_gallai_partition(w421, p));
    Graph red = reduced_graph(w421, p);
    std::set<int> cross;
    for (int i = 0; i < red.n(); ++i)
        for (int j = i + 1; j < red.n(); ++j) cross.insert(red.color(i, j));
    REQUIRE(cross == std::set<int>{1, 2});
}

TEST_CASE("reduced_graph") {
    // qr17 blown by color-3 pairs reduces back to qr17
    Graph qr = recolor(base("qr17"), {0, 1, 2}, 3);
    Graph pair = monochromatic(2, 3, 3);
    Graph g = substitute(qr, std::vector<Graph>(17, pair));
    Partition p = gallai_partition(g);
    REQUIRE(p.size() == 17);
    REQUIRE(reduced_graph(g, p) == qr);

    Graph pent = base("pentagon5");
    REQUIRE(reduced_graph(pent, gallai_partition(pent)) == pent);

    Graph two = monochromatic(4, 1, 1);
    Graph red2 = reduced_graph(two, {{0, 1}, {2, 3}});
    REQUIRE(red2.n() == 2);

    REQUIRE_THROWS_AS(reduced_graph(Graph(3, 3, {1, 2, 3}), singletons(3)), error);
}

TEST_CASE("peel_uniform_vertices") {
    // vertex 0 uniform in color 1 toward everything else
    std::mt19937_64 rng(32);
    Graph inner = oracles::random_coloring(5, 2, rng);
    std::vector<uint8_t> t(15);
    Graph probe(6, 2, std::vector<uint8_t>(15, 1));
    for (int v = 1; v < 6; ++v) t[probe.idx(0, v)] = 1;
    for (int u = 1; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v) t[probe.idx(u, v)] = uint8_t(inner.color(u - 1, v - 1));
    Graph g(6, 2, t);
    PeelResult res = peel_uniform_vertices(g);
    REQUIRE(!res.order.empty());
    REQUIRE(res.order[0] == 0);
    REQUIRE(res.colors[0] == 1);

    PeelResult pent = peel_uniform_vertices(base("pentagon5"));
    REQUIRE(pent.order.empty());
    REQUIRE(pent.remainder.size() == 5);

    PeelResult k2 = peel_uniform_vertices(Graph(2, 1, {1}));
    REQUIRE(k2.order.size() == 1);
    REQUIRE(k2.remainder.size() == 1);
}

TEST_CASE("fuzzed partitions, module congruence, peel maximality") {
    std::mt19937_64 rng(33);
    for (int iter = 0; iter < 120; ++iter) {
        int n = 2 + int(rng() % 39);
        int k = 2 + int(rng() % 4);
        Graph g = (iter % 2) ? oracles::random_gallai(n, k, rng)
                             : oracles::random_rainbow_free(n, k, rng);

        Partition p = gallai_partition(g);
        REQUIRE(is_gallai_partition(g, p));
        Graph red = reduced_graph(g, p);
        std::set<int> cross;
        for (int i = 0; i < red.n(); ++i)
            for (int j = i + 1; j < red.n(); ++j) cross.insert(red.color(i, j));
        REQUIRE(cross.size() <= 2);

        // module congruence: each part is a module
        for (const auto& part : p) {
            std::vector<char> inside(g.n(), 0);
            for (int v : part) inside[v] = 1;
            for (int x = 0; x < g.n(); ++x) {
                if (inside[x]) continue;
                int c0 = g.color(x, part[0]);
                for (int v : part) REQUIRE(g.color(x, v) == c0);
            }
        }

        // peel maximality, asserted literally
        PeelResult peel = peel_uniform_vertices(g);
        if (peel.remainder.size() >= 2) {
            for (int t : peel.remainder) {
                int c0 = 0;
                bool uniform = true;
                for (int x : peel.remainder) {
                    if (x == t) continue;
                    int c = g.color(t, x);
                    if (c0 == 0) c0 = c;
                    else if (c != c0) uniform = false;
                }
                REQUIRE(!uniform);
            }
        }
    }
}

TEST_CASE("rainbow inputs are rejected with a certificate") {
    std::mt19937_64 rng(34);
    int rejected = 0;
    for (int iter = 0; iter < 60; ++iter) {
        int n = 3 + int(rng() % 20);
        Graph g = oracles::random_coloring(n, 3 + int(rng() % 3), rng);
        try {
            gallai_partition(g);
        } catch (const rainbow_error& e) {
            ++rejected;
            auto [u, v, w] = e.triangle;
            int a = g.color(u, v), b = g.color(u, w), c = g.color(v, w);
            REQUIRE(a != b);
            REQUIRE(b != c);
            REQUIRE(a != c);
        }
    }
    REQUIRE(rejected > 30);  // random colorings are almost all rainbow
}
