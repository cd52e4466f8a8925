#include <catch2/catch_amalgamated.hpp>

#include "grkit/construct.hpp"
#include "grkit/detect.hpp"
#include "grkit/gcg.hpp"
#include "grkit/graph.hpp"
#include "oracles.hpp"

using namespace grkit;

TEST_CASE("new_graph basics") {
    Graph k2(2, 1, {1});
    REQUIRE(k2.n() == 2);
    REQUIRE(k2.color(0, 1) == 1);
    REQUIRE(k2.color(1, 0) == 1);  // symmetry is structural

    Graph rainbow(3, 3, {1, 2, 3});
    REQUIRE(rainbow.color(0, 1) == 1);
    REQUIRE(rainbow.color(1, 2) == 3);
    REQUIRE(find_rainbow_triangle(rainbow).has_value());

    // pentagon: C5 edges color 1, diagonals color 2 -- the a1 base
    Graph pent = base("pentagon5");
    REQUIRE(pent.n() == 5);
    REQUIRE(pent.color(0, 1) == 1);
    REQUIRE(pent.color(0, 2) == 2);
    REQUIRE(validate_witness(pent, RoleAssignment(2, 0, 2)).valid);
}

TEST_CASE("new_graph errors") {
    REQUIRE_THROWS_AS(Graph(0, 1, {}), error);
    REQUIRE_THROWS_AS(Graph(2, 0, {1}), error);
    REQUIRE_THROWS_AS(Graph(2, 1, {}), error);       // wrong table size
    REQUIRE_THROWS_AS(Graph(2, 1, {1, 1}), error);   // wrong table size
    REQUIRE_THROWS_AS(Graph(2, 1, {2}), error);      // color out of range
    REQUIRE_THROWS_AS(Graph(2, 1, {0}), error);      // 0 is reserved
    REQUIRE_THROWS_AS(Graph(3, 300, {1, 1, 1}), error);
}

TEST_CASE("substitute shapes and errors") {
    Graph k1(1, 1, {});
    Graph outer = monochromatic(2, 1, 1);
    Graph blown = substitute(outer, std::vector<Graph>{k1, k1});
    REQUIRE(blown == outer);  // identity-size blow-up

    // between-copy edges take the outer color, inside edges keep the part's
    Graph part = monochromatic(2, 2, 2);
    Graph outer2 = monochromatic(2, 2, 1);
    Graph g = substitute(outer2, std::vector<Graph>{part, part});
    REQUIRE(g.n() == 4);
    REQUIRE(g.color(0, 1) == 2);
    REQUIRE(g.color(2, 3) == 2);
    REQUIRE(g.color(0, 2) == 1);
    REQUIRE(g.color(1, 3) == 1);

    REQUIRE_THROWS_AS(substitute(outer2, std::vector<Graph>{part}), error);
    Graph wrong_k = monochromatic(2, 3, 1);
    REQUIRE_THROWS_AS(substitute(outer2, std::vector<Graph>{part, wrong_k}), error);
}

TEST_CASE("105-vertex blow-up is rainbow-free") {
    Graph c21 = base("c21_H3");
    Graph c21p = recolor(c21, {0, 1, 2}, 4);
    Graph pent = recolor(base("pentagon5"), {0, 3, 4}, 4);
    Graph g = substitute(pent, std::vector<Graph>(5, c21p));
    REQUIRE(g.n() == 105);
    REQUIRE(!find_rainbow_triangle(g).has_value());
}

TEST_CASE("substitute matches the direct product construction") {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 25; ++iter) {
        int k = 2 + int(rng() % 3);
        int m = 2 + int(rng() % 4);
        Graph outer = oracles::random_rainbow_free(m, k, rng);
        std::vector<Graph> parts;
        int total = 0;
        for (int i = 0; i < m; ++i) {
            int sz = 1 + int(rng() % 5);
            total += sz;
            parts.push_back(oracles::random_rainbow_free(sz, k, rng));
        }
        if (total > 40) continue;
        Graph a = substitute(outer, parts);
        REQUIRE(a == oracles::brute_substitute(outer, parts));
        REQUIRE(a.n() == total);
        REQUIRE(!find_rainbow_triangle(a).has_value());
    }
}

TEST_CASE("substitute is associative") {
    std::mt19937_64 rng(12);
    for (int iter = 0; iter < 15; ++iter) {
        int k = 3;
        int m = 2 + int(rng() % 2);
        Graph outer = oracles::random_coloring(m, k, rng);
        std::vector<Graph> mids;
        std::vector<Graph> nested;
        std::vector<Graph> leaves_flat;
        for (int i = 0; i < m; ++i) {
            int mi = 1 + int(rng() % 3);
            Graph mid = oracles::random_coloring(mi, k, rng);
            std::vector<Graph> leaves;
            for (int j = 0; j < mi; ++j) {
                leaves.push_back(oracles::random_coloring(1 + int(rng() % 3), k, rng));
                leaves_flat.push_back(leaves.back());
            }
            mids.push_back(mid);
            nested.push_back(substitute(mid, leaves));
        }
        Graph lhs = substitute(outer, nested);
        Graph rhs = substitute(substitute(outer, mids), leaves_flat);
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("join_two_copies") {
    Graph e5 = monochromatic(2, 5, 5);
    Graph j = join_two_copies(e5, 3);
    REQUIRE(j.n() == 4);
    REQUIRE(j.color(0, 1) == 5);
    REQUIRE(j.color(2, 3) == 5);
    REQUIRE(j.color(0, 2) == 3);
    REQUIRE(j == substitute(monochromatic(2, 5, 3), std::vector<Graph>{e5, e5}));

    Graph k1(1, 1, {});
    REQUIRE(join_two_copies(k1, 1) == monochromatic(2, 1, 1));
    REQUIRE_THROWS_AS(join_two_copies(k1, 2), error);
}

TEST_CASE("induced subgraphs") {
    Graph pent = base("pentagon5");
    std::vector<int> all{0, 1, 2, 3, 4};
    REQUIRE(induced(pent, all) == pent);

    // every triple of the pentagon uses both colors
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            for (int c = b + 1; c < 5; ++c) {
                Graph t = induced(pent, std::vector<int>{a, b, c});
                int c1 = t.color(0, 1), c2 = t.color(0, 2), c3 = t.color(1, 2);
                REQUIRE(!(c1 == c2 && c2 == c3));
            }

    Graph pair = induced(pent, std::vector<int>{1, 3});
    REQUIRE(pair.n() == 2);
    REQUIRE(pair.color(0, 1) == pent.color(1, 3));

    REQUIRE_THROWS_AS(induced(pent, std::vector<int>{}), error);
    REQUIRE_THROWS_AS(induced(pent, std::vector<int>{0, 7}), error);
}

TEST_CASE("gcg serialize format") {
    Graph k2(2, 1, {1});
    REQUIRE(serialize(k2) == "GCG 1\n2 1\n1\n");
    REQUIRE(parse("GCG 1\n2 1\n1\n") == k2);
    REQUIRE(parse("# comment\n# another\nGCG 1\n2 1\n1\n") == k2);
}

TEST_CASE("gcg parse rejects malformed input") {
    REQUIRE_THROWS_AS(parse("GCG 1\n2 1\n2\n"), error);        // color > k
    REQUIRE_THROWS_AS(parse("GCG 1\n2 1\n0\n"), error);        // reserved 0
    REQUIRE_THROWS_AS(parse("GCG 2\n2 1\n1\n"), error);        // bad header
    REQUIRE_THROWS_AS(parse(""), error);
    REQUIRE_THROWS_AS(parse("GCG 1\n3 1\n1\n1\n"), error);     // short row
    REQUIRE_THROWS_AS(parse("GCG 1\n2 1\n1 1\n"), error);      // long row
    REQUIRE_THROWS_AS(parse("GCG 1\n2 1\n1\nleftover\n"), error);
    REQUIRE_THROWS_AS(parse("GCG 1\n2\n1\n"), error);          // size line
    REQUIRE_THROWS_AS(parse("GCG 1\n0 1\n"), error);
    REQUIRE_THROWS_AS(parse("GCG 1\n2 1\nx\n"), error);
}

TEST_CASE("gcg round-trips") {
    std::mt19937_64 rng(13);
    for (int iter = 0; iter < 30; ++iter) {
        int n = 1 + int(rng() % 24);
        int k = 1 + int(rng() % 6);
        Graph g = oracles::random_coloring(n, k, rng);
        REQUIRE(parse(serialize(g)) == g);
    }
    Graph big = build(plan_f(4, 2, 2));  // the 105-vertex witness
    REQUIRE(big.n() == 105);
    REQUIRE(parse(serialize(big)) == big);
}

TEST_CASE("recolor") {
    Graph pent = base("pentagon5");
    Graph moved = recolor(pent, {0, 3, 4}, 4);
    REQUIRE(moved.k() == 4);
    REQUIRE(moved.color(0, 1) == 3);
    REQUIRE(moved.color(0, 2) == 4);
    REQUIRE_THROWS_AS(recolor(pent, {0, 1}, 4), error);       // map too short
    REQUIRE_THROWS_AS(recolor(pent, {0, 1, 9}, 4), error);    // out of palette
}
