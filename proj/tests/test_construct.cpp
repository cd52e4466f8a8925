#include <catch2/catch_amalgamated.hpp>

#include <filesystem>

#include "grkit/construct.hpp"
#include "grkit/gcg.hpp"
#include "oracles.hpp"

using namespace grkit;

TEST_CASE("base catalog materializes with the cited vertex counts") {
    struct Expect {
        const char* name;
        int n;
    } expects[] = {{"pentagon5", 5}, {"qr17", 17},  {"g8_K3_H", 8},
                   {"g10_K3_H3", 10}, {"c21_H3", 21}, {"mono_K2", 2},
                   {"mono_K3", 3},    {"mono_K4", 4}};
    for (auto [name, n] : expects) {
        Graph g = base(name);
        REQUIRE(g.n() == n);
        // base() validates against the declared forbidden spec internally;
        // re-check through the catalog to lock the contract
        REQUIRE(satisfies_spec(g, base_spec(name).forbidden));
    }
    REQUIRE_THROWS_AS(base("no_such_base"), error);
}

TEST_CASE("qr17 uses the quadratic residue split") {
    Graph qr = base("qr17");
    std::set<int> residues;
    for (int x = 1; x < 17; ++x) residues.insert(x * x % 17);
    for (int u = 0; u < 17; ++u)
        for (int v = u + 1; v < 17; ++v) {
            bool qv = residues.count((v - u) % 17) > 0;
            REQUIRE(qr.color(u, v) == (qv ? 1 : 2));
        }
}

TEST_CASE("g10 is the Petersen pair graph") {
    Graph g = base("g10_K3_H3");
    REQUIRE(!has_mono_copy(g, patterns::k3(), 1));
    REQUIRE(!has_mono_copy(g, patterns::h3(), 2));
    int deg = g.color_degree(1, 0);
    REQUIRE(deg == 3);  // Petersen is cubic
}

TEST_CASE("c21 persists into the witness store") {
    auto dir = std::filesystem::temp_directory_path() / "grkit_test_store";
    std::filesystem::remove_all(dir);
    WitnessStore store(dir);
    Graph a = base("c21_H3", &store);
    REQUIRE(std::filesystem::exists(store.file("c21_H3")));
    REQUIRE(std::filesystem::exists(dir / "c21_H3.meta"));
    Graph b = base("c21_H3", &store);  // second call loads the stored witness
    REQUIRE(a == b);
    std::filesystem::remove_all(dir);
}

TEST_CASE("corrupt store entries are rejected") {
    auto dir = std::filesystem::temp_directory_path() / "grkit_bad_store";
    std::filesystem::remove_all(dir);
    WitnessStore store(dir);
    store.save("c21_H3", monochromatic(21, 2, 1));  // full of H3 copies
    REQUIRE_THROWS_AS(base("c21_H3", &store), error);
    std::filesystem::remove_all(dir);
}

TEST_CASE("plan shapes match the construction recipes") {
    ConstructionPlan p1 = plan_w(4, 2, 1);
    REQUIRE(p1.base.root == "pentagon5");
    REQUIRE(p1.base.root_map == std::vector<int>{0, 3, 4});
    REQUIRE(p1.steps.size() == 1);
    REQUIRE(p1.steps[0].outer == "qr17");
    REQUIRE(p1.steps[0].color_a == 1);
    REQUIRE(p1.steps[0].color_b == 2);
    REQUIRE(p1.target == 85);

    ConstructionPlan p2 = plan_f(4, 0, 4);
    REQUIRE(p2.base.root == "c21_H3");
    REQUIRE(p2.steps.size() == 1);
    REQUIRE(p2.steps[0].outer == "qr17");
    REQUIRE(p2.steps[0].color_a == 3);
    REQUIRE(p2.steps[0].color_b == 4);
    REQUIRE(p2.target == 357);

    ConstructionPlan p3 = plan_f(2, 1, 1);
    REQUIRE(p3.base.root == "g10_K3_H3");
    REQUIRE(p3.steps.empty());
    REQUIRE(p3.target == 10);

    REQUIRE_THROWS_AS(plan_w(4, 2, 3), error);  // H3 belongs to plan_f
}

TEST_CASE("build examples") {
    Graph w311 = build(plan_w(3, 1, 1));
    REQUIRE(w311.n() == 20);
    REQUIRE(validate_witness(w311, RoleAssignment(3, 1, 2, 1)).valid);

    Graph f311 = build(plan_f(3, 1, 1));
    REQUIRE(f311.n() == 16);
    REQUIRE(validate_witness(f311, RoleAssignment(3, 1, 1, 3)).valid);

    for (int k : {1, 2, 5}) {
        Graph trivial = build(plan_f(k, 0, 0));
        REQUIRE(trivial.n() == 2);
    }
}

TEST_CASE("build is deterministic byte for byte") {
    std::string a = serialize(build(plan_f(3, 1, 2)));
    std::string b = serialize(build(plan_f(3, 1, 2)));
    REQUIRE(a == b);
    std::string c = serialize(build(plan_w(4, 2, 2)));
    std::string d = serialize(build(plan_w(4, 2, 2)));
    REQUIRE(c == d);
}

TEST_CASE("size and validity law across small targets") {
    // every admissible argument with value <= 200 builds to the exact size
    // and validates (the acceptance suite pushes this to 600)
    for (int k = 1; k <= 12; ++k)
        for (int r = 0; r <= k; ++r) {
            Int target = w(k, r);
            if (target > 200) continue;
            for (int h = 1; h <= 2; ++h) {
                Graph g = build(plan_w(k, r, h));
                REQUIRE(Int(g.n()) == target);
            }
        }
    for (int k = 1; k <= 12; ++k)
        for (int s = 0; s <= k; ++s)
            for (int r = 0; r + s <= k; ++r) {
                Int target = f(k, s, r);
                if (target > 200) continue;
                Graph g = build(plan_f(k, s, r));
                REQUIRE(Int(g.n()) == target);
            }
}

TEST_CASE("store directory resolution") {
    REQUIRE(store_dir_from("explicit") == std::filesystem::path("explicit"));
    ::setenv("GRKIT_STORE", "/tmp/env_store_xyz", 1);
    REQUIRE(store_dir_from("") == std::filesystem::path("/tmp/env_store_xyz"));
    REQUIRE(store_dir_from("flag_wins") == std::filesystem::path("flag_wins"));
    ::unsetenv("GRKIT_STORE");
    REQUIRE(store_dir_from("") == std::filesystem::path("witnesses"));
}
