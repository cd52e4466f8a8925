#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "grkit/detect.hpp"
#include "grkit/formulas.hpp"
#include "grkit/gcg.hpp"
#include "grkit/graph.hpp"
#include "grkit/search.hpp"

namespace grkit {

// Directory of <name>.gcg files; search-discovered witnesses carry a one-line
// <name>.meta sidecar recording spec, seed and node count.
class WitnessStore {
  public:
    explicit WitnessStore(std::filesystem::path dir) : dir_(std::move(dir)) {}

    const std::filesystem::path& dir() const { return dir_; }
    std::filesystem::path file(const std::string& name) const {
        return dir_ / (name + ".gcg");
    }

    std::optional<Graph> load(const std::string& name) const {
        auto p = file(name);
        if (!std::filesystem::exists(p)) return std::nullopt;
        return parse_file(p.string());
    }

    void save(const std::string& name, const Graph& g) const {
        std::filesystem::create_directories(dir_);
        write_file(file(name).string(), g);
    }

    void save_sidecar(const std::string& name, const std::string& line) const {
        std::filesystem::create_directories(dir_);
        std::ofstream out(dir_ / (name + ".meta"));
        out << line << "\n";
    }

  private:
    std::filesystem::path dir_;
};

// flag wins, then GRKIT_STORE, then ./witnesses
inline std::filesystem::path store_dir_from(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("GRKIT_STORE"); env && *env) return env;
    return "witnesses";
}

enum class BaseSource { Hardcoded, Circulant, SearchRequired };

struct BaseSpec {
    std::string name;
    int n;
    BaseSource source;
    std::vector<std::vector<int>> classes;  // circulant difference classes per color
    ForbiddenSpec forbidden;                // what the materialized base must avoid
};

inline const std::vector<BaseSpec>& base_catalog() {
    using namespace patterns;
    static const std::vector<BaseSpec> cat = {
        // C5 in color 1, diagonals in color 2; no mono K3
        {"pentagon5", 5, BaseSource::Circulant, {{1}, {2}}, {{&k3(), &k3()}}},
        // quadratic residues mod 17 in color 1; no mono K4 either side
        {"qr17", 17, BaseSource::Circulant, {{1, 2, 4, 8}, {3, 5, 6, 7}}, {{&k4(), &k4()}}},
        // color 1 triangle-free (K3 role), color 2 K4-free (H role)
        {"g8_K3_H", 8, BaseSource::Circulant, {{1, 4}, {2, 3}}, {{&k3(), &k4()}}},
        // Petersen edges in color 1 (K3 role), complement in color 2 (H3 role)
        {"g10_K3_H3", 10, BaseSource::Hardcoded, {}, {{&k3(), &h3()}}},
        {"c21_H3", 21, BaseSource::SearchRequired, {}, {{&h3(), &h3()}}},
        // single vertex: the seed of all-H plans, where no finite base is consumed
        {"mono_K1", 1, BaseSource::Hardcoded, {}, {{&h3()}}},
        {"mono_K2", 2, BaseSource::Hardcoded, {}, {{&k3()}}},
        {"mono_K3", 3, BaseSource::Hardcoded, {}, {{&h3()}}},
        {"mono_K4", 4, BaseSource::Hardcoded, {}, {{&h3()}}},
    };
    return cat;
}

inline const BaseSpec& base_spec(const std::string& name) {
    for (const auto& b : base_catalog())
        if (b.name == name) return b;
    throw error("unknown base '" + name + "'");
}

namespace detail_construct {

inline Graph circulant_from_classes(int n, const std::vector<std::vector<int>>& classes) {
    std::vector<int> class_color(n / 2 + 1, 0);
    for (size_t c = 0; c < classes.size(); ++c)
        for (int d : classes[c]) class_color[d] = int(c) + 1;
    std::vector<uint8_t> table(size_t(n) * (n - 1) / 2);
    size_t pos = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++pos) {
            int d = std::min(v - u, n - (v - u));
            table[pos] = uint8_t(class_color[d]);
        }
    return Graph(n, int(classes.size()), table);
}

inline Graph petersen_pair_graph() {
    // vertices are the 2-subsets of {0..4} in lex order; disjoint pairs are
    // color 1 (the Petersen graph), intersecting pairs color 2
    std::vector<std::pair<int, int>> vs;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) vs.push_back({i, j});
    std::vector<uint8_t> table;
    for (int a = 0; a < 10; ++a)
        for (int b = a + 1; b < 10; ++b) {
            bool meet = vs[a].first == vs[b].first || vs[a].first == vs[b].second ||
                        vs[a].second == vs[b].first || vs[a].second == vs[b].second;
            table.push_back(uint8_t(meet ? 2 : 1));
        }
    return Graph(10, 2, table);
}

inline Graph materialize_c21(WitnessStore* store) {
    const BaseSpec& spec = base_spec("c21_H3");
    if (store) {
        if (auto g = store->load("c21_H3")) {
            if (!satisfies_spec(*g, spec.forbidden))
                throw error("stored c21_H3 witness fails validation");
            return *g;
        }
    }
    // circulant first (exhausts all 2^10 splits), then tabu fallback
    if (auto g = search_circulant(21, spec.forbidden)) {
        if (store) {
            store->save("c21_H3", *g);
            store->save_sidecar("c21_H3", "spec=1:H3,2:H3 source=circulant");
        }
        return *g;
    }
    for (uint64_t seed = 1; seed <= 16; ++seed) {
        SearchBudget budget;
        budget.seed = seed;
        budget.iter_limit = 50'000;
        SearchResult res = search_local(21, spec.forbidden, budget);
        if (res.status == SearchStatus::Found) {
            if (!satisfies_spec(*res.graph, spec.forbidden))
                throw error("local search returned an invalid c21_H3 witness");
            if (store) {
                store->save("c21_H3", *res.graph);
                store->save_sidecar("c21_H3",
                                    "spec=1:H3,2:H3 source=local seed=" +
                                        std::to_string(seed) +
                                        " iters=" + std::to_string(res.nodes));
            }
            return *res.graph;
        }
    }
    throw error("c21_H3: search exhausted without a witness");
}

}  // namespace detail_construct

// Materializes a catalog base and validates it against its declared spec.
inline Graph base(const std::string& name, WitnessStore* store = nullptr) {
    const BaseSpec& spec = base_spec(name);
    Graph g = [&]() -> Graph {
        switch (spec.source) {
            case BaseSource::Circulant:
                return detail_construct::circulant_from_classes(spec.n, spec.classes);
            case BaseSource::Hardcoded:
                if (name == "g10_K3_H3") return detail_construct::petersen_pair_graph();
                if (name == "mono_K1") return Graph(1, 1, {});
                if (name == "mono_K2") return monochromatic(2, 1, 1);
                if (name == "mono_K3") return monochromatic(3, 1, 1);
                if (name == "mono_K4") return monochromatic(4, 1, 1);
                throw error("no builder for hardcoded base " + name);
            case BaseSource::SearchRequired:
                return detail_construct::materialize_c21(store);
        }
        throw error("unreachable");
    }();
    if (g.n() != spec.n) throw error("base " + name + " has wrong vertex count");
    if (!satisfies_spec(g, spec.forbidden))
        throw error("base " + name + " fails its validation spec");
    return g;
}

struct BlowupStep {
    std::string outer;  // pentagon5 or qr17
    int color_a, color_b;
};

// Base assembly: a catalog root, optionally blown up by a part in every
// vertex, optionally joined with a second copy.
struct BaseAssembly {
    std::string root;
    std::vector<int> root_map;  // canonical color -> palette color, index 0 unused
    std::optional<std::string> part;
    std::vector<int> part_map;
    std::optional<int> join_color;
};

struct ConstructionPlan {
    RoleAssignment roles;
    BaseAssembly base;
    std::vector<BlowupStep> steps;
    Int target;
    std::string name;
};

namespace detail_construct {

// pairs up the remaining colors of each role block: all K3 pairs first on the
// pentagon outer, then all H pairs on qr17, ascending
inline void add_steps(ConstructionPlan& plan, const std::vector<int>& k3_left,
                      const std::vector<int>& h_left) {
    if (k3_left.size() % 2 || h_left.size() % 2)
        throw error("internal: leftover colors do not pair up");
    for (size_t i = 0; i < k3_left.size(); i += 2)
        plan.steps.push_back({"pentagon5", k3_left[i], k3_left[i + 1]});
    for (size_t i = 0; i < h_left.size(); i += 2)
        plan.steps.push_back({"qr17", h_left[i], h_left[i + 1]});
}

inline std::vector<int> range_minus(int lo, int hi, std::vector<int> del) {
    std::vector<int> out;
    for (int c = lo; c <= hi; ++c)
        if (std::find(del.begin(), del.end(), c) == del.end()) out.push_back(c);
    return out;
}

inline Int base_assembly_size(const BaseAssembly& a) {
    Int sz = base_spec(a.root).n;
    if (a.part) sz *= base_spec(*a.part).n;
    if (a.join_color) sz *= 2;
    return sz;
}

}  // namespace detail_construct

inline ConstructionPlan plan_w(int k, int r, int h_index) {
    if (h_index != 1 && h_index != 2)
        throw error("plan_w: H must be H1 or H2 (H3 lives in plan_f)");
    case_of_w(k, r);  // domain check
    ConstructionPlan plan{RoleAssignment(k, r, k - r, h_index), {}, {}, w(k, r),
                          "w_" + std::to_string(k) + "_" + std::to_string(r) +
                              "_h" + std::to_string(h_index)};
    std::vector<int> used_k3, used_h;
    switch (case_of_w(k, r)) {
        case CaseW::a1:
            if (r == k) {  // no K3 colors at all; the pentagon factor is empty
                plan.base = {"mono_K1", {0, 1}, {}, {}, {}};
            } else {
                plan.base = {"pentagon5", {0, r + 1, r + 2}, {}, {}, {}};
                used_k3 = {r + 1, r + 2};
            }
            break;
        case CaseW::a2:
            plan.base = {"mono_K2", {0, r + 1}, {}, {}, {}};
            used_k3 = {r + 1};
            break;
        case CaseW::a3:
            plan.base = {"g8_K3_H", {0, r + 1, 1}, {}, {}, {}};
            used_k3 = {r + 1};
            used_h = {1};
            break;
        case CaseW::a4:
            plan.base = {"mono_K4", {0, 1}, {}, {}, {}};
            used_h = {1};
            break;
    }
    detail_construct::add_steps(plan, detail_construct::range_minus(r + 1, k, used_k3),
                                detail_construct::range_minus(1, r, used_h));
    return plan;
}

inline ConstructionPlan plan_f(int k, int s, int r) {
    case_of_f(k, s, r);  // domain check
    ConstructionPlan plan{RoleAssignment(k, r, s, 3), {}, {}, f(k, s, r),
                          "f_" + std::to_string(k) + "_" + std::to_string(s) +
                              "_" + std::to_string(r)};
    const int first_p3 = r + s + 1;  // valid only when s + r < k
    std::vector<int> used_k3, used_h;
    switch (case_of_f(k, s, r)) {
        case CaseF::b1:
            if (r >= 2) {
                plan.base = {"c21_H3", {0, 1, 2}, {}, {}, {}};
                used_h = {1, 2};
            } else {  // r = 0, s = k
                plan.base = {"pentagon5", {0, r + 1, r + 2}, {}, {}, {}};
                used_k3 = {r + 1, r + 2};
            }
            break;
        case CaseF::b2:
            plan.base = {"mono_K2", {0, first_p3}, {}, {}, {}};
            break;
        case CaseF::b3:
            if (r >= 2) {
                plan.base = {"c21_H3", {0, 1, 2}, {}, {}, r + 1};
                used_h = {1, 2};
                used_k3 = {r + 1};
            } else {
                plan.base = {"mono_K2", {0, r + 1}, {}, {}, {}};
                used_k3 = {r + 1};
            }
            break;
        case CaseF::b4:
            plan.base = {"mono_K2", {0, first_p3}, {}, {}, r + 1};
            used_k3 = {r + 1};
            break;
        case CaseF::b5:
            plan.base = {"g10_K3_H3", {0, r + 1, 1}, {}, {}, {}};
            used_k3 = {r + 1};
            used_h = {1};
            break;
        case CaseF::b6:
            plan.base = {"g8_K3_H", {0, r + 1, 1}, "mono_K2", {0, first_p3}, {}};
            used_k3 = {r + 1};
            used_h = {1};
            break;
        case CaseF::b7:
            plan.base = {"mono_K4", {0, 1}, {}, {}, {}};
            used_h = {1};
            break;
        case CaseF::b8:
            if (s == 0) {
                plan.base = {"mono_K3", {0, 1}, "mono_K2", {0, first_p3}, {}};
                used_h = {1};
            } else {  // s >= 2: join two copies of the 16-vertex assembly
                plan.base = {"g8_K3_H", {0, r + 1, 1}, "mono_K2", {0, first_p3}, r + 2};
                used_k3 = {r + 1, r + 2};
                used_h = {1};
            }
            break;
    }
    detail_construct::add_steps(plan,
                                detail_construct::range_minus(r + 1, r + s, used_k3),
                                detail_construct::range_minus(1, r, used_h));
    return plan;
}

// Executes the plan and validates the result; any failure is a hard error.
inline Graph build(const ConstructionPlan& plan, WitnessStore* store = nullptr) {
    const int k = plan.roles.k;
    Graph g = recolor(base(plan.base.root, store), plan.base.root_map, k);
    if (plan.base.part) {
        Graph part = recolor(base(*plan.base.part, store), plan.base.part_map, k);
        std::vector<Graph> parts(size_t(g.n()), part);
        g = substitute(g, parts);
    }
    if (plan.base.join_color) g = join_two_copies(g, *plan.base.join_color);
    for (const auto& step : plan.steps) {
        Graph outer = recolor(base(step.outer, store), {0, step.color_a, step.color_b}, k);
        std::vector<Graph> parts(size_t(outer.n()), g);
        g = substitute(outer, parts);
    }
    if (Int(g.n()) != plan.target)
        throw error("build " + plan.name + ": got " + std::to_string(g.n()) +
                    " vertices, expected target");
    WitnessReport rep = validate_witness(g, plan.roles);
    if (!rep.valid) throw error("build " + plan.name + ": witness validation failed");
    return g;
}

}  // namespace grkit
