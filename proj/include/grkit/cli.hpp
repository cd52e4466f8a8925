#pragma once

#include <CLI11.hpp>
#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "grkit/construct.hpp"
#include "grkit/detect.hpp"
#include "grkit/formulas.hpp"
#include "grkit/gallai.hpp"
#include "grkit/gcg.hpp"
#include "grkit/search.hpp"

namespace grkit::cli {

// Exit codes: 0 success/verified, 1 property violated or absence where
// presence was expected, 2 usage/format error, 3 budget exhausted.
enum ExitCode { EXIT_OK = 0, EXIT_VIOLATED = 1, EXIT_USAGE = 2, EXIT_BUDGET = 3 };

namespace detail_cli {

inline std::string sanitize(const std::string& s) {
    std::string out;
    for (char c : s)
        if (std::isalnum(static_cast<unsigned char>(c))) out += c;
    return out;
}

inline ForbiddenSpec parse_forbid(const std::string& text) {
    ForbiddenSpec spec;
    std::vector<std::pair<int, const Pattern*>> entries;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t colon = item.find(':');
        if (colon == std::string::npos)
            throw error("--forbid entries look like '1:P3'");
        int color = std::stoi(item.substr(0, colon));
        entries.push_back({color, &patterns::by_name(item.substr(colon + 1))});
    }
    if (entries.empty()) throw error("--forbid must name at least one color");
    spec.per_color.assign(entries.size(), nullptr);
    for (auto [color, pat] : entries) {
        if (color < 1 || color > int(entries.size()) || spec.per_color[color - 1])
            throw error("--forbid colors must be 1..k, each exactly once");
        spec.per_color[color - 1] = pat;
    }
    return spec;
}

inline std::string spec_string(const ForbiddenSpec& spec) {
    std::string s;
    for (int c = 1; c <= spec.k(); ++c) {
        if (c > 1) s += ',';
        s += std::to_string(c) + ":" + spec.per_color[c - 1]->name;
    }
    return s;
}

inline std::string embedding_string(const Embedding& e) {
    std::string s;
    for (size_t i = 0; i < e.map.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(e.map[i]);
    }
    return s;
}

inline int report_witness(std::ostream& out, const WitnessReport& rep) {
    if (rep.rainbow_triangle) {
        auto t = *rep.rainbow_triangle;
        out << "rainbow=" << t[0] << "," << t[1] << "," << t[2] << "\n";
    }
    for (const auto& v : rep.violations)
        out << "violation=color:" << v.color << " pattern:" << v.pattern
            << " at:" << embedding_string(v.embedding) << "\n";
    out << "valid=" << (rep.valid ? 1 : 0) << "\n";
    return rep.valid ? EXIT_OK : EXIT_VIOLATED;
}

}  // namespace detail_cli

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Gallai-Ramsey toolkit"};
    app.require_subcommand(1);
    auto ADDSUB = [](CLI::App* parent, const std::string& name, const std::string& desc) {
        CLI::App* sub = parent->add_subcommand(name, desc);
        sub->fallthrough();
        return sub;
    };
    std::string store_flag;
    int jobs = 1;
    app.add_option("--store", store_flag, "witness store directory");
    app.add_option("--jobs", jobs, "worker cap for search fan-out")->check(CLI::Range(1, 256));

    // eval
    auto* eval = ADDSUB(&app, "eval", "evaluate formulas");
    eval->require_subcommand(1);
    int ek = 0, er = 0, es = 0;
    std::string eh, ename;
    auto* eval_w = ADDSUB(eval, "w", "w(k,r) and GR");
    eval_w->add_option("k", ek)->required();
    eval_w->add_option("r", er)->required();
    auto* eval_f = ADDSUB(eval, "f", "f(k,s,r) and GR");
    eval_f->add_option("k", ek)->required();
    eval_f->add_option("s", es)->required();
    eval_f->add_option("r", er)->required();
    auto* eval_gr = ADDSUB(eval, "gr", "GR_k(H)");
    eval_gr->set_help_flag("--help", "print help");
    eval_gr->add_option("k", ek)->required();
    eval_gr->add_option("h", eh)->required()->check(CLI::IsMember({"h1", "h2", "h3"}));
    auto* eval_const = ADDSUB(eval, "const", "cited Ramsey constant");
    eval_const->add_option("name", ename)->required();

    // construct
    auto* cons = ADDSUB(&app, "construct", "build a lower-bound witness");
    cons->require_subcommand(1);
    int ck = 0, cr = 0, cs = 0;
    std::string ch = "h1", cout_file;
    auto* cons_w = ADDSUB(cons, "w", "witness for (k-r)K3, rH");
    cons_w->set_help_flag("--help", "print help");
    cons_w->add_option("k", ck)->required();
    cons_w->add_option("r", cr)->required();
    cons_w->add_option("h", ch)->check(CLI::IsMember({"h1", "h2"}));
    cons_w->add_option("-o,--output", cout_file);
    auto* cons_f = ADDSUB(cons, "f", "witness for (k-s-r)P3, sK3, rH3");
    cons_f->add_option("k", ck)->required();
    cons_f->add_option("s", cs)->required();
    cons_f->add_option("r", cr)->required();
    cons_f->add_option("-o,--output", cout_file);

    // verify
    auto* ver = ADDSUB(&app, "verify", "validate a witness file");
    std::string vfile, vroles, vh = "h3";
    ver->set_help_flag("--help", "print help");
    ver->add_option("file", vfile)->required();
    ver->add_option("--roles", vroles, "r,s")->required();
    ver->add_option("--h", vh)->check(CLI::IsMember({"h1", "h2", "h3"}));

    // partition / peel
    auto* part = ADDSUB(&app, "partition", "Gallai partition and reduced graph");
    std::string pfile;
    part->add_option("file", pfile)->required();
    auto* peel = ADDSUB(&app, "peel", "maximal uniform-vertex sequence");
    std::string peelfile;
    peel->add_option("file", peelfile)->required();

    // search
    auto* sea = ADDSUB(&app, "search", "witness discovery");
    std::string smode, sforbid, sout;
    int sn = 0;
    uint64_t sseed = 1;
    long long sbudget = 0;
    sea->add_option("mode", smode)->required()
        ->check(CLI::IsMember({"circulant", "backtrack", "local"}));
    sea->add_option("n", sn)->required();
    sea->add_option("--forbid", sforbid)->required();
    sea->add_option("--seed", sseed);
    sea->add_option("--budget", sbudget);
    sea->add_option("-o,--output", sout);

    // ramsey prove
    auto* ram = ADDSUB(&app, "ramsey", "exhaustive upper-bound proof");
    ram->require_subcommand(1);
    auto* ramp = ADDSUB(ram, "prove", "prove no avoiding coloring exists");
    int rn = 0;
    std::string rforbid;
    long long rbudget = 0;
    ramp->add_option("n", rn)->required();
    ramp->add_option("--forbid", rforbid)->required();
    ramp->add_option("--budget", rbudget);

    // tables check
    auto* tab = ADDSUB(&app, "tables", "formula table verification");
    tab->require_subcommand(1);
    auto* tabc = ADDSUB(tab, "check", "sweep tables, inequalities, appendix");
    int kmax = 20;
    tabc->add_option("--kmax", kmax)->check(CLI::Range(3, 60));

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return EXIT_OK;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    }

    WitnessStore store(store_dir_from(store_flag));

    try {
        if (eval_w->parsed()) {
            out << "GR=" << gr_w(ek, er) << " case=" << to_string(case_of_w(ek, er)) << "\n";
            return EXIT_OK;
        }
        if (eval_f->parsed()) {
            out << "GR=" << gr_f(ek, es, er) << " case=" << to_string(case_of_f(ek, es, er)) << "\n";
            return EXIT_OK;
        }
        if (eval_gr->parsed()) {
            int h = eh[1] - '0';
            std::string case_id = h == 3 ? to_string(case_of_f(ek, 0, ek))
                                         : to_string(case_of_w(ek, ek));
            out << "GR=" << gr_main(ek, h) << " case=" << case_id << "\n";
            return EXIT_OK;
        }
        if (eval_const->parsed()) {
            out << "value=" << ramsey_constant(ename) << "\n";
            return EXIT_OK;
        }

        if (cons_w->parsed() || cons_f->parsed()) {
            ConstructionPlan plan = cons_w->parsed() ? plan_w(ck, cr, ch[1] - '0')
                                                     : plan_f(ck, cs, cr);
            Graph g = build(plan, &store);
            std::string path = cout_file;
            if (path.empty()) {
                store.save(plan.name, g);
                path = store.file(plan.name).string();
            } else {
                write_file(path, g);
            }
            out << "name=" << plan.name << " n=" << g.n() << " k=" << g.k()
                << " file=" << path << " valid=1\n";
            return EXIT_OK;
        }

        if (ver->parsed()) {
            Graph g = parse_file(vfile);
            size_t comma = vroles.find(',');
            if (comma == std::string::npos) throw error("--roles wants 'r,s'");
            int r = std::stoi(vroles.substr(0, comma));
            int s = std::stoi(vroles.substr(comma + 1));
            RoleAssignment roles(g.k(), r, s, vh[1] - '0');
            return detail_cli::report_witness(out, validate_witness(g, roles));
        }

        if (part->parsed()) {
            Graph g = parse_file(pfile);
            Partition parts;
            try {
                parts = gallai_partition(g);
            } catch (const rainbow_error& e) {
                out << "rainbow=" << e.triangle[0] << "," << e.triangle[1] << ","
                    << e.triangle[2] << "\n";
                return EXIT_VIOLATED;
            }
            out << "parts=" << parts.size() << "\n";
            for (size_t i = 0; i < parts.size(); ++i) {
                out << "part" << (i + 1) << "=";
                for (size_t j = 0; j < parts[i].size(); ++j)
                    out << (j ? "," : "") << parts[i][j];
                out << "\n";
            }
            Graph red = reduced_graph(g, parts);
            std::set<int> cross;
            for (int i = 0; i < red.n(); ++i)
                for (int j = i + 1; j < red.n(); ++j) cross.insert(red.color(i, j));
            out << "cross_colors=";
            bool first = true;
            for (int c : cross) {
                out << (first ? "" : ",") << c;
                first = false;
            }
            out << "\nreduced:\n" << serialize(red);
            return EXIT_OK;
        }

        if (peel->parsed()) {
            Graph g = parse_file(peelfile);
            PeelResult res = peel_uniform_vertices(g);
            out << "peeled=" << res.order.size() << "\n";
            for (size_t j = 0; j < res.order.size(); ++j)
                out << "t" << (j + 1) << "=" << res.order[j]
                    << " color=" << res.colors[j] << "\n";
            out << "remainder=";
            for (size_t j = 0; j < res.remainder.size(); ++j)
                out << (j ? "," : "") << res.remainder[j];
            out << "\n";
            return EXIT_OK;
        }

        if (sea->parsed()) {
            ForbiddenSpec spec = detail_cli::parse_forbid(sforbid);
            std::string store_name = "s_" + smode + "_" + std::to_string(sn);
            for (const auto* p : spec.per_color)
                store_name += "_" + detail_cli::sanitize(p->name);
            auto emit_found = [&](const Graph& g, const std::string& sidecar) {
                store.save(store_name, g);
                store.save_sidecar(store_name, sidecar);
                if (!sout.empty()) write_file(sout, g);
                out << "found=1 n=" << g.n() << " file="
                    << (sout.empty() ? store.file(store_name).string() : sout) << "\n";
            };
            std::string meta = "spec=" + detail_cli::spec_string(spec);
            if (smode == "circulant") {
                auto g = search_circulant(sn, spec, jobs);
                if (g) {
                    emit_found(*g, meta + " source=circulant");
                    return EXIT_OK;
                }
                out << "found=0 proven=1\n";
                return EXIT_VIOLATED;
            }
            SearchBudget budget;
            budget.seed = sseed;
            if (sbudget > 0) {
                budget.node_limit = sbudget;
                budget.iter_limit = sbudget;
            }
            if (smode == "backtrack") {
                SearchResult res = search_backtrack(sn, spec, budget);
                if (res.status == SearchStatus::Found) {
                    emit_found(*res.graph, meta + " source=backtrack nodes=" +
                                               std::to_string(res.nodes));
                    out << "nodes=" << res.nodes << "\n";
                    return EXIT_OK;
                }
                out << "found=0 " << (res.status == SearchStatus::Exhausted
                                          ? "proven=1"
                                          : "budget_exhausted=1")
                    << " nodes=" << res.nodes << "\n";
                return res.status == SearchStatus::Exhausted ? EXIT_VIOLATED : EXIT_BUDGET;
            }
            SearchResult res = search_local(sn, spec, budget);
            if (res.status == SearchStatus::Found) {
                emit_found(*res.graph, meta + " source=local seed=" +
                                           std::to_string(sseed) +
                                           " iters=" + std::to_string(res.nodes));
                out << "iters=" << res.nodes << "\n";
                return EXIT_OK;
            }
            out << "found=0 budget_exhausted=1 iters=" << res.nodes << "\n";
            return EXIT_BUDGET;
        }

        if (ramp->parsed()) {
            ForbiddenSpec spec = detail_cli::parse_forbid(rforbid);
            SearchBudget budget;
            if (rbudget > 0) budget.node_limit = rbudget;
            ProveResult res = prove_ramsey_upper(rn, spec, budget);
            if (res.outcome == ProveOutcome::Proven) {
                out << "proven=1 nodes=" << res.nodes << "\n";
                return EXIT_OK;
            }
            if (res.outcome == ProveOutcome::Refuted) {
                out << "proven=0 counterexample=1 nodes=" << res.nodes << "\n";
                return EXIT_VIOLATED;
            }
            out << "budget_exhausted=1 nodes=" << res.nodes << "\n";
            return EXIT_BUDGET;
        }

        if (tabc->parsed()) {
            TablesCheckResult res = tables_check(kmax);
            auto line = [&](const char* name, const SweepStats& st) {
                out << name << " checked=" << st.checked << " skipped=" << st.skipped
                    << " failed=" << st.failed << "\n";
            };
            line("table1", res.table1);
            line("table2", res.table2);
            line("inequalities_a", res.ineq_a);
            line("inequalities_b", res.ineq_b);
            line("inequalities_c", res.ineq_c);
            line("appendix_w", res.appendix_w);
            line("appendix_f", res.appendix_f);
            out << "result=" << (res.ok() ? "ok" : "fail") << "\n";
            return res.ok() ? EXIT_OK : EXIT_VIOLATED;
        }
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    }
    err << "error: no subcommand\n";
    return EXIT_USAGE;
}

}  // namespace grkit::cli
