#include "tuttex/cli.hpp"

#include "tuttex/corpus.hpp"
#include "tuttex/errors.hpp"
#include "tuttex/extremes.hpp"
#include "tuttex/graph_io.hpp"
#include "tuttex/json_out.hpp"
#include "tuttex/plane.hpp"
#include "tuttex/specialize.hpp"
#include "tuttex/structure.hpp"
#include "tuttex/tutte.hpp"
#include "tuttex/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>

namespace tuttex::cli {

namespace {

Multigraph load_graph(const std::string& path) { return load_graph_file(path).graph; }

PlaneGraph load_plane_graph(const std::string& path) {
    auto parsed = load_graph_file(path);
    if (!parsed.rotations)
        throw precondition_error("this command needs rotation lines (\"r V: ...\") in " + path);
    return make_plane_graph(std::move(parsed.graph), std::move(*parsed.rotations));
}

const char* status_name(CheckResult::Status s) {
    switch (s) {
        case CheckResult::Status::pass: return "pass";
        case CheckResult::Status::skipped: return "skip";
        default: return "FAIL";
    }
}

void print_verify(const VerifyReport& report, std::ostream& out) {
    for (const auto& c : report.checks) {
        out << "[" << status_name(c.status) << "] " << c.name;
        if (!c.detail.empty()) out << " (" << c.detail << ")";
        out << "\n";
    }
}

int run_tutte(const Multigraph& g, bool json, const Caps& caps, std::ostream& out) {
    std::vector<TutteResult> results;
    results.push_back(timed_tutte(g, "delcon"));
    std::vector<std::string> skipped;
    for (const char* method : {"subset", "convolution"}) {
        try {
            results.push_back(timed_tutte(g, method, caps.subset));
        } catch (const cap_error&) {
            skipped.push_back(method);
        }
    }
    bool agree = true;
    for (const auto& r : results) agree = agree && r.poly == results.front().poly;

    if (json) {
        nlohmann::json methods = nlohmann::json::array();
        for (const auto& r : results)
            methods.push_back({{"method", r.method},
                               {"seconds", r.elapsed.count()},
                               {"poly", to_json(r.poly)}});
        nlohmann::json doc = {{"canonical", results.front().poly.canonical_string()},
                              {"methods", methods},
                              {"skipped", skipped},
                              {"agree", agree}};
        out << doc.dump(2) << "\n";
    } else {
        out << "T(G) = " << results.front().poly.canonical_string() << "\n";
        for (const auto& r : results)
            out << "  method " << r.method << ": " << r.elapsed.count() << "s\n";
        for (const auto& method : skipped) out << "  method " << method << ": skipped (cap)\n";
        out << "methods agree: " << (agree ? "ok" : "MISMATCH") << "\n";
    }
    return agree ? 0 : 1;
}

int run_coeffs(const Multigraph& g, bool json, std::ostream& out) {
    auto report = verify_extremes(g);
    if (json) {
        out << to_json(report).dump(2) << "\n";
    } else {
        for (const auto& e : report.entries) {
            out << e.name << " at (" << e.i << "," << e.j << "): ";
            if (!e.present) {
                out << "absent\n";
                continue;
            }
            out << "formula " << (e.formula ? std::to_string(*e.formula) : std::string("-"))
                << ", oracle " << e.oracle.str() << ", "
                << (e.match ? "match" : "MISMATCH") << "\n";
        }
        out << (report.all_match ? "all positions match" : "MISMATCH found") << "\n";
    }
    return report.all_match ? 0 : 1;
}

int run_structure(const Multigraph& g, bool json, std::ostream& out) {
    auto summary = structure_summary(g);
    auto classes = special_classes(g);
    if (json) {
        out << to_json(summary, classes).dump(2) << "\n";
        return 0;
    }
    out << "parallel classes p = " << summary.p << " (nontrivial p* = " << summary.p_star
        << ")\n";
    out << "series classes   s = " << summary.s << " (nontrivial s* = " << summary.s_star
        << ")\n";
    out << "triangles of simplified graph = " << summary.triangles << "\n";
    out << "theta classes = " << summary.theta << ", infinity classes = " << summary.infinity
        << "\n";
    auto print_class = [&](const SpecialClass& c) {
        out << (c.shape.kind == Nullity2Shape::Kind::theta ? "  theta(" : "  infinity(")
            << c.shape.parts[0] << "," << c.shape.parts[1];
        if (c.shape.kind == Nullity2Shape::Kind::theta) out << "," << c.shape.parts[2];
        out << ") edges {";
        for (size_t q = 0; q < c.edges.size(); ++q) out << (q ? "," : "") << c.edges[q];
        out << "}\n";
    };
    for (const auto& c : classes.theta) print_class(c);
    for (const auto& c : classes.infinity) print_class(c);
    return 0;
}

int run_poly_command(const std::string& which, const Multigraph& g, bool json,
                     std::ostream& out) {
    if (which == "jones") {
        auto report = jones(g);
        if (json) {
            out << to_json(report).dump(2) << "\n";
        } else {
            out << "J(G) = " << report.poly.canonical_string() << "\n";
            for (const auto& c : report.formulas) {
                out << "  " << c.name << ": ";
                if (!c.present) {
                    out << "absent\n";
                    continue;
                }
                out << "formula " << c.formula << ", actual " << c.actual.str() << ", "
                    << (c.match ? "match" : "MISMATCH") << "\n";
            }
            out << "sign condition: " << (report.signs_alternate ? "ok" : "VIOLATED") << "\n";
        }
        return report.all_match && report.signs_alternate ? 0 : 1;
    }
    UniPoly poly = which == "chromatic" ? chromatic(g) : flow(g);
    if (json)
        out << to_json(poly).dump(2) << "\n";
    else
        out << (which == "chromatic" ? "P(G) = " : "F(G) = ") << poly.canonical_string() << "\n";
    return 0;
}

int run_dual(const PlaneGraph& pg, bool json, std::ostream& out) {
    auto report = duality_report(pg);
    if (json) {
        out << to_json(report).dump(2) << "\n";
    } else {
        out << "dual graph: n = " << report.dual_graph.g.n << ", edges";
        for (const auto& [u, v] : report.dual_graph.g.edges) out << " (" << u << "," << v << ")";
        out << "\n";
        out << "T(dual)(x,y) = T(primal)(y,x): " << (report.tutte_swap_ok ? "ok" : "MISMATCH")
            << "\n";
        for (const auto& identity : report.identities)
            out << "  " << identity.name << ": " << identity.lhs << " vs " << identity.rhs
                << (identity.ok ? " ok" : " MISMATCH") << "\n";
    }
    return report.all_ok ? 0 : 1;
}

int run_fuzz(int max_n, int max_m, int count, std::uint64_t seed, bool exhaustive,
             const Caps& caps, bool json, std::ostream& out, std::ostream& err) {
    std::vector<Multigraph> graphs = exhaustive ? exhaustive_corpus(max_n, max_m)
                                                : random_corpus(max_n, max_m, count, seed);
    int checked = 0;
    for (const auto& g : graphs) {
        auto report = verify_graph(g, caps);
        ++checked;
        if (!report.ok()) {
            const std::string dump_path = "fuzz-failure.g";
            std::ofstream dump(dump_path);
            dump << write_graph_text(g);
            err << "verification failed on graph " << checked << " (n = " << g.n
                << ", m = " << g.m() << "), written to " << dump_path << "\n";
            print_verify(report, err);
            return 1;
        }
    }
    if (json)
        out << nlohmann::json({{"checked", checked}, {"ok", true}}).dump(2) << "\n";
    else
        out << "checked " << checked << " graphs: all ok\n";
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Tutte polynomial engine with verified coefficient formulas"};
    app.require_subcommand(1);

    bool json = false;
    app.add_flag("--json", json, "emit JSON instead of text");
    Caps caps;
    app.add_option("--subset-cap", caps.subset, "edge cap for 2^m enumerations")
        ->check(CLI::PositiveNumber);
    app.add_option("--special-brute-cap", caps.special_brute,
                   "edge cap for brute-force special classes")
        ->check(CLI::PositiveNumber);
    app.add_option("--bond-lattice-cap", caps.bond_lattice, "vertex cap for the bond lattice")
        ->check(CLI::PositiveNumber);
    app.add_option("--flow-lattice-cap", caps.flow_lattice,
                   "edge cap for the bridgeless-subgraph lattice")
        ->check(CLI::PositiveNumber);
    app.add_option("--coloring-cap", caps.coloring_count, "vertex cap for coloring counts")
        ->check(CLI::PositiveNumber);
    app.add_option("--flow-count-cap", caps.flow_count, "edge cap for flow counts")
        ->check(CLI::PositiveNumber);

    std::string file;
    auto add_file = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "graph file")->required();
    };
    auto* cmd_tutte = app.add_subcommand("tutte", "all three Tutte evaluations");
    add_file(cmd_tutte);
    auto* cmd_coeffs = app.add_subcommand("coeffs", "extreme coefficient formulas vs oracle");
    add_file(cmd_coeffs);
    auto* cmd_structure = app.add_subcommand("structure", "series/parallel/special classes");
    add_file(cmd_structure);
    auto* cmd_chromatic = app.add_subcommand("chromatic", "chromatic polynomial");
    add_file(cmd_chromatic);
    auto* cmd_flow = app.add_subcommand("flow", "flow polynomial");
    add_file(cmd_flow);
    auto* cmd_jones = app.add_subcommand("jones", "jones polynomial and coefficient checks");
    add_file(cmd_jones);
    auto* cmd_dual = app.add_subcommand("dual", "plane dual and duality identities");
    add_file(cmd_dual);
    auto* cmd_verify = app.add_subcommand("verify", "every applicable identity on one graph");
    add_file(cmd_verify);

    auto* cmd_fuzz = app.add_subcommand("fuzz", "verify a generated corpus");
    int max_n = 5, max_m = 9, count = 100;
    std::uint64_t seed = 1;
    bool exhaustive = false;
    cmd_fuzz->add_option("--max-n", max_n, "largest vertex count")->check(CLI::PositiveNumber);
    cmd_fuzz->add_option("--max-m", max_m, "largest edge count")->check(CLI::PositiveNumber);
    cmd_fuzz->add_option("--count", count, "graphs to sample in random mode");
    cmd_fuzz->add_option("--seed", seed, "random mode seed");
    cmd_fuzz->add_flag("--exhaustive", exhaustive, "enumerate all graphs up to the bounds");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_tutte->parsed()) return run_tutte(load_graph(file), json, caps, out);
        if (cmd_coeffs->parsed()) return run_coeffs(load_graph(file), json, out);
        if (cmd_structure->parsed()) return run_structure(load_graph(file), json, out);
        if (cmd_chromatic->parsed())
            return run_poly_command("chromatic", load_graph(file), json, out);
        if (cmd_flow->parsed()) return run_poly_command("flow", load_graph(file), json, out);
        if (cmd_jones->parsed()) return run_poly_command("jones", load_graph(file), json, out);
        if (cmd_dual->parsed()) return run_dual(load_plane_graph(file), json, out);
        if (cmd_verify->parsed()) {
            auto report = verify_graph(load_graph(file), caps);
            if (json)
                out << to_json(report).dump(2) << "\n";
            else
                print_verify(report, out);
            return report.ok() ? 0 : 1;
        }
        if (cmd_fuzz->parsed())
            return run_fuzz(max_n, max_m, count, seed, exhaustive, caps, json, out, err);
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const precondition_error& e) {
        err << "precondition error: " << e.what() << "\n";
        return 2;
    } catch (const cap_error& e) {
        err << "cap error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace tuttex::cli
