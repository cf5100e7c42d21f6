#include "tuttex/verify.hpp"

#include "tuttex/errors.hpp"
#include "tuttex/extremes.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

namespace tuttex {

namespace {

long long choose2(long long k) { return k * (k - 1) / 2; }

struct Runner {
    VerifyReport& report;

    void run(const std::string& name, const std::function<std::string()>& check) {
        CheckResult r{name, CheckResult::Status::pass, ""};
        try {
            r.detail = check();
            if (!r.detail.empty()) r.status = CheckResult::Status::fail;
        } catch (const cap_error& e) {
            r.status = CheckResult::Status::skipped;
            r.detail = e.what();
        } catch (const std::exception& e) {
            r.status = CheckResult::Status::fail;
            r.detail = e.what();
        }
        report.checks.push_back(std::move(r));
    }
};

std::string poly_mismatch(const char* a, const char* b, const BiPoly& pa, const BiPoly& pb) {
    std::ostringstream os;
    os << a << " != " << b << ": " << pa.canonical_string() << " vs " << pb.canonical_string();
    return os.str();
}

} // namespace

VerifyReport verify_graph(const Multigraph& g, const Caps& caps) {
    if (!is_connected(g) || has_loops(g) || !is_bridgeless(g))
        throw precondition_error("verify requires a connected bridgeless loopless graph");

    VerifyReport report;
    Runner runner{report};
    const int m = g.m();

    const BiPoly t = tutte_delcon(g);

    runner.run("tutte: subset oracle agrees", [&]() -> std::string {
        BiPoly sub = tutte_subset(g, caps.subset);
        return sub == t ? "" : poly_mismatch("subset", "delcon", sub, t);
    });

    runner.run("tutte: convolution identity agrees", [&]() -> std::string {
        BiPoly conv = tutte_convolution(g, caps.subset);
        return conv == t ? "" : poly_mismatch("convolution", "delcon", conv, t);
    });

    runner.run("tutte: T(1,1) counts spanning trees", [&]() -> std::string {
        Int trees = spanning_tree_count(g, caps.subset);
        Int value = t.evaluate(1, 1);
        if (trees == value) return "";
        return "T(1,1) = " + value.str() + " but enumeration finds " + trees.str();
    });

    runner.run("tutte: T(2,2) = 2^m", [&]() -> std::string {
        Int expected = Int(1) << m;
        Int value = t.evaluate(2, 2);
        return value == expected ? "" : "T(2,2) = " + value.str() + ", expected " + expected.str();
    });

    runner.run("tutte: coefficients nonnegative", [&]() -> std::string {
        for (const auto& [key, c] : t.terms())
            if (c < 0) return "negative coefficient at (" + std::to_string(key.first) + "," +
                              std::to_string(key.second) + ")";
        return "";
    });

    runner.run("tutte: beta invariant t01 = t10", [&]() -> std::string {
        if (m <= 1) return "";
        return t.coefficient(0, 1) == t.coefficient(1, 0) ? "" : "t01 != t10";
    });

    runner.run("partitions: parallel and series classes cover E", [&]() -> std::string {
        for (auto part : {parallel_classes(g), series_classes(g)}) {
            std::vector<char> hit(m, 0);
            for (const auto& block : part.blocks) {
                if (block.empty()) return "empty block";
                for (int e : block) {
                    if (e < 0 || e >= m || hit[e]) return "blocks are not a partition";
                    hit[e] = 1;
                }
            }
            if (std::count(hit.begin(), hit.end(), char(1)) != m)
                return "blocks do not cover the edge set";
        }
        return "";
    });

    runner.run("series relation is transitive", [&]() -> std::string {
        // Pairwise relation: e ~ f iff deleting both disconnects something.
        auto related = [&](int e, int f) {
            auto rest = delete_edges(g, {e, f}).graph;
            return components(rest).count > components(g).count;
        };
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b)
                for (int c = b + 1; c < m; ++c) {
                    int rel = related(a, b) + related(a, c) + related(b, c);
                    if (rel == 2) return "series relation not transitive on a triple";
                }
        return "";
    });

    runner.run("special classes: closure-join equals brute force", [&]() -> std::string {
        if (m > caps.special_brute) throw cap_error("m exceeds the brute-force cap");
        auto fast = special_classes(g);
        auto brute = special_classes_bruteforce(g, caps.special_brute);
        auto key = [](const SpecialClasses& sc) {
            std::vector<std::pair<std::vector<int>, Nullity2Shape>> all;
            for (const auto& c : sc.theta) all.emplace_back(c.edges, c.shape);
            for (const auto& c : sc.infinity) all.emplace_back(c.edges, c.shape);
            std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
                return x.first < y.first;
            });
            return all;
        };
        if (key(fast) != key(brute)) return "enumerations disagree";
        return "";
    });

    runner.run("special classes: pair multiplicities", [&]() -> std::string {
        auto sc = special_classes(g);
        for (const auto& c : sc.theta)
            if (c.pair_hits != 3)
                return "theta class reached by " + std::to_string(c.pair_hits) + " pairs";
        for (const auto& c : sc.infinity)
            if (c.pair_hits != 1)
                return "infinity class reached by " + std::to_string(c.pair_hits) + " pairs";
        return "";
    });

    runner.run("special classes: component counts match parts", [&]() -> std::string {
        auto sc = special_classes(g);
        auto check = [&](const SpecialClass& c, int parts_sum) -> bool {
            auto rest = delete_edges(g, c.edges).graph;
            return components(rest).count == parts_sum - 1;
        };
        for (const auto& c : sc.theta)
            if (!check(c, c.shape.parts[0] + c.shape.parts[1] + c.shape.parts[2]))
                return "theta class with wrong component count";
        for (const auto& c : sc.infinity)
            if (!check(c, c.shape.parts[0] + c.shape.parts[1]))
                return "infinity class with wrong component count";
        return "";
    });

    runner.run("identity: infinity = C(s,2) - 3*theta", [&]() -> std::string {
        auto sc = special_classes(g);
        long long s = series_classes(g).count();
        long long expected = choose2(s) - 3 * sc.theta_count();
        if (sc.infinity_count() == expected) return "";
        return "infinity = " + std::to_string(sc.infinity_count()) + ", C(s,2) - 3*theta = " +
               std::to_string(expected);
    });

    std::optional<CoeffReport> coeffs;
    std::string coeffs_error;
    try {
        coeffs = verify_extremes(g);
    } catch (const std::exception& e) {
        coeffs_error = e.what();
    }
    auto coeff_range = [&](int from, int to) -> std::string {
        if (!coeffs) return coeffs_error;
        for (int idx = from; idx < to; ++idx)
            if (!coeffs->entries[idx].match) return coeffs->entries[idx].name + " mismatch";
        return "";
    };

    runner.run("series-side coefficient formulas (first four)",
               [&] { return coeff_range(0, 4); });
    runner.run("series-side fifth coefficient formula", [&] { return coeff_range(4, 5); });
    runner.run("parallel-side coefficient formulas (first four)",
               [&] { return coeff_range(5, 9); });
    runner.run("parallel-side fifth coefficient formula", [&] { return coeff_range(9, 10); });

    const UniPoly chrom = chromatic(g);
    const UniPoly fl = flow(g);

    runner.run("chromatic equals bond-lattice sum", [&]() -> std::string {
        UniPoly viaLattice = chromatic_via_lattice(g, caps.bond_lattice);
        return viaLattice == chrom ? "" : "lattice sum disagrees with the specialization";
    });

    runner.run("bond lattice mobius recursion", [&]() -> std::string {
        if (g.n > caps.bond_lattice) throw cap_error("n exceeds the bond lattice cap");
        auto lat = bond_lattice(simplify(g).graph);
        return lat.lattice.mobius_recursion_holds() ? "" : "mobius recursion violated";
    });

    runner.run("flow equals bridgeless-subgraph lattice sum", [&]() -> std::string {
        UniPoly viaLattice = flow_via_lattice(g, caps.flow_lattice);
        return viaLattice == fl ? "" : "lattice sum disagrees with the specialization";
    });

    runner.run("flow lattice mobius recursion", [&]() -> std::string {
        if (m > caps.flow_lattice) throw cap_error("m exceeds the flow lattice cap");
        auto flat = bridgeless_subgraph_lattice(g);
        return flat.lattice.mobius_recursion_holds() ? "" : "mobius recursion violated";
    });

    runner.run("chromatic counts proper colorings (1..3 colors)", [&]() -> std::string {
        if (g.n > caps.coloring_count) throw cap_error("n exceeds the coloring count cap");
        for (int colors = 1; colors <= 3; ++colors) {
            Int expected = proper_coloring_count(g, colors, caps.coloring_count);
            if (chrom.evaluate(colors) != expected)
                return "P(" + std::to_string(colors) + ") = " + chrom.evaluate(colors).str() +
                       " but enumeration finds " + expected.str();
        }
        return "";
    });

    runner.run("flow counts nowhere-zero flows (2..3 values)", [&]() -> std::string {
        if (m > caps.flow_count) throw cap_error("m exceeds the flow count cap");
        for (int modulus = 2; modulus <= 3; ++modulus) {
            Int expected = nowhere_zero_flow_count(g, modulus, caps.flow_count);
            if (fl.evaluate(modulus) != expected)
                return "F(" + std::to_string(modulus) + ") = " + fl.evaluate(modulus).str() +
                       " but enumeration finds " + expected.str();
        }
        return "";
    });

    runner.run("chromatic leading coefficients", [&]() -> std::string {
        return chromatic_leading3(g).match ? "" : "leading coefficients disagree";
    });

    runner.run("flow leading coefficients", [&]() -> std::string {
        return flow_leading3(g).match ? "" : "leading coefficients disagree";
    });

    std::optional<JonesReport> jones_report;
    std::string jones_error;
    try {
        jones_report = jones(g);
    } catch (const std::exception& e) {
        jones_error = e.what();
    }

    runner.run("jones coefficient formulas", [&]() -> std::string {
        if (!jones_report) return jones_error;
        for (const auto& c : jones_report->formulas)
            if (!c.match)
                return c.name + ": formula " + std::to_string(c.formula) + " vs " +
                       c.actual.str();
        return "";
    });

    runner.run("jones sign condition", [&]() -> std::string {
        if (!jones_report) return jones_error;
        return jones_report->signs_alternate ? "" : "(-1)^(m-i) b_i < 0 for some i";
    });

    return report;
}

} // namespace tuttex
