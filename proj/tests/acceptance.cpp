// Acceptance suite: one criterion per run block, one pass/fail line each.
// Exit code is the number of failed criteria.

#include "tuttex/corpus.hpp"
#include "tuttex/extremes.hpp"
#include "tuttex/plane.hpp"
#include "tuttex/specialize.hpp"
#include "tuttex/structure.hpp"
#include "tuttex/tutte.hpp"
#include "tuttex/verify.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

using namespace tuttex;

namespace {

constexpr std::uint64_t kSeed = 20240901;

struct Corpus {
    std::vector<Multigraph> graphs; // exhaustive (n<=5, m<=9) then 200 random (m<=12)
    size_t exhaustive_count = 0;
};

Corpus build_corpus() {
    Corpus corpus;
    corpus.graphs = exhaustive_corpus(5, 9);
    corpus.exhaustive_count = corpus.graphs.size();
    for (auto& g : random_corpus(7, 12, 200, kSeed)) corpus.graphs.push_back(std::move(g));
    return corpus;
}

bool criterion_method_agreement(const Corpus& corpus, std::ostream& out) {
    auto start = std::chrono::steady_clock::now();
    size_t checked = 0;
    for (const auto& g : corpus.graphs) {
        auto t = tutte_delcon(g);
        if (tutte_subset(g) != t || tutte_convolution(g) != t) {
            out << "    disagreement on graph with n = " << g.n << ", m = " << g.m() << "\n";
            return false;
        }
        ++checked;
    }
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    out << "    " << checked << " graphs (" << corpus.exhaustive_count << " exhaustive + "
        << (checked - corpus.exhaustive_count) << " random), " << elapsed.count() << "s\n";
    return elapsed.count() < 120.0;
}

bool criterion_first_four_formulas(const Corpus& corpus, std::ostream& out) {
    for (const auto& g : corpus.graphs) {
        auto report = verify_extremes(g);
        for (int idx : {0, 1, 2, 3, 5, 6, 7, 8}) {
            if (!report.entries[idx].match) {
                out << "    mismatch at " << report.entries[idx].name << " on n = " << g.n
                    << ", m = " << g.m() << "\n";
                return false;
            }
        }
    }
    return true;
}

bool criterion_fifth_formulas(const Corpus& corpus, std::ostream& out) {
    for (const auto& g : corpus.graphs) {
        auto report = verify_extremes(g);
        for (int idx : {4, 9}) {
            if (!report.entries[idx].match) {
                out << "    mismatch at " << report.entries[idx].name << " on n = " << g.n
                    << ", m = " << g.m() << "\n";
                return false;
            }
        }
    }

    // Worked examples for the adopted (literal) reading of the fifth formulas.
    auto show = [&](const char* name, const Multigraph& g) {
        auto report = verify_extremes(g);
        const auto& series5 = report.entries[4];
        const auto& parallel5 = report.entries[9];
        out << "    " << name << ": " << series5.name << " formula "
            << (series5.formula ? std::to_string(*series5.formula) : std::string("absent"))
            << " oracle " << (series5.present ? series5.oracle.str() : std::string("absent"))
            << "; " << parallel5.name << " formula "
            << (parallel5.formula ? std::to_string(*parallel5.formula) : std::string("absent"))
            << " oracle " << (parallel5.present ? parallel5.oracle.str() : std::string("absent"))
            << "\n";
    };
    show("K4", complete_graph(4));
    show("theta(2,2,2)", theta_graph(2, 2, 2));
    return true;
}

bool criterion_special_classes(const Corpus& corpus, std::ostream& out) {
    for (const auto& g : corpus.graphs) {
        auto fast = special_classes(g);
        long long s = series_classes(g).count();
        if (fast.infinity_count() != s * (s - 1) / 2 - 3 * fast.theta_count()) {
            out << "    infinity identity fails on n = " << g.n << ", m = " << g.m() << "\n";
            return false;
        }
        if (g.m() <= 14) {
            auto brute = special_classes_bruteforce(g);
            auto key = [](const SpecialClasses& sc) {
                std::vector<std::vector<int>> sets;
                for (const auto& c : sc.theta) sets.push_back(c.edges);
                for (const auto& c : sc.infinity) sets.push_back(c.edges);
                std::sort(sets.begin(), sets.end());
                return sets;
            };
            if (key(fast) != key(brute)) {
                out << "    enumerations disagree on n = " << g.n << ", m = " << g.m() << "\n";
                return false;
            }
        }
    }
    return true;
}

bool criterion_specialization_equivalences(const Corpus& corpus, std::ostream& out) {
    size_t lattice_checks = 0, count_checks = 0;
    for (const auto& g : corpus.graphs) {
        auto chrom = chromatic(g);
        auto fl = flow(g);
        if (g.n <= 6) {
            if (chromatic_via_lattice(g) != chrom) {
                out << "    bond lattice disagrees on n = " << g.n << ", m = " << g.m() << "\n";
                return false;
            }
            ++lattice_checks;
        }
        if (g.m() <= 10) {
            if (flow_via_lattice(g) != fl) {
                out << "    flow lattice disagrees on n = " << g.n << ", m = " << g.m() << "\n";
                return false;
            }
            ++lattice_checks;
        }
        if (g.n <= 6) {
            for (int colors = 1; colors <= 3; ++colors)
                if (chrom.evaluate(colors) != proper_coloring_count(g, colors)) {
                    out << "    coloring count disagrees at " << colors << " colors\n";
                    return false;
                }
            ++count_checks;
        }
        if (g.m() <= 10) {
            for (int modulus = 2; modulus <= 3; ++modulus)
                if (fl.evaluate(modulus) != nowhere_zero_flow_count(g, modulus)) {
                    out << "    flow count disagrees at modulus " << modulus << "\n";
                    return false;
                }
            ++count_checks;
        }
    }
    out << "    " << lattice_checks << " lattice equivalences, " << count_checks
        << " graphs with enumeration counts\n";
    return true;
}

bool criterion_jones_and_leading(const Corpus& corpus, std::ostream& out) {
    for (const auto& g : corpus.graphs) {
        auto rep = jones(g);
        if (!rep.all_match || !rep.signs_alternate) {
            out << "    jones failure on n = " << g.n << ", m = " << g.m() << "\n";
            return false;
        }
        if (!chromatic_leading3(g).match || !flow_leading3(g).match) {
            out << "    leading coefficients fail on n = " << g.n << ", m = " << g.m() << "\n";
            return false;
        }
    }
    return true;
}

bool criterion_duality(std::ostream& out) {
    std::vector<std::pair<std::string, PlaneGraph>> plane_corpus;
    for (int n = 3; n <= 6; ++n)
        plane_corpus.emplace_back("C" + std::to_string(n), convex_cycle_embedding(n));
    for (int k = 2; k <= 6; ++k)
        plane_corpus.emplace_back("D" + std::to_string(k), dipole_embedding(k));
    plane_corpus.emplace_back("K4", k4_embedding());
    plane_corpus.emplace_back("cube", cube_embedding());
    for (int k1 = 1; k1 <= 3; ++k1)
        for (int k2 = k1; k2 <= 3; ++k2)
            for (int k3 = k2; k3 <= 3; ++k3)
                plane_corpus.emplace_back("theta(" + std::to_string(k1) + "," +
                                              std::to_string(k2) + "," + std::to_string(k3) +
                                              ")",
                                          theta_embedding(k1, k2, k3));

    for (const auto& [name, pg] : plane_corpus) {
        auto report = duality_report(pg);
        if (!report.all_ok) {
            out << "    duality failure on " << name << "\n";
            for (const auto& identity : report.identities)
                if (!identity.ok)
                    out << "      " << identity.name << ": " << identity.lhs << " vs "
                        << identity.rhs << "\n";
            if (!report.tutte_swap_ok) out << "      coefficient swap fails\n";
            return false;
        }
        if (tutte_delcon(dual(dual(pg)).g) != tutte_delcon(pg.g)) {
            out << "    double dual changes the Tutte polynomial on " << name << "\n";
            return false;
        }
    }
    out << "    " << plane_corpus.size() << " plane graphs checked\n";
    return true;
}

bool criterion_spot_checks(std::ostream& out) {
    BiPoly k4;
    k4 += BiPoly::monomial(3, 0);
    k4 += BiPoly::monomial(2, 0, 3);
    k4 += BiPoly::monomial(1, 0, 2);
    k4 += BiPoly::monomial(1, 1, 4);
    k4 += BiPoly::monomial(0, 1, 2);
    k4 += BiPoly::monomial(0, 2, 3);
    k4 += BiPoly::monomial(0, 3, 1);
    if (tutte_delcon(complete_graph(4)) != k4) {
        out << "    T(K4) mismatch\n";
        return false;
    }

    for (int n = 2; n <= 6; ++n) {
        BiPoly expected = BiPoly::var_y();
        for (int i = 1; i < n; ++i) expected += BiPoly::monomial(i, 0);
        if (tutte_delcon(cycle_graph(n)) != expected) {
            out << "    T(C" << n << ") mismatch\n";
            return false;
        }
    }

    if (jones(dipole_graph(2)).poly.canonical_string() != "t^2 + 1") {
        out << "    J(D2) mismatch\n";
        return false;
    }

    UniPoly chrom_k4("λ");
    chrom_k4 += UniPoly::monomial(4, 1, "λ");
    chrom_k4 += UniPoly::monomial(3, -6, "λ");
    chrom_k4 += UniPoly::monomial(2, 11, "λ");
    chrom_k4 += UniPoly::monomial(1, -6, "λ");
    if (chromatic(complete_graph(4)) != chrom_k4) {
        out << "    P(K4) mismatch\n";
        return false;
    }
    return true;
}

} // namespace

int main() {
    auto corpus = build_corpus();

    struct Criterion {
        int id;
        std::string title;
        std::function<bool(std::ostream&)> run;
    };
    std::vector<Criterion> criteria = {
        {1, "three Tutte methods agree on the corpus",
         [&](std::ostream& o) { return criterion_method_agreement(corpus, o); }},
        {2, "first four coefficient formulas match the oracle on both sides",
         [&](std::ostream& o) { return criterion_first_four_formulas(corpus, o); }},
        {3, "fifth coefficient formulas match the oracle (literal reading)",
         [&](std::ostream& o) { return criterion_fifth_formulas(corpus, o); }},
        {4, "special class identity and enumeration equivalence",
         [&](std::ostream& o) { return criterion_special_classes(corpus, o); }},
        {5, "specialization equivalences (lattice sums and enumeration counts)",
         [&](std::ostream& o) { return criterion_specialization_equivalences(corpus, o); }},
        {6, "jones coefficients, sign condition, leading chromatic/flow coefficients",
         [&](std::ostream& o) { return criterion_jones_and_leading(corpus, o); }},
        {7, "plane duality: coefficient swap, quantity identities, double dual",
         [&](std::ostream& o) { return criterion_duality(o); }},
        {8, "known-value spot checks",
         [&](std::ostream& o) { return criterion_spot_checks(o); }},
    };

    int failures = 0;
    for (auto& criterion : criteria) {
        std::ostringstream detail;
        bool ok = false;
        try {
            ok = criterion.run(detail);
        } catch (const std::exception& e) {
            detail << "    exception: " << e.what() << "\n";
        }
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion.id << ": "
                  << criterion.title << "\n"
                  << detail.str();
        if (!ok) ++failures;
    }
    std::cout << (failures == 0 ? "all criteria passed" : "criteria failed") << "\n";
    return failures;
}
