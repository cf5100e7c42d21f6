#include "tuttex/tutte.hpp"

#include "tuttex/errors.hpp"
#include "tuttex/unionfind.hpp"

#include <bit>
#include <cstdint>
#include <string>

namespace tuttex {

namespace {

BiPoly delcon_rec(Multigraph g) {
    int x_power = 0, y_power = 0;

    // Strip loops and bridges until a proper pivot exists.
    for (;;) {
        std::vector<int> loops;
        for (int e = 0; e < g.m(); ++e)
            if (g.is_loop(e)) loops.push_back(e);
        if (!loops.empty()) {
            y_power += static_cast<int>(loops.size());
            g = delete_edges(g, loops).graph;
        }
        auto br = bridges(g);
        if (loops.empty() && br.empty()) break;
        if (!br.empty()) {
            x_power += static_cast<int>(br.size());
            g = contract_edges(g, br).graph;
        }
    }

    BiPoly factor = BiPoly::monomial(x_power, y_power);
    if (g.m() == 0) return factor;

    // Lowest-id edge is neither a loop nor a bridge here.
    int pivot = 0;
    BiPoly del = delcon_rec(delete_edges(g, {pivot}).graph);
    BiPoly con = delcon_rec(contract_edges(g, {pivot}).graph);
    return factor * (del + con);
}

} // namespace

BiPoly tutte_delcon(const Multigraph& g) { return delcon_rec(g); }

BiPoly tutte_subset(const Multigraph& g, int cap) {
    const int m = g.m();
    if (m > cap)
        throw cap_error("subset expansion refused: m = " + std::to_string(m) + " exceeds cap " +
                        std::to_string(cap));
    const int n = g.n;
    const int rank_e = stats(g).rank;

    // Tally subsets by (rank, nullity); 2^m fits in 64 bits for m <= cap.
    std::vector<std::vector<std::uint64_t>> tally(rank_e + 1,
                                                  std::vector<std::uint64_t>(m + 1, 0));
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
        UnionFind uf(n);
        for (int e = 0; e < m; ++e)
            if (mask >> e & 1) uf.unite(g.edges[e].first, g.edges[e].second);
        int size = std::popcount(mask);
        int rank = n - uf.groups;
        ++tally[rank][size - rank];
    }

    BiPoly xm1 = BiPoly::var_x() - BiPoly::constant(1);
    BiPoly ym1 = BiPoly::var_y() - BiPoly::constant(1);
    std::vector<BiPoly> xpow(rank_e + 1), ypow(m + 1);
    for (int r = 0; r <= rank_e; ++r) xpow[r] = pow(xm1, r);
    for (int q = 0; q <= m; ++q) ypow[q] = pow(ym1, q);

    BiPoly total;
    for (int r = 0; r <= rank_e; ++r)
        for (int q = 0; q <= m; ++q)
            if (tally[r][q])
                total += BiPoly::constant(Int(tally[r][q])) * xpow[rank_e - r] * ypow[q];
    return total;
}

BiPoly tutte_convolution(const Multigraph& g, int cap) {
    const int m = g.m();
    if (m > cap)
        throw cap_error("convolution refused: m = " + std::to_string(m) + " exceeds cap " +
                        std::to_string(cap));

    BiPoly total;
    std::vector<int> ids;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
        ids.clear();
        for (int e = 0; e < m; ++e)
            if (mask >> e & 1) ids.push_back(e);

        // Zero factors are skipped up front: a loop in G/A kills T(G/A; x, 0)
        // and a bridge in G|A kills T(G|A; 0, y).
        auto contracted = contract_edges(g, ids).graph;
        if (has_loops(contracted)) continue;
        auto restricted = restrict_to(g, ids).graph;
        if (!bridges(restricted).empty()) continue;

        BiPoly t_contracted = tutte_delcon(contracted);
        BiPoly t_restricted = tutte_delcon(restricted);
        BiPoly cx, ry;
        for (const auto& [k, c] : t_contracted.terms())
            if (k.second == 0) cx += BiPoly::monomial(k.first, 0, c);
        for (const auto& [k, c] : t_restricted.terms())
            if (k.first == 0) ry += BiPoly::monomial(0, k.second, c);
        total += cx * ry;
    }
    return total;
}

TutteResult timed_tutte(const Multigraph& g, const std::string& method, int cap) {
    auto start = std::chrono::steady_clock::now();
    BiPoly poly;
    if (method == "delcon")
        poly = tutte_delcon(g);
    else if (method == "subset")
        poly = tutte_subset(g, cap);
    else if (method == "convolution")
        poly = tutte_convolution(g, cap);
    else
        throw precondition_error("unknown tutte method: " + method);
    return TutteResult{std::move(poly), method, std::chrono::steady_clock::now() - start};
}

std::vector<WindowEntry> extreme_window(const Multigraph& g) {
    if (!is_connected(g) || has_loops(g) || !is_bridgeless(g))
        throw precondition_error("extreme window requires a connected bridgeless loopless graph");
    const int n = g.n, m = g.m();
    BiPoly t = tutte_delcon(g);

    auto entry = [&](const std::string& name, int i, int j) {
        WindowEntry w{name, i, j, i >= 0 && j >= 0, Int(0)};
        if (w.present) w.value = t.coefficient(i, j);
        return w;
    };
    return {
        entry("t(0,m-n+1)", 0, m - n + 1), entry("t(0,m-n)", 0, m - n),
        entry("t(0,m-n-1)", 0, m - n - 1), entry("t(1,m-n)", 1, m - n),
        entry("t(1,m-n-1)", 1, m - n - 1), entry("t(n-1,0)", n - 1, 0),
        entry("t(n-2,0)", n - 2, 0),       entry("t(n-3,0)", n - 3, 0),
        entry("t(n-2,1)", n - 2, 1),       entry("t(n-3,1)", n - 3, 1),
    };
}

Int spanning_tree_count(const Multigraph& g, int cap) {
    if (!is_connected(g)) throw precondition_error("spanning_tree_count requires a connected graph");
    const int m = g.m();
    if (m > cap)
        throw cap_error("spanning tree enumeration refused: m exceeds cap");
    const int n = g.n;
    Int count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
        if (std::popcount(mask) != n - 1) continue;
        UnionFind uf(n);
        bool acyclic = true;
        for (int e = 0; e < m && acyclic; ++e)
            if (mask >> e & 1) acyclic = uf.unite(g.edges[e].first, g.edges[e].second);
        if (acyclic && uf.groups == 1) ++count;
    }
    return count;
}

} // namespace tuttex
