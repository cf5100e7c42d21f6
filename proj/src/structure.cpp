#include "tuttex/structure.hpp"

#include "tuttex/errors.hpp"
#include "tuttex/unionfind.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace tuttex {

int EdgePartition::nontrivial_count() const {
    int k = 0;
    for (const auto& b : blocks)
        if (b.size() >= 2) ++k;
    return k;
}

std::vector<int> EdgePartition::block_of_edge(int m) const {
    std::vector<int> owner(m, -1);
    for (size_t b = 0; b < blocks.size(); ++b)
        for (int e : blocks[b]) owner[e] = static_cast<int>(b);
    return owner;
}

EdgePartition parallel_classes(const Multigraph& g) {
    if (has_loops(g)) throw precondition_error("parallel classes require a loopless graph");
    std::map<std::pair<int, int>, std::vector<int>> groups;
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges[e];
        groups[{std::min(u, v), std::max(u, v)}].push_back(e);
    }
    EdgePartition part;
    part.kind = EdgePartition::Kind::parallel;
    for (auto& [key, block] : groups) part.blocks.push_back(std::move(block));
    return part;
}

EdgePartition series_classes(const Multigraph& g) {
    if (has_loops(g)) throw precondition_error("series classes require a loopless graph");
    if (!is_bridgeless(g)) throw precondition_error("series classes require a bridgeless graph");
    const int m = g.m();
    const int base = components(g).count;

    // e ~ f iff removing both disconnects something; union the pairs.
    UnionFind uf(m);
    for (int e = 0; e < m; ++e) {
        for (int f = e + 1; f < m; ++f) {
            UnionFind comp(g.n);
            for (int q = 0; q < m; ++q)
                if (q != e && q != f) comp.unite(g.edges[q].first, g.edges[q].second);
            if (comp.groups > base) uf.unite(e, f);
        }
    }

    std::map<int, std::vector<int>> groups;
    for (int e = 0; e < m; ++e) groups[uf.find(e)].push_back(e);
    EdgePartition part;
    part.kind = EdgePartition::Kind::series;
    for (auto& [root, block] : groups) part.blocks.push_back(std::move(block));
    std::sort(part.blocks.begin(), part.blocks.end());

    // The removal criterion must hold for every block.
    for (const auto& block : part.blocks) {
        auto rest = delete_edges(g, block).graph;
        if (components(rest).count - base != static_cast<int>(block.size()) - 1 ||
            !is_bridgeless(rest))
            throw std::logic_error("series class criterion violated");
    }
    return part;
}

SimplifyResult simplify(const Multigraph& g) {
    auto part = parallel_classes(g);
    SimplifyResult out;
    out.graph.n = g.n;
    for (const auto& block : part.blocks) {
        out.class_edge.push_back(out.graph.m());
        out.graph.edges.push_back(g.edges[block.front()]);
    }
    return out;
}

long long triangle_count(const Multigraph& g) {
    if (has_loops(g)) throw precondition_error("triangle count requires a simple graph");
    std::vector<std::vector<char>> adj(g.n, std::vector<char>(g.n, 0));
    for (const auto& [u, v] : g.edges) {
        if (adj[u][v]) throw precondition_error("triangle count requires a simple graph");
        adj[u][v] = adj[v][u] = 1;
    }
    long long count = 0;
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b)
            for (int c = b + 1; c < g.n; ++c)
                if (adj[a][b] && adj[b][c] && adj[a][c]) ++count;
    return count;
}

namespace {

void require_special_input(const Multigraph& g) {
    if (!is_connected(g) || has_loops(g) || !is_bridgeless(g))
        throw precondition_error(
            "special classes require a connected bridgeless loopless graph");
}

// Contract each component of G-C to a single vertex, i.e. contract E \ C.
Multigraph contract_complement(const Multigraph& g, const std::vector<int>& c_edges) {
    std::vector<char> in_c(g.m(), 0);
    for (int e : c_edges) in_c[e] = 1;
    std::vector<int> rest;
    for (int e = 0; e < g.m(); ++e)
        if (!in_c[e]) rest.push_back(e);
    auto contracted = contract_edges(g, rest);
    // Contraction drops exactly E \ C, so the result's edges are C in order.
    return contracted.graph;
}

bool classify_candidate(const Multigraph& g, std::vector<int> c_edges, SpecialClass& out) {
    auto rest = delete_edges(g, c_edges).graph;
    if (components(rest).count != static_cast<int>(c_edges.size()) - 1) return false;
    if (!is_bridgeless(rest)) return false;
    auto shape = classify_nullity2_shape(contract_complement(g, c_edges));
    if (shape.kind == Nullity2Shape::Kind::other) return false;
    std::sort(c_edges.begin(), c_edges.end());
    out.edges = std::move(c_edges);
    out.shape = shape;
    return true;
}

} // namespace

SpecialClasses special_classes(const Multigraph& g) {
    require_special_input(g);
    auto series = series_classes(g);

    std::map<std::vector<int>, SpecialClass> found;
    for (size_t a = 0; a < series.blocks.size(); ++a) {
        for (size_t b = a + 1; b < series.blocks.size(); ++b) {
            std::vector<int> cand = series.blocks[a];
            cand.insert(cand.end(), series.blocks[b].begin(), series.blocks[b].end());

            // Close under bridge absorption: removing two series classes may
            // leave bridges; they belong to the candidate class.
            for (;;) {
                auto rest = delete_edges(g, cand);
                std::vector<int> br = bridges(rest.graph);
                if (br.empty()) break;
                std::vector<int> back(g.m(), -1);
                for (int e = 0; e < g.m(); ++e)
                    if (rest.edge_map[e] != -1) back[rest.edge_map[e]] = e;
                for (int e : br) cand.push_back(back[e]);
            }

            SpecialClass sc;
            if (!classify_candidate(g, cand, sc)) continue; // overshoot past rank 2
            auto it = found.find(sc.edges);
            if (it == found.end()) {
                sc.pair_hits = 1;
                found.emplace(sc.edges, std::move(sc));
            } else {
                ++it->second.pair_hits;
            }
        }
    }

    SpecialClasses out;
    for (auto& [edges, sc] : found) {
        if (sc.shape.kind == Nullity2Shape::Kind::theta)
            out.theta.push_back(std::move(sc));
        else
            out.infinity.push_back(std::move(sc));
    }
    return out;
}

SpecialClasses special_classes_bruteforce(const Multigraph& g, int cap) {
    require_special_input(g);
    const int m = g.m();
    if (m > cap)
        throw cap_error("special class brute force refused: m = " + std::to_string(m) +
                        " exceeds cap " + std::to_string(cap));

    SpecialClasses out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << m); ++mask) {
        int size = std::popcount(mask);
        // c(G-C) = |C| - 1 needs at least two removed edges.
        if (size < 2) continue;
        UnionFind uf(g.n);
        for (int e = 0; e < m; ++e)
            if (!(mask >> e & 1)) uf.unite(g.edges[e].first, g.edges[e].second);
        if (uf.groups != size - 1) continue;

        std::vector<int> c_edges;
        for (int e = 0; e < m; ++e)
            if (mask >> e & 1) c_edges.push_back(e);
        SpecialClass sc;
        if (!classify_candidate(g, std::move(c_edges), sc)) continue;
        if (sc.shape.kind == Nullity2Shape::Kind::theta)
            out.theta.push_back(std::move(sc));
        else
            out.infinity.push_back(std::move(sc));
    }
    return out;
}

StructureSummary structure_summary(const Multigraph& g) {
    auto par = parallel_classes(g);
    auto ser = series_classes(g);
    auto special = special_classes(g);
    return StructureSummary{
        par.count(),
        par.nontrivial_count(),
        ser.count(),
        ser.nontrivial_count(),
        triangle_count(simplify(g).graph),
        special.theta_count(),
        special.infinity_count(),
    };
}

} // namespace tuttex
