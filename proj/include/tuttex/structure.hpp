#ifndef TUTTEX_STRUCTURE_HPP
#define TUTTEX_STRUCTURE_HPP

#include "tuttex/multigraph.hpp"

#include <vector>

namespace tuttex {

inline constexpr int kDefaultSpecialBruteCap = 14;

/// A partition of the edge ids of a graph.
struct EdgePartition {
    enum class Kind { parallel, series };
    Kind kind;
    std::vector<std::vector<int>> blocks; // disjoint, covering, each sorted

    int count() const { return static_cast<int>(blocks.size()); }
    int nontrivial_count() const;
    std::vector<int> block_of_edge(int m) const; // edge id -> block index
};

/// Maximal groups of edges sharing both endpoints. Requires a loopless graph.
EdgePartition parallel_classes(const Multigraph& g);

/// Maximal groups in which any two distinct edges form a 2-edge-cut. Requires
/// a bridgeless loopless graph (possibly disconnected: classes are the union
/// over components). Every returned block B satisfies the criterion
/// c(G-B) - c(G) = |B| - 1 with G-B bridgeless; violation is an internal error.
EdgePartition series_classes(const Multigraph& g);

struct SimplifyResult {
    Multigraph graph;            // one edge per parallel class, simple
    std::vector<int> class_edge; // block index (in parallel_classes order) -> new edge id
};

/// Replaces each parallel class with a single edge. Requires loopless input.
SimplifyResult simplify(const Multigraph& g);

/// Number of 3-cliques. Requires a simple graph.
long long triangle_count(const Multigraph& g);

/// An edge set C with c(G-C) = |C| - 1 and G-C bridgeless. Contracting each
/// component of G-C to a point turns C into a theta or an infinity graph;
/// `shape` records which, with its path/cycle lengths.
struct SpecialClass {
    std::vector<int> edges; // sorted
    Nullity2Shape shape;
    int pair_hits = 0; // how many series-class pairs reached this set (join method)

    bool operator==(const SpecialClass& o) const {
        return edges == o.edges && shape == o.shape;
    }
};

struct SpecialClasses {
    std::vector<SpecialClass> theta;
    std::vector<SpecialClass> infinity;

    long long theta_count() const { return static_cast<long long>(theta.size()); }
    long long infinity_count() const { return static_cast<long long>(infinity.size()); }
};

/// Enumerates special classes by joining pairs of series classes and closing
/// under bridge absorption. Requires connected, bridgeless, loopless input.
/// A theta class is reached by exactly 3 pairs and an infinity class by
/// exactly 1; `pair_hits` records the observed multiplicities.
SpecialClasses special_classes(const Multigraph& g);

/// Definitional enumeration over all 2^m edge subsets; test oracle only.
SpecialClasses special_classes_bruteforce(const Multigraph& g,
                                          int cap = kDefaultSpecialBruteCap);

/// Structural quantities consumed by the coefficient formulas.
struct StructureSummary {
    long long p, p_star;        // parallel classes / nontrivial ones
    long long s, s_star;        // series classes / nontrivial ones
    long long triangles;        // of the simplified graph
    long long theta, infinity;  // special class counts
};

StructureSummary structure_summary(const Multigraph& g);

} // namespace tuttex

#endif
