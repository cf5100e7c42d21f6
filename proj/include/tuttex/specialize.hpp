#ifndef TUTTEX_SPECIALIZE_HPP
#define TUTTEX_SPECIALIZE_HPP

#include "tuttex/multigraph.hpp"
#include "tuttex/poly.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace tuttex {

inline constexpr int kDefaultBondLatticeCap = 7;  // vertices, partition lattice
inline constexpr int kDefaultFlowLatticeCap = 10; // edges, 2^m subgraph filter
inline constexpr int kDefaultColoringCountCap = 6;
inline constexpr int kDefaultFlowCountCap = 10;

/// Chromatic polynomial via the x-axis specialization of the Tutte polynomial.
UniPoly chromatic(const Multigraph& g);

/// Flow polynomial via the y-axis specialization.
UniPoly flow(const Multigraph& g);

/// Explicit finite graded lattice with precomputed order, rank, and Mobius
/// values mu(bottom, x). Element meaning is owned by the builder.
struct Lattice {
    int size = 0;
    std::vector<std::vector<char>> leq; // leq[a][b]: a <= b
    std::vector<int> rank;
    int bottom = -1;
    int top = -1;
    std::vector<long long> mobius;

    /// Recomputes sum_{y <= x} mu(bottom, y) for every x; all but the bottom
    /// must vanish. Returns false if the defining recursion fails.
    bool mobius_recursion_holds() const;
};

/// Builds order/rank/bottom/top/mobius from an explicit element count, order
/// predicate, and rank function. Throws if bottom or top is not unique.
Lattice build_lattice(int size, const std::function<bool(int, int)>& leq,
                      const std::function<int(int)>& rank);

/// Bond lattice: partitions of the vertex set whose blocks induce connected
/// subgraphs, ordered by refinement; element i is partitions[i] (vertex ->
/// block id).
struct BondLattice {
    Lattice lattice;
    std::vector<std::vector<int>> partitions;
};

BondLattice bond_lattice(const Multigraph& gsimple);

/// Lattice of bridgeless spanning subgraphs ordered by reverse edge inclusion;
/// element i corresponds to edge subset masks[i].
struct FlowLattice {
    Lattice lattice;
    std::vector<std::uint64_t> masks;
};

FlowLattice bridgeless_subgraph_lattice(const Multigraph& g);

/// Chromatic polynomial as a Mobius sum over the bond lattice of the
/// simplified graph. Independent of the Tutte engine. Requires loopless input
/// and n <= cap.
UniPoly chromatic_via_lattice(const Multigraph& g, int cap = kDefaultBondLatticeCap);

/// Flow polynomial as a Mobius sum over bridgeless spanning subgraphs.
/// Independent of the Tutte engine. Requires bridgeless input and m <= cap.
UniPoly flow_via_lattice(const Multigraph& g, int cap = kDefaultFlowLatticeCap);

/// Leading three coefficients (1, -p, C(p,2) - triangles) of the chromatic
/// polynomial, with the comparison against the computed polynomial.
struct LeadingCoeffs {
    std::array<long long, 3> formula;
    bool match;
};

LeadingCoeffs chromatic_leading3(const Multigraph& g);

/// Leading three flow coefficients (1, -s, C(s,2) - theta).
LeadingCoeffs flow_leading3(const Multigraph& g);

/// Exhaustive proper-coloring count over colors^n assignments.
Int proper_coloring_count(const Multigraph& g, int colors,
                          int cap = kDefaultColoringCountCap);

/// Exhaustive nowhere-zero flow count over the group Z_modulus, with edges
/// oriented low -> high endpoint. Loops contribute a factor (modulus - 1).
Int nowhere_zero_flow_count(const Multigraph& g, int modulus,
                            int cap = kDefaultFlowCountCap);

/// One formula coefficient of the Jones polynomial compared to the computed
/// polynomial.
struct JonesCoeff {
    std::string name; // e.g. "b0"
    int index;        // may be out of range for tiny graphs
    bool present;
    long long formula;
    Int actual;
    bool match;
};

struct JonesReport {
    UniPoly poly;                      // in t, degree m
    std::vector<Int> b;                // coefficients b[0..m]
    std::vector<JonesCoeff> formulas;  // b0, b1, b2, b(m-2), b(m-1), bm
    bool signs_alternate;              // (-1)^(m-i) b_i >= 0 for all i
    bool all_match;
};

/// Jones polynomial (-1)^(n-1) t^(m-n+1) T(-t, -1/t) with the six closed-form
/// coefficients. Requires connected bridgeless loopless input.
JonesReport jones(const Multigraph& g);

} // namespace tuttex

#endif
