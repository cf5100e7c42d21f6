#ifndef TUTTEX_TUTTE_HPP
#define TUTTEX_TUTTE_HPP

#include "tuttex/multigraph.hpp"
#include "tuttex/poly.hpp"

#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace tuttex {

inline constexpr int kDefaultSubsetCap = 22;

/// Deletion-contraction evaluation. Loops and bridges are stripped greedily
/// (contributing y and x factors); the pivot is always the lowest-id edge that
/// is neither. No caps: cost scales with the number of spanning trees.
BiPoly tutte_delcon(const Multigraph& g);

/// Rank-nullity subset expansion over all 2^m spanning subgraphs. This is the
/// designated independent oracle; it shares no code path with tutte_delcon.
BiPoly tutte_subset(const Multigraph& g, int cap = kDefaultSubsetCap);

/// Convolution identity: sum over subsets A of T(G/A; x, 0) * T(G|A; 0, y).
/// Factors are computed by deletion-contraction, so this checks the identity
/// rather than acting as a second independent oracle.
BiPoly tutte_convolution(const Multigraph& g, int cap = kDefaultSubsetCap);

struct TutteResult {
    BiPoly poly;
    std::string method; // "delcon" | "subset" | "convolution"
    std::chrono::duration<double> elapsed;
};

TutteResult timed_tutte(const Multigraph& g, const std::string& method,
                        int cap = kDefaultSubsetCap);

/// One coefficient position near a corner of the coefficient table.
struct WindowEntry {
    std::string name; // e.g. "t(0,m-n+1)"
    int i;
    int j;
    bool present; // false when the position has a negative index
    Int value;    // 0 when absent
};

/// The ten extreme positions (0,m-n+1), (0,m-n), (0,m-n-1), (1,m-n),
/// (1,m-n-1), (n-1,0), (n-2,0), (n-3,0), (n-2,1), (n-3,1), read from the
/// deletion-contraction polynomial. Requires connected, bridgeless, loopless.
std::vector<WindowEntry> extreme_window(const Multigraph& g);

/// Independent spanning tree counter (edge-subset enumeration); requires a
/// connected graph. Used to cross-check T(G; 1, 1).
Int spanning_tree_count(const Multigraph& g, int cap = kDefaultSubsetCap);

} // namespace tuttex

#endif
