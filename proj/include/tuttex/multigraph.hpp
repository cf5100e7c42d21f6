#ifndef TUTTEX_MULTIGRAPH_HPP
#define TUTTEX_MULTIGRAPH_HPP

#include <array>
#include <utility>
#include <vector>

namespace tuttex {

/// Undirected multigraph. Vertices are 0..n-1; parallel edges and loops are
/// allowed. Edge ids are positions in `edges` and stay stable except through
/// delete_edges/contract_edges, which re-index densely and return the map.
struct Multigraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    Multigraph() = default;
    Multigraph(int n_, std::vector<std::pair<int, int>> edges_);

    int m() const { return static_cast<int>(edges.size()); }
    bool is_loop(int e) const { return edges[e].first == edges[e].second; }
};

struct GraphStats {
    int n;
    int m;
    int c;       // connected components (isolated vertices count)
    int rank;    // n - c
    int nullity; // m - n + c
};

struct ComponentInfo {
    int count;
    std::vector<int> label; // vertex -> component id, ids are 0..count-1 by first visit
};

ComponentInfo components(const Multigraph& g);
GraphStats stats(const Multigraph& g);
bool is_connected(const Multigraph& g);
bool has_loops(const Multigraph& g);

/// Edge ids whose deletion increases the component count, in increasing order.
std::vector<int> bridges(const Multigraph& g);
bool is_bridgeless(const Multigraph& g);

/// Degree with loops counting twice.
std::vector<int> degrees(const Multigraph& g);

struct DeleteResult {
    Multigraph graph;
    std::vector<int> edge_map; // old edge id -> new id, -1 if removed
};

struct ContractResult {
    Multigraph graph;
    std::vector<int> edge_map;   // old edge id -> new id, -1 if removed
    std::vector<int> vertex_map; // old vertex -> new vertex
};

/// Removes the edges in `ids`; all vertices stay (spanning-subgraph semantics).
DeleteResult delete_edges(const Multigraph& g, const std::vector<int>& ids);

/// Keeps exactly the edges in `ids` and all vertices.
DeleteResult restrict_to(const Multigraph& g, const std::vector<int>& ids);

/// Merges the endpoints of every non-loop edge in `ids`, removes all edges in
/// `ids`, and renumbers vertices compactly. Loops and parallels created by the
/// merge are kept.
ContractResult contract_edges(const Multigraph& g, const std::vector<int>& ids);

/// Shape of a connected graph of nullity 2. A theta is two vertices joined by
/// three internally disjoint paths of lengths k1<=k2<=k3; an infinity is two
/// cycles of lengths k1<=k2 sharing exactly one vertex (a loop is a cycle of
/// length 1).
struct Nullity2Shape {
    enum class Kind { theta, infinity, other };
    Kind kind = Kind::other;
    std::array<int, 3> parts{0, 0, 0}; // theta: k1,k2,k3; infinity: k1,k2,0

    bool operator==(const Nullity2Shape&) const = default;
};

Nullity2Shape classify_nullity2_shape(const Multigraph& g);

// Small builders used across tests, the corpus generator and the CLI docs.
Multigraph empty_graph(int n);
Multigraph path_graph(int n);     // n vertices, n-1 edges
Multigraph cycle_graph(int n);    // n >= 2; cycle_graph(2) is the 2-gon (D_2)
Multigraph dipole_graph(int k);   // two vertices joined by k parallel edges
Multigraph complete_graph(int n);
Multigraph theta_graph(int k1, int k2, int k3); // three internally disjoint paths
Multigraph multipath_graph(int k1, int k2);     // 3 vertices, k1 + k2 parallel edges

} // namespace tuttex

#endif
