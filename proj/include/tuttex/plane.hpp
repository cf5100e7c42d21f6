#ifndef TUTTEX_PLANE_HPP
#define TUTTEX_PLANE_HPP

#include "tuttex/graph_io.hpp"
#include "tuttex/multigraph.hpp"
#include "tuttex/poly.hpp"

#include <string>
#include <vector>

namespace tuttex {

/// A multigraph with a rotation system: a counterclockwise cyclic order of the
/// incident half-edges at every vertex. Half-edge (e, 0) sits at the first
/// endpoint of e, (e, 1) at the second; a loop contributes both at its vertex.
struct PlaneGraph {
    Multigraph g;
    std::vector<std::vector<HalfEdge>> rotation;
};

/// Validates that every half-edge appears exactly once, at its own vertex.
PlaneGraph make_plane_graph(Multigraph g, std::vector<std::vector<HalfEdge>> rotation);

/// Face boundary walks. From half-edge h, the walk continues with the rotation
/// successor, at the far endpoint of h, of h's twin. Every half-edge lies on
/// exactly one walk. Requires a connected graph; a rotation system that does
/// not satisfy Euler's formula n - m + f = 2 is rejected as non-planar.
struct FaceWalks {
    std::vector<std::vector<HalfEdge>> walks;
    std::vector<int> face_of; // dart id (2*edge + end) -> face index
};

FaceWalks faces(const PlaneGraph& pg);

/// Geometric dual: one vertex per face, one edge per primal edge (same ids)
/// joining the faces on its two sides, rotations induced by the face walks.
PlaneGraph dual(const PlaneGraph& pg);

struct DualIdentity {
    std::string name;
    long long lhs;
    long long rhs;
    bool ok;
};

struct DualReport {
    PlaneGraph dual_graph;
    BiPoly t_primal;
    BiPoly t_dual;
    bool tutte_swap_ok; // coefficient (i,j) of the dual equals (j,i) of the primal
    std::vector<DualIdentity> identities;
    bool all_ok;
};

/// Runs the coefficient-swap check and the eight quantity identities relating
/// a plane graph to its dual. Requires connected bridgeless loopless input.
DualReport duality_report(const PlaneGraph& pg);

// Fixed embeddings used by the verification corpus.
PlaneGraph convex_cycle_embedding(int n);
PlaneGraph dipole_embedding(int k);
PlaneGraph k4_embedding();
PlaneGraph cube_embedding();
PlaneGraph theta_embedding(int k1, int k2, int k3);

} // namespace tuttex

#endif
