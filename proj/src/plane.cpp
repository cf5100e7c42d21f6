#include "tuttex/plane.hpp"

#include "tuttex/errors.hpp"
#include "tuttex/structure.hpp"
#include "tuttex/tutte.hpp"

#include <algorithm>
#include <string>

namespace tuttex {

namespace {

int dart_id(const HalfEdge& h) { return 2 * h.edge + h.end; }

int dart_vertex(const Multigraph& g, const HalfEdge& h) {
    return h.end == 0 ? g.edges[h.edge].first : g.edges[h.edge].second;
}

} // namespace

PlaneGraph make_plane_graph(Multigraph g, std::vector<std::vector<HalfEdge>> rotation) {
    if (static_cast<int>(rotation.size()) != g.n)
        throw precondition_error("rotation system must list every vertex");
    std::vector<char> seen(2 * g.m(), 0);
    for (int v = 0; v < g.n; ++v) {
        for (const auto& h : rotation[v]) {
            if (h.edge < 0 || h.edge >= g.m() || (h.end != 0 && h.end != 1))
                throw precondition_error("rotation refers to an unknown half-edge");
            if (dart_vertex(g, h) != v)
                throw precondition_error("half-edge listed at the wrong vertex");
            if (seen[dart_id(h)]) throw precondition_error("half-edge listed twice");
            seen[dart_id(h)] = 1;
        }
    }
    for (int d = 0; d < 2 * g.m(); ++d)
        if (!seen[d]) throw precondition_error("rotation system misses a half-edge");
    return PlaneGraph{std::move(g), std::move(rotation)};
}

FaceWalks faces(const PlaneGraph& pg) {
    const auto& g = pg.g;
    if (!is_connected(g)) throw precondition_error("face tracing requires a connected graph");

    // successor[d]: the dart after d in the rotation at d's vertex.
    std::vector<int> successor(2 * g.m(), -1);
    for (int v = 0; v < g.n; ++v) {
        const auto& rot = pg.rotation[v];
        for (size_t q = 0; q < rot.size(); ++q)
            successor[dart_id(rot[q])] = dart_id(rot[(q + 1) % rot.size()]);
    }

    FaceWalks out;
    out.face_of.assign(2 * g.m(), -1);
    for (int start = 0; start < 2 * g.m(); ++start) {
        if (out.face_of[start] != -1) continue;
        int face = static_cast<int>(out.walks.size());
        std::vector<HalfEdge> walk;
        int d = start;
        do {
            out.face_of[d] = face;
            walk.push_back(HalfEdge{d / 2, d % 2});
            d = successor[d ^ 1]; // rotation successor of the twin, at the far end
        } while (d != start);
        out.walks.push_back(std::move(walk));
    }

    int f = static_cast<int>(out.walks.size());
    if (g.n - g.m() + f != 2)
        throw precondition_error("rotation system is not planar: n - m + f = " +
                                 std::to_string(g.n - g.m() + f) + ", expected 2");
    return out;
}

PlaneGraph dual(const PlaneGraph& pg) {
    auto fw = faces(pg);
    const auto& g = pg.g;

    Multigraph dg;
    dg.n = static_cast<int>(fw.walks.size());
    for (int e = 0; e < g.m(); ++e)
        dg.edges.emplace_back(fw.face_of[2 * e], fw.face_of[2 * e + 1]);

    // The rotation at a dual vertex is its face walk: dart (e, end) on the
    // walk of F is exactly the dual half-edge (e, end) sitting at F.
    std::vector<std::vector<HalfEdge>> rotation(dg.n);
    for (size_t face = 0; face < fw.walks.size(); ++face) rotation[face] = fw.walks[face];
    return make_plane_graph(std::move(dg), std::move(rotation));
}

DualReport duality_report(const PlaneGraph& pg) {
    const auto& g = pg.g;
    if (!is_connected(g) || has_loops(g) || !is_bridgeless(g))
        throw precondition_error(
            "duality report requires a connected bridgeless loopless graph");

    DualReport report{dual(pg), tutte_delcon(g), BiPoly(), true, {}, true};
    report.t_dual = tutte_delcon(report.dual_graph.g);

    for (const auto& [key, c] : report.t_primal.terms())
        if (report.t_dual.coefficient(key.second, key.first) != c) report.tutte_swap_ok = false;
    for (const auto& [key, c] : report.t_dual.terms())
        if (report.t_primal.coefficient(key.second, key.first) != c)
            report.tutte_swap_ok = false;

    auto primal = structure_summary(g);
    auto dual_summary = structure_summary(report.dual_graph.g);
    auto add = [&](const std::string& name, long long lhs, long long rhs) {
        report.identities.push_back(DualIdentity{name, lhs, rhs, lhs == rhs});
    };
    add("m* = m", report.dual_graph.g.m(), g.m());
    add("n* = m - n + 2", report.dual_graph.g.n, g.m() - g.n + 2);
    add("s(G*) = p(G)", dual_summary.s, primal.p);
    add("p(G*) = s(G)", dual_summary.p, primal.s);
    add("s*(G*) = p*(G)", dual_summary.s_star, primal.p_star);
    add("p*(G*) = s*(G)", dual_summary.p_star, primal.s_star);
    add("theta(G*) = triangles(G~)", dual_summary.theta, primal.triangles);
    add("triangles(G~*) = theta(G)", dual_summary.triangles, primal.theta);

    report.all_ok = report.tutte_swap_ok;
    for (const auto& identity : report.identities) report.all_ok = report.all_ok && identity.ok;
    return report;
}

PlaneGraph convex_cycle_embedding(int n) {
    auto g = cycle_graph(n);
    std::vector<std::vector<HalfEdge>> rot(g.n);
    if (n == 2) {
        // Two parallel edges: reversed order on the second vertex.
        rot[0] = {HalfEdge{0, 0}, HalfEdge{1, 1}};
        rot[1] = {HalfEdge{1, 0}, HalfEdge{0, 1}};
        return make_plane_graph(std::move(g), std::move(rot));
    }
    for (int v = 0; v < n; ++v) {
        int in = (v + n - 1) % n; // edge (v-1, v)
        int out = v;             // edge (v, v+1)
        rot[v] = {HalfEdge{out, 0}, HalfEdge{in, v == 0 ? 0 : 1}};
    }
    // Edge n-1 is (n-1, 0), so its half at 0 is the second end.
    rot[0] = {HalfEdge{0, 0}, HalfEdge{n - 1, 1}};
    return make_plane_graph(std::move(g), std::move(rot));
}

PlaneGraph dipole_embedding(int k) {
    auto g = dipole_graph(k);
    std::vector<std::vector<HalfEdge>> rot(2);
    for (int e = 0; e < k; ++e) rot[0].push_back(HalfEdge{e, 0});
    for (int e = k - 1; e >= 0; --e) rot[1].push_back(HalfEdge{e, 1});
    return make_plane_graph(std::move(g), std::move(rot));
}

PlaneGraph k4_embedding() {
    // Outer triangle 0,1,2 drawn counterclockwise with 3 in the center.
    // Edges: 0=(0,1) 1=(0,2) 2=(0,3) 3=(1,2) 4=(1,3) 5=(2,3).
    auto g = complete_graph(4);
    std::vector<std::vector<HalfEdge>> rot(4);
    rot[0] = {HalfEdge{0, 0}, HalfEdge{2, 0}, HalfEdge{1, 0}};
    rot[1] = {HalfEdge{3, 0}, HalfEdge{4, 0}, HalfEdge{0, 1}};
    rot[2] = {HalfEdge{1, 1}, HalfEdge{5, 0}, HalfEdge{3, 1}};
    rot[3] = {HalfEdge{2, 1}, HalfEdge{4, 1}, HalfEdge{5, 1}};
    return make_plane_graph(std::move(g), std::move(rot));
}

PlaneGraph cube_embedding() {
    // Outer square 0,1,2,3 counterclockwise; inner square 4,5,6,7 under it.
    // Edges 0..3 outer (i, i+1), 4..7 inner (4+i, 4+(i+1)), 8..11 spokes (i, 4+i).
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 4; ++i) edges.emplace_back(i, (i + 1) % 4);
    for (int i = 0; i < 4; ++i) edges.emplace_back(4 + i, 4 + (i + 1) % 4);
    for (int i = 0; i < 4; ++i) edges.emplace_back(i, 4 + i);
    Multigraph g(8, std::move(edges));

    std::vector<std::vector<HalfEdge>> rot(8);
    for (int i = 0; i < 4; ++i) {
        int out_next = i;                 // (i, i+1)
        int out_prev = (i + 3) % 4;       // (i-1, i)
        int spoke = 8 + i;                // (i, 4+i)
        rot[i] = {HalfEdge{out_next, 0}, HalfEdge{spoke, 0}, HalfEdge{out_prev, 1}};
    }
    for (int i = 0; i < 4; ++i) {
        int in_next = 4 + i;              // (4+i, 4+i+1)
        int in_prev = 4 + (i + 3) % 4;    // (4+i-1, 4+i)
        int spoke = 8 + i;
        rot[4 + i] = {HalfEdge{in_next, 0}, HalfEdge{in_prev, 1}, HalfEdge{spoke, 1}};
    }
    return make_plane_graph(std::move(g), std::move(rot));
}

PlaneGraph theta_embedding(int k1, int k2, int k3) {
    auto g = theta_graph(k1, k2, k3);
    // Branch q of length k starts at edge offset and runs consecutively; its
    // first half sits at hub 0, its last at hub 1 (end marker 1).
    std::array<int, 3> first{}, last{};
    int offset = 0, q = 0;
    for (int k : {k1, k2, k3}) {
        first[q] = offset;
        last[q] = offset + k - 1;
        offset += k;
        ++q;
    }

    std::vector<std::vector<HalfEdge>> rot(g.n);
    rot[0] = {HalfEdge{first[0], 0}, HalfEdge{first[1], 0}, HalfEdge{first[2], 0}};
    rot[1] = {HalfEdge{last[2], 1}, HalfEdge{last[1], 1}, HalfEdge{last[0], 1}};
    for (int v = 2; v < g.n; ++v) {
        // Internal path vertex: entered by edge e, left by edge e+1, where v is
        // the second endpoint of e and the first of e+1.
        int entering = -1, leaving = -1;
        for (int e = 0; e < g.m(); ++e) {
            if (g.edges[e].second == v) entering = e;
            if (g.edges[e].first == v) leaving = e;
        }
        rot[v] = {HalfEdge{entering, 1}, HalfEdge{leaving, 0}};
    }
    return make_plane_graph(std::move(g), std::move(rot));
}

} // namespace tuttex
