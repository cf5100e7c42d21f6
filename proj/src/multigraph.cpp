#include "tuttex/multigraph.hpp"

#include "tuttex/errors.hpp"
#include "tuttex/unionfind.hpp"

#include <algorithm>
#include <string>

namespace tuttex {

Multigraph::Multigraph(int n_, std::vector<std::pair<int, int>> edges_)
    : n(n_), edges(std::move(edges_)) {
    if (n < 0) throw precondition_error("vertex count must be nonnegative");
    for (const auto& [u, v] : edges)
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw precondition_error("edge endpoint out of range");
}

ComponentInfo components(const Multigraph& g) {
    UnionFind uf(g.n);
    for (const auto& [u, v] : g.edges) uf.unite(u, v);
    ComponentInfo info;
    info.label.assign(g.n, -1);
    int next = 0;
    for (int v = 0; v < g.n; ++v) {
        int r = uf.find(v);
        if (info.label[r] == -1) info.label[r] = next++;
        info.label[v] = info.label[r];
    }
    info.count = next;
    return info;
}

GraphStats stats(const Multigraph& g) {
    int c = components(g).count;
    return GraphStats{g.n, g.m(), c, g.n - c, g.m() - g.n + c};
}

bool is_connected(const Multigraph& g) { return components(g).count <= 1; }

bool has_loops(const Multigraph& g) {
    for (int e = 0; e < g.m(); ++e)
        if (g.is_loop(e)) return true;
    return false;
}

std::vector<int> bridges(const Multigraph& g) {
    // Definitional: e is a bridge iff deleting it increases the component count.
    std::vector<int> out;
    int base = components(g).count;
    for (int e = 0; e < g.m(); ++e) {
        if (g.is_loop(e)) continue;
        UnionFind uf(g.n);
        for (int f = 0; f < g.m(); ++f)
            if (f != e) uf.unite(g.edges[f].first, g.edges[f].second);
        if (uf.groups > base) out.push_back(e);
    }
    return out;
}

bool is_bridgeless(const Multigraph& g) { return bridges(g).empty(); }

std::vector<int> degrees(const Multigraph& g) {
    std::vector<int> deg(g.n, 0);
    for (const auto& [u, v] : g.edges) {
        deg[u] += 1;
        deg[v] += 1;
    }
    return deg;
}

namespace {

std::vector<char> id_mask(const Multigraph& g, const std::vector<int>& ids) {
    std::vector<char> mask(g.m(), 0);
    for (int e : ids) {
        if (e < 0 || e >= g.m()) throw precondition_error("unknown edge id " + std::to_string(e));
        mask[e] = 1;
    }
    return mask;
}

} // namespace

DeleteResult delete_edges(const Multigraph& g, const std::vector<int>& ids) {
    auto mask = id_mask(g, ids);
    DeleteResult out;
    out.graph.n = g.n;
    out.edge_map.assign(g.m(), -1);
    for (int e = 0; e < g.m(); ++e) {
        if (mask[e]) continue;
        out.edge_map[e] = out.graph.m();
        out.graph.edges.push_back(g.edges[e]);
    }
    return out;
}

DeleteResult restrict_to(const Multigraph& g, const std::vector<int>& ids) {
    auto keep = id_mask(g, ids);
    std::vector<int> drop;
    for (int e = 0; e < g.m(); ++e)
        if (!keep[e]) drop.push_back(e);
    return delete_edges(g, drop);
}

ContractResult contract_edges(const Multigraph& g, const std::vector<int>& ids) {
    auto mask = id_mask(g, ids);
    UnionFind uf(g.n);
    for (int e = 0; e < g.m(); ++e)
        if (mask[e]) uf.unite(g.edges[e].first, g.edges[e].second);

    ContractResult out;
    out.vertex_map.assign(g.n, -1);
    int next = 0;
    for (int v = 0; v < g.n; ++v) {
        int r = uf.find(v);
        if (out.vertex_map[r] == -1) out.vertex_map[r] = next++;
        out.vertex_map[v] = out.vertex_map[r];
    }
    out.graph.n = next;
    out.edge_map.assign(g.m(), -1);
    for (int e = 0; e < g.m(); ++e) {
        if (mask[e]) continue;
        out.edge_map[e] = out.graph.m();
        out.graph.edges.emplace_back(out.vertex_map[g.edges[e].first],
                                     out.vertex_map[g.edges[e].second]);
    }
    return out;
}

namespace {

// Walk from `start` along edge `first`, continuing through degree-2 vertices,
// until a vertex of degree != 2 is reached. Marks edges used; returns
// (end vertex, path length).
std::pair<int, int> walk_path(const Multigraph& g, const std::vector<std::vector<int>>& inc,
                              const std::vector<int>& deg, std::vector<char>& used, int start,
                              int first) {
    int prev_edge = first;
    used[first] = 1;
    int cur = g.edges[first].first == start && g.edges[first].second == start
                  ? start
                  : (g.edges[first].first == start ? g.edges[first].second : g.edges[first].first);
    int len = 1;
    while (cur != start && deg[cur] == 2) {
        int next_edge = -1;
        for (int e : inc[cur])
            if (e != prev_edge) next_edge = e;
        used[next_edge] = 1;
        cur = g.edges[next_edge].first == cur ? g.edges[next_edge].second
                                              : g.edges[next_edge].first;
        prev_edge = next_edge;
        ++len;
    }
    return {cur, len};
}

} // namespace

Nullity2Shape classify_nullity2_shape(const Multigraph& g) {
    auto st = stats(g);
    if (st.c != 1 || st.nullity != 2)
        throw precondition_error("shape classification requires a connected graph of nullity 2");

    auto deg = degrees(g);
    std::vector<std::vector<int>> inc(g.n);
    int loop_count = 0;
    for (int e = 0; e < g.m(); ++e) {
        inc[g.edges[e].first].push_back(e);
        if (!g.is_loop(e))
            inc[g.edges[e].second].push_back(e);
        else
            ++loop_count;
    }

    std::vector<int> deg3, deg4, odd;
    for (int v = 0; v < g.n; ++v) {
        if (deg[v] == 2) continue;
        if (deg[v] == 3)
            deg3.push_back(v);
        else if (deg[v] == 4)
            deg4.push_back(v);
        else
            odd.push_back(v);
    }

    Nullity2Shape shape;
    if (odd.empty() && deg3.size() == 2 && deg4.empty() && loop_count == 0) {
        // Theta candidate: three u-v paths. A walk returning to u instead of
        // reaching v means the graph is a dumbbell, not a theta.
        int u = deg3[0], v = deg3[1];
        std::vector<char> used(g.m(), 0);
        std::array<int, 3> parts{};
        int found = 0;
        for (int e : inc[u]) {
            if (used[e]) continue;
            auto [end, len] = walk_path(g, inc, deg, used, u, e);
            if (end != v) return shape; // Kind::other
            parts[found++] = len;
        }
        if (found != 3) return shape;
        std::sort(parts.begin(), parts.end());
        shape.kind = Nullity2Shape::Kind::theta;
        shape.parts = parts;
        return shape;
    }

    if (odd.empty() && deg3.empty() && deg4.size() == 1) {
        // Infinity candidate: two cycles through the degree-4 vertex.
        int w = deg4[0];
        for (int e = 0; e < g.m(); ++e)
            if (g.is_loop(e) && g.edges[e].first != w) return shape;
        std::vector<char> used(g.m(), 0);
        std::vector<int> cycles;
        for (int e : inc[w]) {
            if (used[e]) continue;
            if (g.is_loop(e)) {
                used[e] = 1;
                cycles.push_back(1);
                continue;
            }
            auto [end, len] = walk_path(g, inc, deg, used, w, e);
            if (end != w) return shape;
            cycles.push_back(len);
        }
        if (cycles.size() != 2) return shape;
        std::sort(cycles.begin(), cycles.end());
        shape.kind = Nullity2Shape::Kind::infinity;
        shape.parts = {cycles[0], cycles[1], 0};
        return shape;
    }

    return shape;
}

Multigraph empty_graph(int n) { return Multigraph(n, {}); }

Multigraph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Multigraph(n, std::move(edges));
}

Multigraph cycle_graph(int n) {
    if (n < 2) throw precondition_error("cycle_graph needs n >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(n - 1, 0);
    return Multigraph(n, std::move(edges));
}

Multigraph dipole_graph(int k) {
    std::vector<std::pair<int, int>> edges(k, {0, 1});
    return Multigraph(2, std::move(edges));
}

Multigraph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Multigraph(n, std::move(edges));
}

Multigraph theta_graph(int k1, int k2, int k3) {
    // Vertices 0 and 1 are the hubs; each branch adds k-1 internal vertices.
    std::vector<std::pair<int, int>> edges;
    int next = 2;
    for (int k : {k1, k2, k3}) {
        if (k < 1) throw precondition_error("theta_graph branch length must be >= 1");
        int prev = 0;
        for (int q = 1; q < k; ++q) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, 1);
    }
    return Multigraph(next, std::move(edges));
}

Multigraph multipath_graph(int k1, int k2) {
    std::vector<std::pair<int, int>> edges;
    for (int q = 0; q < k1; ++q) edges.emplace_back(0, 1);
    for (int q = 0; q < k2; ++q) edges.emplace_back(1, 2);
    return Multigraph(3, std::move(edges));
}

} // namespace tuttex
