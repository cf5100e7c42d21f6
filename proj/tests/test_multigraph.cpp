#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "tuttex/errors.hpp"
#include "tuttex/graph_io.hpp"
#include "tuttex/multigraph.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace tuttex;

TEST_CASE("component counting") {
    CHECK(components(cycle_graph(4)).count == 1);
    CHECK(components(empty_graph(3)).count == 3);

    Multigraph two_triangles(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    auto info = components(two_triangles);
    CHECK(info.count == 2);
    CHECK(info.label[0] == info.label[2]);
    CHECK(info.label[3] == info.label[5]);
    CHECK(info.label[0] != info.label[3]);
}

TEST_CASE("stats") {
    auto k4 = stats(complete_graph(4));
    CHECK(k4.n == 4);
    CHECK(k4.m == 6);
    CHECK(k4.c == 1);
    CHECK(k4.rank == 3);
    CHECK(k4.nullity == 3);

    for (int n = 2; n <= 6; ++n) CHECK(stats(cycle_graph(n)).nullity == 1);

    auto loop = stats(Multigraph(1, {{0, 0}}));
    CHECK(loop.n == 1);
    CHECK(loop.m == 1);
    CHECK(loop.c == 1);
    CHECK(loop.rank == 0);
    CHECK(loop.nullity == 1);
}

TEST_CASE("stats invariants on random graphs") {
    std::mt19937 rng(99);
    for (int round = 0; round < 50; ++round) {
        int n = 1 + static_cast<int>(rng() % 6);
        int m = static_cast<int>(rng() % 10);
        std::vector<std::pair<int, int>> edges;
        for (int q = 0; q < m; ++q)
            edges.emplace_back(static_cast<int>(rng() % n), static_cast<int>(rng() % n));
        auto st = stats(Multigraph(n, edges));
        CHECK(st.rank + st.nullity == st.m);
        CHECK((st.n == 0 || st.c >= 1));
    }
}

TEST_CASE("bridges") {
    CHECK(bridges(path_graph(3)) == std::vector<int>{0, 1});
    CHECK(bridges(cycle_graph(4)).empty());

    // Removing one whole branch of theta(2,2,2) leaves a 4-cycle plus an
    // isolated vertex: still bridgeless.
    auto theta = theta_graph(2, 2, 2);
    auto rest = delete_edges(theta, {0, 1}).graph;
    CHECK(rest.n == theta.n);
    CHECK(bridges(rest).empty());

    // Loops and parallel edges are never bridges.
    CHECK(bridges(Multigraph(2, {{0, 0}, {0, 1}, {0, 1}})).empty());
}

TEST_CASE("bridges match the every-edge-on-a-cycle test") {
    for (const auto& g : {cycle_graph(5), complete_graph(4), theta_graph(1, 2, 3),
                          path_graph(4), Multigraph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}})}) {
        auto br = bridges(g);
        for (int e = 0; e < g.m(); ++e) {
            bool on_cycle = components(delete_edges(g, {e}).graph).count == components(g).count;
            bool is_bridge = std::find(br.begin(), br.end(), e) != br.end();
            CHECK(on_cycle != is_bridge);
        }
    }
}

TEST_CASE("contract examples") {
    auto d2 = contract_edges(cycle_graph(3), {0});
    CHECK(d2.graph.n == 2);
    CHECK(d2.graph.m() == 2);
    auto unordered = [](std::pair<int, int> e) {
        return std::pair{std::min(e.first, e.second), std::max(e.first, e.second)};
    };
    CHECK(unordered(d2.graph.edges[0]) == unordered(d2.graph.edges[1]));
    CHECK(!has_loops(d2.graph));
    CHECK(d2.vertex_map[0] == d2.vertex_map[1]);
    CHECK(d2.edge_map[0] == -1);
    CHECK(d2.edge_map[1] == 0);
    CHECK(d2.edge_map[2] == 1);

    auto loop = contract_edges(dipole_graph(2), {0});
    CHECK(loop.graph.n == 1);
    CHECK(loop.graph.m() == 1);
    CHECK(loop.graph.is_loop(0));
}

TEST_CASE("restrict keeps all vertices") {
    // The 4-cycle inside K4: edges (0,1), (1,2), (2,3), (0,3).
    auto k4 = complete_graph(4); // 0:(0,1) 1:(0,2) 2:(0,3) 3:(1,2) 4:(1,3) 5:(2,3)
    auto cycle = restrict_to(k4, {0, 3, 5, 2});
    CHECK(cycle.graph.n == 4);
    CHECK(cycle.graph.m() == 4);
    auto st = stats(cycle.graph);
    CHECK(st.c == 1);
    CHECK(st.nullity == 1);
}

TEST_CASE("delete and contract identities") {
    auto theta = theta_graph(1, 2, 2);
    std::vector<int> all(theta.m());
    for (int e = 0; e < theta.m(); ++e) all[e] = e;
    CHECK(restrict_to(theta, all).graph.edges == theta.edges);
    CHECK(delete_edges(theta, {}).graph.edges == theta.edges);
    CHECK(contract_edges(theta, {}).graph.edges == theta.edges);
}

TEST_CASE("rank and nullity step under contraction and deletion") {
    std::mt19937 rng(4242);
    for (int round = 0; round < 60; ++round) {
        int n = 2 + static_cast<int>(rng() % 5);
        std::vector<std::pair<int, int>> edges;
        int m = 2 + static_cast<int>(rng() % 8);
        for (int q = 0; q < m; ++q) {
            int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
            edges.emplace_back(u, v);
        }
        Multigraph g(n, edges);
        auto st = stats(g);
        auto br = bridges(g);
        for (int e = 0; e < m; ++e) {
            bool is_bridge = std::find(br.begin(), br.end(), e) != br.end();
            if (!g.is_loop(e)) {
                CHECK(stats(contract_edges(g, {e}).graph).rank == st.rank - 1);
                if (!is_bridge)
                    CHECK(stats(delete_edges(g, {e}).graph).nullity == st.nullity - 1);
            }
        }
    }
}

TEST_CASE("unknown edge ids are rejected") {
    CHECK_THROWS_AS(delete_edges(cycle_graph(3), {7}), precondition_error);
    CHECK_THROWS_AS(contract_edges(cycle_graph(3), {-1}), precondition_error);
    CHECK_THROWS_AS(restrict_to(cycle_graph(3), {3}), precondition_error);
}

TEST_CASE("shape classification") {
    auto d3 = classify_nullity2_shape(dipole_graph(3));
    CHECK(d3.kind == Nullity2Shape::Kind::theta);
    CHECK(d3.parts == std::array<int, 3>{1, 1, 1});

    auto two_loops = classify_nullity2_shape(Multigraph(1, {{0, 0}, {0, 0}}));
    CHECK(two_loops.kind == Nullity2Shape::Kind::infinity);
    CHECK(two_loops.parts == std::array<int, 3>{1, 1, 0});

    // Two triangles sharing one vertex.
    Multigraph bowtie(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
    auto inf = classify_nullity2_shape(bowtie);
    CHECK(inf.kind == Nullity2Shape::Kind::infinity);
    CHECK(inf.parts == std::array<int, 3>{3, 3, 0});

    // Cycle plus a loop at one of its vertices.
    Multigraph pan(3, {{0, 1}, {1, 2}, {2, 0}, {0, 0}});
    auto pan_shape = classify_nullity2_shape(pan);
    CHECK(pan_shape.kind == Nullity2Shape::Kind::infinity);
    CHECK(pan_shape.parts == std::array<int, 3>{1, 3, 0});
}

TEST_CASE("theta shapes classified exhaustively") {
    for (int k1 = 1; k1 <= 4; ++k1)
        for (int k2 = k1; k2 <= 4; ++k2)
            for (int k3 = k2; k3 <= 4; ++k3) {
                auto shape = classify_nullity2_shape(theta_graph(k1, k2, k3));
                CHECK(shape.kind == Nullity2Shape::Kind::theta);
                CHECK(shape.parts == std::array<int, 3>{k1, k2, k3});
            }
}

TEST_CASE("dumbbells are not thetas") {
    // Two triangles joined by a single edge: the degree sequence matches a
    // theta but the walks return to their start.
    Multigraph dumbbell(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}});
    CHECK(classify_nullity2_shape(dumbbell).kind == Nullity2Shape::Kind::other);
}

TEST_CASE("shape classification rejects bad inputs") {
    CHECK_THROWS_AS(classify_nullity2_shape(cycle_graph(4)), precondition_error);
    CHECK_THROWS_AS(classify_nullity2_shape(empty_graph(2)), precondition_error);
}

TEST_CASE("graph text parsing") {
    auto parsed = parse_graph_text("# a triangle with a doubled edge\n"
                                   "v 3\n"
                                   "e 0 1\n"
                                   "e 0 1  # parallel\n"
                                   "\n"
                                   "e 1 2\n"
                                   "e 2 0\n");
    CHECK(parsed.graph.n == 3);
    CHECK(parsed.graph.m() == 4);
    CHECK(parsed.graph.edges[1] == std::pair<int, int>{0, 1});
    CHECK(!parsed.rotations);
}

TEST_CASE("graph text parse errors carry line numbers") {
    auto expect_line = [](const std::string& text, int line) {
        try {
            parse_graph_text(text);
            FAIL("expected a parse error");
        } catch (const parse_error& e) {
            CHECK(e.line == line);
        }
    };
    expect_line("e 0 1\n", 1);                  // edge before v
    expect_line("v 2\ne 0 5\n", 2);             // endpoint out of range
    expect_line("v 2\nv 3\n", 2);               // duplicate v
    expect_line("v 2\nq 1 2\n", 2);             // unknown directive
    expect_line("v 2\ne 0 1\nr 0: 0c\n", 3);    // bad half-edge marker
    expect_line("v x\n", 1);                    // bad count
}

TEST_CASE("graph text round trip") {
    auto g = theta_graph(1, 2, 3);
    auto parsed = parse_graph_text(write_graph_text(g));
    CHECK(parsed.graph.n == g.n);
    CHECK(parsed.graph.edges == g.edges);
}

TEST_CASE("rotation lines round trip") {
    std::vector<std::vector<HalfEdge>> rot = {{{0, 0}, {1, 1}}, {{1, 0}, {0, 1}}};
    auto g = dipole_graph(2);
    auto text = write_graph_text(g, &rot);
    auto parsed = parse_graph_text(text);
    REQUIRE(parsed.rotations.has_value());
    CHECK(*parsed.rotations == rot);
}
