#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "targetctl/errors.hpp"
#include "targetctl/graph.hpp"
#include "targetctl/graph_io.hpp"

#include "test_util.hpp"

#include <random>

using namespace targetctl;

TEST_CASE("distance ordering and saturation") {
    CHECK(Distance::finite(0) < Distance::finite(1));
    CHECK(Distance::finite(100) < Distance::infinite());
    CHECK(Distance::infinite() == Distance::infinite());
    CHECK((Distance::finite(2) + Distance::finite(3)) == Distance::finite(5));
    CHECK((Distance::finite(2) + Distance::infinite()).is_infinite());
    CHECK((Distance::infinite() + Distance::infinite()).is_infinite());
    CHECK(Distance::finite(7).hops() == 7);
    CHECK_THROWS_AS(Distance::infinite().hops(), InternalError);
}

TEST_CASE("vertex set keeps members sorted and unique") {
    VertexSet s{3, 1, 2, 3};
    CHECK(s.members() == std::vector<Vertex>{1, 2, 3});
    s.insert(2);
    CHECK(s.size() == 3);
    s.insert(5);
    CHECK(s.members() == std::vector<Vertex>{1, 2, 3, 5});
    s.erase(2);
    CHECK(s.members() == std::vector<Vertex>{1, 3, 5});
    CHECK(s.contains(3));
    CHECK_FALSE(s.contains(2));
}

TEST_CASE("vertex set algebra") {
    VertexSet a{1, 2, 3};
    VertexSet b{2, 3, 4};
    CHECK(a.united(b) == VertexSet{1, 2, 3, 4});
    CHECK(a.intersected(b) == VertexSet{2, 3});
    CHECK(a.minus(b) == VertexSet{1});
    CHECK(VertexSet{2, 3}.is_subset_of(a));
    CHECK_FALSE(b.is_subset_of(a));
    CHECK(VertexSet{}.is_subset_of(a));
    CHECK(VertexSet::closed_range(2, 5) == VertexSet{2, 3, 4, 5});
    CHECK(VertexSet::closed_range(5, 2).empty());
}

TEST_CASE("vertex set ordering is lexicographic on sorted members") {
    CHECK(VertexSet{1, 2} < VertexSet{1, 4});
    CHECK(VertexSet{1, 2} < VertexSet{1, 2, 3});
    CHECK(VertexSet{2} > VertexSet{1, 9, 10});
}

TEST_CASE("graph construction validates input") {
    CHECK_THROWS_AS(DiGraph(3, {{1, 4}}), InputError);
    CHECK_THROWS_AS(DiGraph(3, {{0, 1}}), InputError);
    CHECK_THROWS_AS(DiGraph(3, {{2, 2}}), InputError);
    CHECK_THROWS_AS(DiGraph(3, {{1, 2}, {1, 2}}), InputError);
    CHECK_THROWS_AS(DiGraph(-1, {}), InputError);
}

TEST_CASE("neighbors and arc lookup") {
    DiGraph g(5, {{1, 3}, {1, 4}, {2, 4}, {4, 5}});
    CHECK(std::vector<Vertex>(g.out_neighbors(1).begin(), g.out_neighbors(1).end()) ==
          std::vector<Vertex>{3, 4});
    CHECK(std::vector<Vertex>(g.in_neighbors(4).begin(), g.in_neighbors(4).end()) ==
          std::vector<Vertex>{1, 2});
    CHECK(g.has_arc(1, 3));
    CHECK_FALSE(g.has_arc(3, 1));
    CHECK_FALSE(g.has_arc(1, 5));
    CHECK(g.vertices() == VertexSet::closed_range(1, 5));
}

TEST_CASE("arc lookup agrees between dense and adjacency-list paths") {
    std::mt19937_64 rng(11);
    DiGraph small = testutil::random_graph(rng, 20, 0.2);
    DiGraph large = testutil::random_graph(rng, 80, 0.05);
    for (const DiGraph* g : {&small, &large}) {
        std::vector<std::vector<char>> want(static_cast<size_t>(g->vertex_count()) + 1,
                                            std::vector<char>(g->vertex_count() + 1, 0));
        for (const Arc& a : g->arcs()) {
            want[static_cast<size_t>(a.first)][static_cast<size_t>(a.second)] = 1;
        }
        for (Vertex u = 1; u <= g->vertex_count(); ++u) {
            for (Vertex v = 1; v <= g->vertex_count(); ++v) {
                CHECK(g->has_arc(u, v) == static_cast<bool>(want[u][v]));
            }
        }
    }
}

TEST_CASE("shortest path distances on the five-vertex fixture") {
    DiGraph g = testutil::fixture("g5_forcing.json").graph;
    CHECK(distance(g, 1, 1) == Distance::finite(0));
    CHECK(distance(g, 1, 3) == Distance::finite(1));
    CHECK(distance(g, 1, 5) == Distance::finite(2));
    CHECK(distance(g, 2, 5) == Distance::finite(2));
    CHECK(distance(g, 5, 1).is_infinite());
    CHECK(distance(g, 3, 4).is_infinite());
}

TEST_CASE("set distance on the twenty-vertex fixture") {
    DiGraph g = testutil::fixture("g20_casestudy.json").graph;
    CHECK(set_distance(g, VertexSet{4, 13}, 8) == Distance::finite(3));
    CHECK(set_distance(g, VertexSet{4, 13}, 4) == Distance::finite(0));
    CHECK(set_distance(g, VertexSet{4, 13}, 2) == Distance::finite(1));
    CHECK(set_distance(g, VertexSet{4, 13}, 16) == Distance::finite(5));
    CHECK(set_distance(g, VertexSet{20}, 1).is_infinite());
    CHECK_THROWS_AS(set_distance(g, VertexSet{}, 1), InputError);
}

TEST_CASE("triangle inequality under extended arithmetic") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        DiGraph g = testutil::random_graph(rng, 8, 0.25);
        for (Vertex u = 1; u <= 8; ++u) {
            std::vector<Distance> du = distances_from(g, u);
            for (Vertex v = 1; v <= 8; ++v) {
                std::vector<Distance> dv = distances_from(g, v);
                for (Vertex w = 1; w <= 8; ++w) {
                    CHECK(du[static_cast<size_t>(w)] <=
                          du[static_cast<size_t>(v)] + dv[static_cast<size_t>(w)]);
                }
            }
        }
    }
}

TEST_CASE("every arc has distance one") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        DiGraph g = testutil::random_graph(rng, 9, 0.2);
        for (const Arc& a : g.arcs()) {
            CHECK(distance(g, a.first, a.second) == Distance::finite(1));
        }
    }
}

TEST_CASE("set distance is the minimum over singleton distances") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 50; ++trial) {
        DiGraph g = testutil::random_graph(rng, 8, 0.25);
        VertexSet s = testutil::random_nonempty_subset(rng, 8, 0.3);
        std::vector<Distance> dset = distances_from_set(g, s);
        for (Vertex j = 1; j <= 8; ++j) {
            Distance best = Distance::infinite();
            for (Vertex u : s) {
                best = std::min(best, distance(g, u, j));
            }
            CHECK(dset[static_cast<size_t>(j)] == best);
            CHECK(set_distance(g, s, j) == best);
            CHECK((best == Distance::finite(0)) == s.contains(j));
        }
    }
}

TEST_CASE("json graph parsing and error reporting") {
    GraphFile f = load_graph_json(R"({"n": 3, "arcs": [[1, 2], [2, 3]]})");
    CHECK(f.graph == DiGraph(3, {{1, 2}, {2, 3}}));
    CHECK_FALSE(f.leaders.has_value());
    CHECK_FALSE(f.targets.has_value());

    CHECK_THROWS_AS(load_graph_json(R"({"arcs": []})"), InputError);
    CHECK_THROWS_AS(load_graph_json(R"({"n": 3, "arcs": [[3, 3]]})"), InputError);
    CHECK_THROWS_AS(load_graph_json(R"({"n": 3, "arcs": [[1, 2], [1, 2]]})"), InputError);
    CHECK_THROWS_AS(load_graph_json(R"({"n": 3, "arcs": [[1, 9]]})"), InputError);
    CHECK_THROWS_AS(load_graph_json("not json"), InputError);
}

TEST_CASE("edge list parsing") {
    GraphFile f = load_graph_edgelist("3\n1 2\n# comment\n\n2 3\n");
    CHECK(f.graph == DiGraph(3, {{1, 2}, {2, 3}}));
    CHECK_THROWS_AS(load_graph_edgelist(""), InputError);
    CHECK_THROWS_AS(load_graph_edgelist("3\n1\n"), InputError);
    CHECK_THROWS_AS(load_graph_edgelist("x\n1 2\n"), InputError);
}

TEST_CASE("canonical json round-trips") {
    GraphFile f = testutil::fixture("g10_layered.json");
    std::string out = graph_to_json(f);
    GraphFile back = load_graph_json(out);
    CHECK(back.graph == f.graph);
    CHECK(back.leaders == f.leaders);
    CHECK(back.targets == f.targets);
    CHECK(graph_to_json(back) == out);
}

TEST_CASE("round-trip over random graphs") {
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 25; ++trial) {
        GraphFile f{testutil::random_graph(rng, 12, 0.2),
                    testutil::random_subset(rng, 12, 0.3),
                    testutil::random_subset(rng, 12, 0.3)};
        GraphFile back = load_graph_json(graph_to_json(f));
        CHECK(back.graph == f.graph);
        CHECK(back.leaders == f.leaders);
        CHECK(back.targets == f.targets);
    }
}

TEST_CASE("dot export decorates leaders and targets") {
    DiGraph g(3, {{1, 2}, {2, 3}});
    std::string dot = export_dot(g, VertexSet{1}, VertexSet{3}, "demo");
    CHECK(dot.find("digraph demo") != std::string::npos);
    CHECK(dot.find("fillcolor=black") != std::string::npos);
    CHECK(dot.find("peripheries=2") != std::string::npos);
    CHECK(dot.find("1 -> 2") != std::string::npos);
    CHECK(dot.find("2 -> 3") != std::string::npos);
}
