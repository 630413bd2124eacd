#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "targetctl/controllability.hpp"
#include "targetctl/errors.hpp"
#include "targetctl/leader_selection.hpp"

#include "test_util.hpp"

#include <algorithm>
#include <random>

using namespace targetctl;

namespace {

// Reachability computed straight from BFS, independent of build_cover.
std::vector<VertexSet> reach_rows(const DiGraph& g, const VertexSet& targets) {
    std::vector<VertexSet> rows;
    for (Vertex t : targets) {
        VertexSet row;
        for (Vertex v = 1; v <= g.vertex_count(); ++v) {
            if (distance(g, v, t).is_finite()) {
                row.insert(v);
            }
        }
        rows.push_back(row);
    }
    return rows;
}

bool covers(const std::vector<VertexSet>& rows, const VertexSet& chosen) {
    return std::all_of(rows.begin(), rows.end(), [&](const VertexSet& row) {
        return !row.intersected(chosen).empty();
    });
}

std::vector<Vertex> additions(const SelectionResult& result) {
    std::vector<Vertex> added;
    for (const TraceEvent& e : result.trace) {
        if (e.kind == TraceEvent::Kind::AddLeader) {
            added.push_back(e.vertex);
        }
    }
    return added;
}

} // namespace

TEST_CASE("cover rows on the seven-vertex fixture") {
    GraphFile fx = testutil::fixture("g7_rootsets.json");
    CoverInstance inst = build_cover(fx.graph, *fx.targets);
    CHECK(inst.ambient == 7);
    CHECK(inst.targets == VertexSet{1, 4, 5, 6, 7});
    REQUIRE(inst.row_cover.size() == 5);
    CHECK(inst.row_cover[0] == VertexSet{1});
    CHECK(inst.row_cover[1] == VertexSet{2, 4});
    CHECK(inst.row_cover[2] == VertexSet{1, 2, 3, 5});
    CHECK(inst.row_cover[3] == VertexSet{1, 2, 3, 6});
    CHECK(inst.row_cover[4] == VertexSet{1, 2, 3, 4, 7});
}

TEST_CASE("cover rows on the twenty-vertex fixture") {
    GraphFile fx = testutil::fixture("g20_casestudy.json");
    CoverInstance inst = build_cover(fx.graph, *fx.targets);
    CHECK(inst.ambient == 20);
    REQUIRE(inst.row_cover.size() == 10);
    CHECK(inst.row_cover[0] == VertexSet{1, 2, 4});
    CHECK(inst.row_cover[1] == VertexSet{3, 4});
    CHECK(inst.row_cover[2] == VertexSet{4, 5, 6, 7, 8, 9, 10, 13});
    CHECK(inst.row_cover[3] == VertexSet{7, 8, 9, 10, 13});
    CHECK(inst.row_cover[4] == VertexSet{7, 9, 10, 13});
    CHECK(inst.row_cover[5] == VertexSet{13});
    CHECK(inst.row_cover[6] == VertexSet{7, 9, 10, 13, 15});
    CHECK(inst.row_cover[7] == VertexSet{7, 8, 9, 10, 11, 13, 15, 16, 18});
    CHECK(inst.row_cover[8] == VertexSet{7, 9, 10, 13, 14, 15, 17});
    CHECK(inst.row_cover[9] == VertexSet{7, 8, 9, 10, 11, 13, 14, 15, 17, 18, 19, 20});
}

TEST_CASE("minimum root sets on the seven-vertex fixture") {
    GraphFile fx = testutil::fixture("g7_rootsets.json");
    RootSet rs = min_root_set(fx.graph, *fx.targets);
    CHECK(rs.roots == VertexSet{1, 2});
    CHECK(rs.optimal);
    std::vector<VertexSet> all = all_min_root_sets(fx.graph, *fx.targets);
    REQUIRE(all.size() == 2);
    CHECK(all[0] == VertexSet{1, 2});
    CHECK(all[1] == VertexSet{1, 4});
}

TEST_CASE("the twenty-vertex fixture has a unique minimum root set") {
    GraphFile fx = testutil::fixture("g20_casestudy.json");
    RootSet rs = min_root_set(fx.graph, *fx.targets);
    CHECK(rs.roots == VertexSet{4, 13});
    CHECK(rs.optimal);
    std::vector<VertexSet> all = all_min_root_sets(fx.graph, *fx.targets);
    REQUIRE(all.size() == 1);
    CHECK(all[0] == VertexSet{4, 13});
}

TEST_CASE("instance and graph overloads agree") {
    GraphFile fx = testutil::fixture("g7_rootsets.json");
    CoverInstance inst = build_cover(fx.graph, *fx.targets);
    CHECK(min_root_set(inst).roots == min_root_set(fx.graph, *fx.targets).roots);
    CHECK(all_min_root_sets(inst) == all_min_root_sets(fx.graph, *fx.targets));
}

TEST_CASE("greedy heuristic can overshoot the optimum") {
    DiGraph g(9, {{7, 1}, {7, 2}, {7, 3}, {7, 4},
                  {8, 1}, {8, 2}, {8, 5},
                  {9, 3}, {9, 4}, {9, 6}});
    VertexSet targets{1, 2, 3, 4, 5, 6};
    RootSet exact = min_root_set(g, targets);
    CHECK(exact.roots == VertexSet{8, 9});
    CHECK(exact.optimal);

    MinRootOptions heur;
    heur.heuristic_only = true;
    RootSet greedy = min_root_set(g, targets, heur);
    CHECK_FALSE(greedy.optimal);
    CHECK(greedy.roots == VertexSet{5, 6, 7});
    CHECK(covers(reach_rows(g, targets), greedy.roots));
}

TEST_CASE("large instances fall back to the heuristic") {
    GraphFile fx = testutil::fixture("g20_casestudy.json");
    MinRootOptions opts;
    opts.exact_threshold = 10;
    RootSet rs = min_root_set(fx.graph, *fx.targets, opts);
    CHECK_FALSE(rs.optimal);
    CHECK(covers(reach_rows(fx.graph, *fx.targets), rs.roots));
    CHECK_THROWS_AS(all_min_root_sets(fx.graph, *fx.targets, opts), InputError);

    MinRootOptions heur;
    heur.heuristic_only = true;
    CHECK_THROWS_AS(all_min_root_sets(fx.graph, *fx.targets, heur), InputError);
}

TEST_CASE("empty target set is rejected") {
    DiGraph g = testutil::fixture("g5_forcing.json").graph;
    CHECK_THROWS_AS(min_root_set(g, VertexSet{}), InputError);
    CHECK_THROWS_AS(all_min_root_sets(g, VertexSet{}), InputError);
    CHECK_THROWS_AS(select_leaders(g, VertexSet{}), InputError);
}

TEST_CASE("exact solver matches exhaustive subset search") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 9); // 4..12
        DiGraph g = testutil::random_graph(rng, n, 0.18);
        VertexSet targets = testutil::random_nonempty_subset(rng, n, 0.4);
        std::vector<VertexSet> rows = reach_rows(g, targets);

        size_t best_size = static_cast<size_t>(n) + 1;
        std::vector<VertexSet> best;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<Vertex> members;
            for (int v = 1; v <= n; ++v) {
                if (mask & (1u << (v - 1))) {
                    members.push_back(v);
                }
            }
            VertexSet chosen(std::move(members));
            if (!covers(rows, chosen)) {
                continue;
            }
            if (chosen.size() < best_size) {
                best_size = chosen.size();
                best.clear();
            }
            if (chosen.size() == best_size) {
                best.push_back(chosen);
            }
        }
        std::sort(best.begin(), best.end());

        RootSet rs = min_root_set(g, targets);
        CHECK(rs.optimal);
        CHECK(rs.roots.size() == best_size);
        CHECK(rs.roots == best.front());
        CHECK(all_min_root_sets(g, targets) == best);

        MinRootOptions heur;
        heur.heuristic_only = true;
        RootSet greedy = min_root_set(g, targets, heur);
        CHECK(covers(rows, greedy.roots));
        CHECK(greedy.roots.size() >= best_size);
    }
}

TEST_CASE("leader selection walks the twenty-vertex fixture to a certificate") {
    GraphFile fx = testutil::fixture("g20_casestudy.json");
    SelectionResult result = select_leaders(fx.graph, *fx.targets);
    CHECK(result.leaders == VertexSet{2, 4, 8, 13});
    CHECK(result.initial.roots == VertexSet{4, 13});
    CHECK(result.initial.optimal);
    CHECK(additions(result) == std::vector<Vertex>{2, 8});
    CHECK(check_sufficient(fx.graph, result.leaders, *fx.targets).status == Status::Positive);
}

TEST_CASE("trace structure on the twenty-vertex fixture") {
    GraphFile fx = testutil::fixture("g20_casestudy.json");
    SelectionResult result = select_leaders(fx.graph, *fx.targets);
    const auto& tr = result.trace;
    REQUIRE(!tr.empty());
    CHECK(tr.front().kind == TraceEvent::Kind::Derived);
    for (size_t i = 0; i < tr.size(); ++i) {
        if (tr[i].kind == TraceEvent::Kind::AddLeader) {
            REQUIRE(i > 0);
            CHECK(tr[i - 1].kind == TraceEvent::Kind::LayerFail);
            CHECK(tr[i - 1].vertex == tr[i].vertex);
            CHECK(tr[i].leaders.contains(tr[i].vertex));
            if (i + 1 < tr.size()) {
                CHECK(tr[i + 1].kind == TraceEvent::Kind::Derived);
            }
        }
    }
    CHECK(tr.back().kind == TraceEvent::Kind::LayerPass);
    // final round: one derivation then four clean layers (adding leader 8
    // pulls vertex 16 up to distance three, shrinking the partition depth)
    REQUIRE(tr.size() >= 5);
    CHECK(tr[tr.size() - 5].kind == TraceEvent::Kind::Derived);
    for (size_t i = tr.size() - 4; i < tr.size(); ++i) {
        CHECK(tr[i].kind == TraceEvent::Kind::LayerPass);
        CHECK(tr[i].layer == static_cast<int>(i - (tr.size() - 4)) + 1);
    }
}

TEST_CASE("leader selection on the seven-vertex fixture") {
    GraphFile fx = testutil::fixture("g7_rootsets.json");
    SelectionResult result = select_leaders(fx.graph, *fx.targets);
    CHECK(result.leaders == VertexSet{1, 2, 5});
    CHECK(result.initial.roots == VertexSet{1, 2});
    CHECK(additions(result) == std::vector<Vertex>{5});
}

TEST_CASE("a forcing chain needs only its root") {
    DiGraph path(4, {{1, 2}, {2, 3}, {3, 4}});
    SelectionResult result = select_leaders(path, path.vertices());
    CHECK(result.leaders == VertexSet{1});
    CHECK(additions(result).empty());
}

TEST_CASE("selection always ends with a sufficient certificate") {
    std::mt19937_64 rng(72);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 8;
        DiGraph g = testutil::random_graph(rng, n, 0.2);
        VertexSet targets = testutil::random_nonempty_subset(rng, n, 0.5);
        SelectionResult result = select_leaders(g, targets);
        CHECK(check_sufficient(g, result.leaders, targets).status == Status::Positive);
        CHECK(result.initial.roots.is_subset_of(result.leaders));
        VertexSet added_set;
        for (Vertex v : additions(result)) {
            added_set.insert(v);
        }
        CHECK(added_set.is_subset_of(targets));
        CHECK(result.leaders == result.initial.roots.united(added_set));

        SelectionResult again = select_leaders(g, targets);
        CHECK(again.leaders == result.leaders);
        CHECK(again.trace.size() == result.trace.size());
    }
}
