#include <doctest.h>

#include <cmath>

#include "linkctr/errors.hpp"
#include "linkctr/generate.hpp"
#include "linkctr/si.hpp"

using namespace linkctr;

namespace {

Graph from(std::vector<RawEdge> edges) { return build_graph(edges); }

BranchingTree run(const Graph& g, node_id seed, double beta, std::uint64_t master,
                  std::uint64_t index = 0) {
    Rng rng(master, StreamKind::si_realization, index);
    return simulate_si(g, seed, beta, rng);
}

} // namespace

TEST_CASE("simulate_si: beta = 1 walks a path like BFS") {
    const Graph g = from({{0, 1}, {1, 2}});
    const BranchingTree bt = run(g, 0, 1.0, 1);
    CHECK(bt.round == std::vector<std::int32_t>{0, 1, 2});
    CHECK(bt.parent[1] == 0);
    CHECK(bt.parent[2] == 1);
    CHECK(bt.reached() == 3);
}

TEST_CASE("simulate_si: star center infects every leaf in round one") {
    const Graph g = from({{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    const BranchingTree bt = run(g, 0, 1.0, 2);
    for (node_id v = 1; v < 5; ++v) {
        CHECK(bt.parent[v] == 0);
        CHECK(bt.round[v] == 1);
    }
}

TEST_CASE("simulate_si: triangle seeded at a parents both others") {
    const Graph g = from({{0, 1}, {1, 2}, {2, 0}});
    const BranchingTree bt = run(g, 0, 1.0, 3);
    CHECK(bt.parent[1] == 0);
    CHECK(bt.parent[2] == 0);
}

TEST_CASE("simulate_si: single edge at beta = 0.25 has geometric rounds") {
    const Graph g = from({{0, 1}});
    double total = 0;
    const int runs = 10000;
    for (int i = 0; i < runs; ++i) {
        const BranchingTree bt = run(g, 0, 0.25, 42, i);
        total += bt.round[1];
    }
    const double mean = total / runs;
    CHECK(mean == doctest::Approx(4.0).epsilon(0.15 / 4.0));
}

TEST_CASE("simulate_si: saturates the seed's component for any beta") {
    const Graph g = from({{0, 1}, {1, 2}, {2, 0}, {3, 4}});
    for (double beta : {0.05, 0.5, 1.0}) {
        const BranchingTree bt = run(g, 0, beta, 7);
        CHECK(bt.reached() == 3);
        CHECK(bt.round[3] == -1);
        CHECK(bt.round[4] == -1);
    }
}

TEST_CASE("simulate_si: tree edge count is reached minus one") {
    const Graph g = generate_er(60, 0.08, 5);
    const BranchingTree bt = run(g, 0, 0.4, 8);
    std::size_t tree_edges = 0;
    for (node_id v = 0; v < g.node_count(); ++v)
        if (bt.parent_edge[v] != kNoEdge) ++tree_edges;
    CHECK(tree_edges == bt.reached() - 1);
}

TEST_CASE("simulate_si: beta = 1 rounds equal BFS distances") {
    const Graph g = generate_er(80, 0.06, 6);
    const BranchingTree bt = run(g, 3, 1.0, 9);
    const auto dist = bfs_distances(g, 3);
    for (node_id v = 0; v < g.node_count(); ++v) {
        if (dist[v] == kUnreached) {
            CHECK(bt.round[v] == -1);
        } else {
            CHECK(bt.round[v] == dist[v]);
        }
    }
}

TEST_CASE("simulate_si: equidistant parents drawn uniformly (chi-squared)") {
    // 4-cycle seeded opposite node 2: both 1 and 3 reach it in round 2
    const Graph g = from({{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    int from_1 = 0;
    const int runs = 10000;
    for (int i = 0; i < runs; ++i) {
        const BranchingTree bt = run(g, 0, 1.0, 99, i);
        REQUIRE((bt.parent[2] == 1 || bt.parent[2] == 3));
        if (bt.parent[2] == 1) ++from_1;
    }
    const double expected = runs / 2.0;
    const double chi2 = (from_1 - expected) * (from_1 - expected) / expected +
                        (runs - from_1 - expected) * (runs - from_1 - expected) / expected;
    CHECK(chi2 < 6.635); // 99% quantile, 1 dof
}

TEST_CASE("simulate_si: identical rng stream gives an identical tree") {
    const Graph g = generate_er(50, 0.1, 10);
    const BranchingTree a = run(g, 2, 0.3, 77, 5);
    const BranchingTree b = run(g, 2, 0.3, 77, 5);
    CHECK(a.parent == b.parent);
    CHECK(a.parent_edge == b.parent_edge);
    CHECK(a.round == b.round);
    CHECK(a.order == b.order);
}

TEST_CASE("simulate_si: depths follow parents; rounds match depths at beta = 1") {
    const Graph g = generate_er(50, 0.1, 12);
    const BranchingTree bt = run(g, 0, 1.0, 13);
    const auto depth = tree_depths(bt);
    for (node_id v : bt.order) {
        if (v == bt.root) continue;
        CHECK(depth[v] == depth[bt.parent[v]] + 1);
        CHECK(depth[v] == bt.round[v]);
    }
}

TEST_CASE("simulate_si: argument validation") {
    const Graph g = from({{0, 1}});
    Rng rng(0, StreamKind::si_realization, 0);
    CHECK_THROWS_AS(simulate_si(g, 0, 0.0, rng), argument_error);
    CHECK_THROWS_AS(simulate_si(g, 0, 1.5, rng), argument_error);
    CHECK_THROWS_AS(simulate_si(g, 9, 1.0, rng), argument_error);
}
