#include <doctest.h>

#include <numeric>

#include "linkctr/ctr.hpp"
#include "linkctr/errors.hpp"
#include "linkctr/generate.hpp"
#include "oracles.hpp"

using namespace linkctr;

namespace {

Graph from(std::vector<RawEdge> edges) { return build_graph(edges); }

BranchingTree run_si(const Graph& g, node_id seed, double beta, std::uint64_t master) {
    Rng rng(master, StreamKind::si_realization, seed);
    return simulate_si(g, seed, beta, rng);
}

edge_id find_edge(const Graph& g, node_id u, node_id v) {
    for (auto [w, e] : g.neighbors(u))
        if (w == v) return e;
    REQUIRE(false);
    return kNoEdge;
}

} // namespace

TEST_CASE("per_realization_ctr: hand-traced path") {
    const Graph g = from({{0, 1}, {1, 2}});
    const BranchingTree bt = run_si(g, 0, 1.0, 1);
    const auto counts = per_realization_ctr(g, bt);
    CHECK(counts[find_edge(g, 0, 1)] == 2);
    CHECK(counts[find_edge(g, 1, 2)] == 1);
}

TEST_CASE("per_realization_ctr: star from the center gives 1 everywhere") {
    const Graph g = from({{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    const auto counts = per_realization_ctr(g, run_si(g, 0, 1.0, 2));
    for (edge_id e = 0; e < g.edge_count(); ++e) CHECK(counts[e] == 1);
}

TEST_CASE("per_realization_ctr: complete binary tree of depth two") {
    const Graph g = from({{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}});
    const BranchingTree bt = run_si(g, 0, 1.0, 3);
    const auto counts = per_realization_ctr(g, bt);
    CHECK(counts == oracles::root_path_counts(g, bt));
    CHECK(counts[find_edge(g, 0, 1)] == 3);
    CHECK(counts[find_edge(g, 0, 2)] == 3);
    CHECK(counts[find_edge(g, 1, 3)] == 1);
    CHECK(counts[find_edge(g, 2, 6)] == 1);
}

TEST_CASE("per_realization_ctr: three routes agree on random trees") {
    Rng shape_rng(31, StreamKind::shuffle, 0);
    for (int trial = 0; trial < 200; ++trial) {
        const node_id n = 2 + static_cast<node_id>(shape_rng.below(60));
        const auto rt = oracles::random_recursive_tree(n, shape_rng);
        const auto peel = per_realization_ctr(rt.graph, rt.tree);
        CHECK(peel == oracles::root_path_counts(rt.graph, rt.tree));
        CHECK(peel == oracles::literal_leaf_peel_counts(rt.graph, rt.tree));
    }
}

TEST_CASE("per_realization_ctr: parent edge count is one plus its children's") {
    Rng rng(32, StreamKind::shuffle, 0);
    const auto rt = oracles::random_recursive_tree(80, rng);
    const auto counts = per_realization_ctr(rt.graph, rt.tree);
    std::vector<std::int64_t> child_sum(rt.graph.node_count(), 0);
    for (node_id v : rt.tree.order)
        if (v != rt.tree.root)
            child_sum[rt.tree.parent[v]] += counts[rt.tree.parent_edge[v]];
    for (node_id v : rt.tree.order)
        if (v != rt.tree.root)
            CHECK(counts[rt.tree.parent_edge[v]] == 1 + child_sum[v]);
}

TEST_CASE("per_realization_ctr: conservation identities on random graphs") {
    Rng pick(33, StreamKind::shuffle, 0);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = generate_er(40, 0.12, 100 + trial);
        const node_id seed = static_cast<node_id>(pick.below(g.node_count()));
        const double beta = trial % 2 ? 1.0 : 0.35;
        const BranchingTree bt = run_si(g, seed, beta, 200 + trial);
        const auto counts = per_realization_ctr(g, bt);
        const auto depth = tree_depths(bt);

        std::int64_t count_total = std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
        std::int64_t depth_total = 0;
        for (node_id v : bt.order) depth_total += depth[v];
        CHECK(count_total == depth_total);

        std::int64_t root_adjacent = 0;
        for (node_id v : bt.order)
            if (v != bt.root && bt.parent[v] == bt.root)
                root_adjacent += counts[bt.parent_edge[v]];
        CHECK(root_adjacent == static_cast<std::int64_t>(bt.reached()) - 1);
    }
}

TEST_CASE("per_realization_ctr: rejects trees from another graph") {
    const Graph g = from({{0, 1}, {1, 2}});
    const Graph other = from({{0, 1}, {1, 2}, {2, 3}});
    const BranchingTree bt = run_si(other, 0, 1.0, 4);
    CHECK_THROWS_AS(per_realization_ctr(g, bt), structural_error);
}

TEST_CASE("exact_average_ctr: closed-form fixtures") {
    SUBCASE("P3 averages 4/3 on both edges") {
        const Graph g = from({{0, 1}, {1, 2}});
        const EdgeCentrality ec = exact_average_ctr(g, 1.0, 5);
        CHECK(ec.values[0] == 4.0 / 3.0);
        CHECK(ec.values[1] == 4.0 / 3.0);
        CHECK(ec.contributions[0] == 3);
        CHECK(ec.realizations == 3);
    }
    SUBCASE("triangle averages 2/3 everywhere") {
        const Graph g = from({{0, 1}, {1, 2}, {2, 0}});
        const EdgeCentrality ec = exact_average_ctr(g, 1.0, 6);
        for (edge_id e = 0; e < 3; ++e) CHECK(ec.values[e] == 2.0 / 3.0);
    }
    SUBCASE("single edge averages 1") {
        const Graph g = from({{0, 1}});
        const EdgeCentrality ec = exact_average_ctr(g, 1.0, 7);
        CHECK(ec.values[0] == 1.0);
    }
}

TEST_CASE("exact_average_ctr: disconnected input is refused") {
    const Graph g = from({{0, 1}, {2, 3}});
    CHECK_THROWS_WITH_AS(exact_average_ctr(g, 1.0, 8),
                         doctest::Contains("largest_connected_component"),
                         argument_error);
}

TEST_CASE("approx_ctr: full seeds at d = 0 reproduce the exact averages bit for bit") {
    const Graph g = generate_er(40, 0.15, 21);
    const Graph lcc = largest_connected_component(g);
    const EdgeCentrality exact = exact_average_ctr(lcc, 0.6, 99);
    const EdgeCentrality approx = approx_ctr(lcc, 0.6, lcc.node_count(), 0, 99);
    CHECK(exact.values == approx.values);
    CHECK(exact.sums == approx.sums);
    CHECK(exact.contributions == approx.contributions);
}

TEST_CASE("approx_ctr: masking on the P5 path") {
    // nodes 0-1-2-3-4; with d = 2 an edge is masked when an endpoint is
    // within one hop of the seed
    const Graph g = from({{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    const EdgeCentrality ec = approx_ctr(g, 1.0, 5, 2, 11);
    CHECK(ec.contributions[find_edge(g, 0, 1)] == 2); // unmasked from seeds 3, 4
    CHECK(ec.contributions[find_edge(g, 1, 2)] == 1); // unmasked from seed 4
    CHECK(ec.contributions[find_edge(g, 2, 3)] == 1); // unmasked from seed 0
    CHECK(ec.contributions[find_edge(g, 3, 4)] == 2); // unmasked from seeds 0, 1
}

TEST_CASE("approx_ctr: fully masked edges are flagged zeros") {
    const Graph g = from({{0, 1}, {1, 2}});
    const EdgeCentrality ec = approx_ctr(g, 1.0, 3, 10, 12);
    for (edge_id e = 0; e < g.edge_count(); ++e) {
        CHECK(ec.contributions[e] == 0);
        CHECK(ec.values[e] == 0.0);
        CHECK(ec.flagged(e));
    }
}

TEST_CASE("approx_ctr: argument validation") {
    const Graph g = from({{0, 1}});
    CHECK_THROWS_AS(approx_ctr(g, 1.0, 3, 0, 0), argument_error);  // > |V|
    CHECK_THROWS_AS(approx_ctr(g, 1.0, 0, 0, 0), argument_error);
    CHECK_THROWS_AS(approx_ctr(g, 1.0, 1, -1, 0), argument_error);
}

TEST_CASE("centrality separates SBM bridges from block-internal edges") {
    const Graph g = largest_connected_component(
        generate_sbm({40, 40, 40}, 0.25, 0.01, 77));
    const EdgeCentrality ec = exact_average_ctr(g, 1.0, 13);
    const auto blocks = sbm_blocks({40, 40, 40});
    double inter = 0, intra = 0;
    int n_inter = 0, n_intra = 0;
    for (edge_id e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        const bool cross = blocks[g.label(ed.u)] != blocks[g.label(ed.v)];
        (cross ? inter : intra) += ec.values[e];
        (cross ? n_inter : n_intra) += 1;
    }
    REQUIRE(n_inter > 0);
    REQUIRE(n_intra > 0);
    CHECK(inter / n_inter > intra / n_intra);
}

TEST_CASE("scan_unbias_distance: P3 with every seed at d = 0 correlates exactly") {
    const Graph g = from({{0, 1}, {1, 2}});
    const std::vector<std::int32_t> d_range{0};
    const DistanceScan scan = scan_unbias_distance(g, 1.0, 3, d_range, 14);
    REQUIRE(scan.table.size() == 1);
    CHECK(scan.table[0].second == 1.0);
    CHECK(scan.recommended == 0);
}

TEST_CASE("scan_unbias_distance: recommends the argmax with ties to smaller d") {
    const Graph g = largest_connected_component(generate_sbm({30, 30}, 0.3, 0.03, 5));
    const std::vector<std::int32_t> d_range{0, 1, 2, 3};
    const DistanceScan scan = scan_unbias_distance(g, 1.0, 15, d_range, 15);
    REQUIRE(scan.table.size() == d_range.size());
    double best = scan.table[0].second;
    for (const auto& [d, r] : scan.table) best = std::max(best, r);
    for (const auto& [d, r] : scan.table) {
        if (r == best) {
            CHECK(scan.recommended <= d);
        }
    }
    CHECK(std::any_of(scan.table.begin(), scan.table.end(),
                      [&](auto row) { return row.first == scan.recommended && row.second == best; }));
}
