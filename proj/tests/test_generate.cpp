#include <doctest.h>

#include <cmath>

#include "linkctr/errors.hpp"
#include "linkctr/generate.hpp"

using namespace linkctr;

TEST_CASE("generate_sbm: full blocks, no bridges") {
    const Graph g = generate_sbm({3, 3}, 1.0, 0.0, 1);
    CHECK(g.node_count() == 6);
    CHECK(g.edge_count() == 6); // two disjoint triangles
    const auto blocks = sbm_blocks({3, 3});
    for (const Edge& e : g.edges()) CHECK(blocks[e.u] == blocks[e.v]);
}

TEST_CASE("generate_er: p = 0 gives an empty edge set, p = 1 the clique") {
    CHECK(generate_er(10, 0.0, 4).edge_count() == 0);
    CHECK(generate_er(10, 1.0, 4).edge_count() == 45);
}

TEST_CASE("generators: reproducible for a fixed seed") {
    const Graph a = generate_er(30, 0.2, 123);
    const Graph b = generate_er(30, 0.2, 123);
    REQUIRE(a.edge_count() == b.edge_count());
    for (edge_id e = 0; e < a.edge_count(); ++e) {
        CHECK(a.edge(e).u == b.edge(e).u);
        CHECK(a.edge(e).v == b.edge(e).v);
    }
    CHECK(generate_er(30, 0.2, 124).edge_count() != 0);
}

TEST_CASE("generate_sbm: inter-block edge count within 3 sigma of binomial mean") {
    // 2500 cross pairs at p_out = 0.01: mean 25, sigma ~ 4.97
    const Graph g = generate_sbm({50, 50}, 0.3, 0.01, 2024);
    const auto blocks = sbm_blocks({50, 50});
    int inter = 0;
    for (const Edge& e : g.edges())
        if (blocks[e.u] != blocks[e.v]) ++inter;
    const double mean = 2500 * 0.01;
    const double sigma = std::sqrt(2500 * 0.01 * 0.99);
    CHECK(std::abs(inter - mean) <= 3.0 * sigma);
}

TEST_CASE("generators: probabilities validated") {
    CHECK_THROWS_AS(generate_er(5, 1.5, 0), argument_error);
    CHECK_THROWS_AS(generate_sbm({3, 3}, -0.1, 0.0, 0), argument_error);
}
