#include <doctest.h>

#include <set>

#include "linkctr/errors.hpp"
#include "linkctr/events.hpp"
#include "linkctr/rng.hpp"

using namespace linkctr;

namespace {

EventStream directed(std::vector<EventRecord> events) {
    return {true, std::move(events)};
}

std::set<std::pair<std::uint64_t, std::uint64_t>> label_edges(const Graph& g) {
    std::set<std::pair<std::uint64_t, std::uint64_t>> out;
    for (const Edge& e : g.edges()) out.insert({g.label(e.u), g.label(e.v)});
    return out;
}

} // namespace

TEST_CASE("aggregate_events: minimal mutual pair") {
    const Graph g = aggregate_events(directed({{0, 1, 2}, {1, 2, 1}}), true);
    REQUIRE(g.edge_count() == 1);
    CHECK(g.edge(0).weight == 2.0);
}

TEST_CASE("aggregate_events: one-directional pair filtered out") {
    const Graph g = aggregate_events(directed({{0, 1, 2}, {1, 1, 2}}), true);
    CHECK(g.edge_count() == 0);
    CHECK(g.node_count() == 2); // both endpoints stay
}

TEST_CASE("aggregate_events: weight counts both directions") {
    std::vector<EventRecord> events;
    for (int i = 0; i < 5; ++i) events.push_back({i, 1, 2});
    for (int i = 0; i < 2; ++i) events.push_back({i, 2, 1});
    const Graph g = aggregate_events(directed(std::move(events)), true);
    REQUIRE(g.edge_count() == 1);
    CHECK(g.edge(0).weight == 7.0);
}

TEST_CASE("aggregate_events: mutual filter needs a directed stream") {
    EventStream stream{false, {{0, 1, 2}, {1, 2, 1}}};
    CHECK_THROWS_AS(aggregate_events(stream, true), config_error);
    CHECK(aggregate_events(stream, false).edge_count() == 1);
}

TEST_CASE("aggregate_events: mutual result is an edge-subgraph of the unfiltered one") {
    Rng rng(17, StreamKind::shuffle, 1);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<EventRecord> events;
        const int n_events = 30 + static_cast<int>(rng.below(40));
        for (int i = 0; i < n_events; ++i) {
            const auto src = rng.below(12);
            auto dst = rng.below(12);
            if (dst == src) dst = (dst + 1) % 12;
            events.push_back({i, src, dst});
        }
        const EventStream stream = directed(std::move(events));
        const auto all = label_edges(aggregate_events(stream, false));
        const auto mutual = label_edges(aggregate_events(stream, true));
        for (const auto& e : mutual) CHECK(all.count(e) == 1);
        CHECK(mutual.size() <= all.size());
    }
}
