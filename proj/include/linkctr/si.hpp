#pragma once

#include <cstdint>
#include <vector>

#include "linkctr/graph.hpp"
#include "linkctr/rng.hpp"

namespace linkctr {

// Parent-pointer forest recorded during one SI realization, rooted at the
// seed. round[v] is the synchronous round at which v became infected (0 at
// the root, -1 if never reached); at beta=1 it equals the BFS distance from
// the root. order lists reached nodes root first, parents before children.
struct BranchingTree {
    node_id root = kNoNode;
    std::vector<node_id> parent;      // kNoNode at root and unreached nodes
    std::vector<edge_id> parent_edge; // kNoEdge at root and unreached nodes
    std::vector<std::int32_t> round;
    std::vector<node_id> order;

    std::size_t reached() const { return order.size(); }
};

// Synchronous-round SI process: each round every edge between an infected and
// a susceptible node fires independently with probability beta; a susceptible
// node with at least one firing edge becomes infected and its parent is drawn
// uniformly among the infectors whose edge fired that round. Runs until no
// susceptible node is reachable, so the tree spans the seed's component.
BranchingTree simulate_si(const Graph& g, node_id seed, double beta, Rng& rng);

// root-path length per reached node (root 0, unreached -1); equals round
// only at beta=1
std::vector<std::int32_t> tree_depths(const BranchingTree& bt);

} // namespace linkctr
