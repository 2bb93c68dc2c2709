#pragma once

#include <cstdint>
#include <vector>

#include "linkctr/graph.hpp"

namespace linkctr {

// G(n,p) Erdos-Renyi graph, unit weights, reproducible for a fixed seed.
Graph generate_er(node_id n, double p, std::uint64_t rng_seed);

// Planted-partition SBM: nodes laid out block by block (first sizes[0] nodes
// are block 0, and so on), edge probability p_in inside a block and p_out
// across blocks. Unit weights, reproducible for a fixed seed.
Graph generate_sbm(const std::vector<node_id>& block_sizes, double p_in,
                   double p_out, std::uint64_t rng_seed);

// block index per node for the layout generate_sbm uses
std::vector<int> sbm_blocks(const std::vector<node_id>& block_sizes);

} // namespace linkctr
