#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "linkctr/graph.hpp"
#include "linkctr/si.hpp"

namespace linkctr {

// Per-edge transmission centrality accumulated over realizations.
// values[e] = sums[e] / contributions[e] (0 when nothing ever contributed);
// contributions[e] counts the realizations in which edge e was unmasked.
struct EdgeCentrality {
    std::vector<double> values;
    std::vector<std::int64_t> sums;
    std::vector<std::int64_t> contributions;
    std::uint64_t realizations = 0;

    bool flagged(edge_id e) const { return contributions[e] == 0; }
};

struct CtrOptions {
    int threads = 0;                    // 0 = hardware concurrency
    std::uint64_t progress_every = 0;   // 0 = silent
    std::function<void(std::uint64_t done, std::uint64_t total)> progress;
};

// River-basin pass over one branching tree: every tree edge gets the number
// of nodes that received the information through it (the subtree size below
// its child end), non-tree edges get 0. Leaf counters start at 1 and are
// drained into the ascendant edge as leaves peel off.
std::vector<std::int64_t> per_realization_ctr(const Graph& g, const BranchingTree& bt);

// Average transmission centrality over SI processes initiated from every
// node. Requires a connected graph (run largest_connected_component first).
EdgeCentrality exact_average_ctr(const Graph& g, double beta,
                                 std::uint64_t master_seed,
                                 const CtrOptions& opts = {});

// Heuristic estimate from num_seeds seeds sampled uniformly without
// replacement. Per realization an edge is masked (contributes nothing) when
// min(dist(seed,u), dist(seed,v)) < unbias_distance; averages divide by the
// per-edge unmasked realization count. With num_seeds = |V| and distance 0
// this reproduces exact_average_ctr bit for bit.
EdgeCentrality approx_ctr(const Graph& g, double beta, std::uint64_t num_seeds,
                          std::int32_t unbias_distance, std::uint64_t master_seed,
                          const CtrOptions& opts = {});

struct DistanceScan {
    std::vector<std::pair<std::int32_t, double>> table; // (d, Pearson r vs exact)
    std::int32_t recommended = 0;                       // argmax r, ties to smaller d
};

// Correlates the heuristic estimator against the full exact baseline for each
// candidate unbias distance. The num_seeds realizations are computed once and
// re-masked per distance.
DistanceScan scan_unbias_distance(const Graph& g, double beta,
                                  std::uint64_t num_seeds,
                                  std::span<const std::int32_t> d_range,
                                  std::uint64_t master_seed,
                                  const CtrOptions& opts = {});

} // namespace linkctr
