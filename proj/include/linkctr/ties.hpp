#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "linkctr/graph.hpp"

namespace linkctr {

// Neighborhood overlap O = n_ij / ((k_i-1) + (k_j-1) - n_ij), defined as 0
// for an isolated dyad (zero denominator).
double overlap(const Graph& g, edge_id e);
std::vector<double> overlap_all(const Graph& g);

// Dyadic tie strength: the aggregated interaction count carried by the edge
// weight (1 on unweighted builds).
double dyadic_strength(const Graph& g, edge_id e);
std::vector<double> strength_all(const Graph& g);

// Fraction of edges with overlap exactly 0.
double zero_overlap_fraction(const Graph& g);

enum class RankStrategy {
    overlap_then_strength,    // (O, w): O ascending, then w ascending
    overlap_then_inverse_ctr, // (O, C_tr^-1): O ascending, then C_tr descending
    random,
};

std::string to_string(RankStrategy s);
RankStrategy parse_strategy(const std::string& name);

// metric vectors indexed by edge id; leave a vector empty if not available
struct EdgeMetrics {
    std::vector<double> overlap;
    std::vector<double> strength;
    std::vector<double> ctr;
};

struct EdgeRanking {
    RankStrategy strategy = RankStrategy::random;
    std::vector<edge_id> order; // permutation of edge ids, weakest first
    std::uint64_t inputs_hash = 0;
};

// Total order over the edges under a strategy. Residual ties break by
// ascending edge id; the random strategy is a uniform shuffle from rng_seed.
// Throws argument_error when a required metric vector is missing or sized
// wrong.
EdgeRanking rank_edges(std::size_t edge_count, RankStrategy strategy,
                       const EdgeMetrics& metrics, std::uint64_t rng_seed = 0);

struct PearsonResult {
    double r = 0.0;
    double p = 1.0;
    std::size_t n = 0;
};

// Sample Pearson correlation with the two-sided p-value of
// t = r sqrt((n-2)/(1-r^2)) under Student-t with n-2 dof. Needs n >= 3 and
// nonzero variance on both sides.
PearsonResult pearson(std::span<const double> x, std::span<const double> y);

} // namespace linkctr
