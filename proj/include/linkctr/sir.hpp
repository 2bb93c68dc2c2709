#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "linkctr/graph.hpp"
#include "linkctr/rng.hpp"
#include "linkctr/ties.hpp"

namespace linkctr {

enum class WeightMode { unweighted, weighted };

// Per-edge base weight omega: all 1 in unweighted mode; w/<w> capped at 1 in
// weighted mode (<w> is the graph-wide mean interaction count).
std::vector<double> normalize_weights(const Graph& g, WeightMode mode);

// The weakest round(f*E) edges of a ranking rescaled by delta:
// effective = delta*base on controlled edges, base elsewhere.
struct ControlPlan {
    std::vector<double> base;
    std::vector<double> effective;
    std::vector<edge_id> controlled;
    double delta = 1.0;
};

ControlPlan build_control_plan(const Graph& g, const EdgeRanking& ranking,
                               double f, double delta,
                               std::span<const double> omega);

struct SirOutcome {
    std::int64_t recovered_final = 0;
    std::int32_t rounds = 0;
    node_id seed = kNoNode;
};

// per-round (S, I, R) counts, starting with the initial state
struct SirTrace {
    std::vector<std::array<std::int64_t, 3>> compartments;
};

// Synchronous SIR: each round every infected-susceptible edge (i,j) transmits
// with probability effective[e]*beta (all trials against round-start states),
// then every node infected at round start recovers with probability mu. Runs
// until no node is infected.
SirOutcome simulate_sir(const Graph& g, const ControlPlan& plan, double beta,
                        double mu, node_id seed, Rng& rng,
                        SirTrace* trace = nullptr);

struct ExperimentConfig {
    double beta = 0.25;
    double mu = 0.1;
    std::vector<double> f_grid;
    std::vector<double> delta_grid;
    std::vector<RankStrategy> strategies;
    std::uint64_t num_seeds = 1000;
    std::uint64_t master_seed = 0;
    WeightMode mode = WeightMode::unweighted;
    int threads = 0;
};

struct ExperimentRow {
    RankStrategy strategy;
    double f = 0.0;
    double delta = 1.0;
    double mean_R = 0.0;
    double stderr_R = 0.0;
    std::uint64_t num_runs = 0;
};

struct RatioRow {
    std::string pair; // "<numerator>_vs_<denominator>"
    double f = 0.0;
    double delta = 1.0;
    double phi = 1.0;
    double stderr_phi = 0.0;
};

struct ExperimentResult {
    std::vector<ExperimentRow> rows;
    std::vector<RatioRow> ratios;
    std::vector<node_id> seeds; // the shared seed node set
};

// Controlled-spreading experiment over (strategy, f, delta). All strategies
// run from the same sampled seed set with the same per-run RNG substream, so
// delta=1 and f=0 give phi = 1 with zero variance. Rankings must cover every
// non-random requested strategy; the random ranking is built internally from
// the master seed. Ratios reported: each targeted strategy vs random, and
// overlap_then_inverse_ctr vs overlap_then_strength when both are present.
ExperimentResult run_experiment(const Graph& g,
                                const std::map<RankStrategy, EdgeRanking>& rankings,
                                const ExperimentConfig& cfg);

} // namespace linkctr
