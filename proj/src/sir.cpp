#include "linkctr/sir.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

#include "linkctr/errors.hpp"

namespace linkctr {

namespace {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

} // namespace

std::vector<double> normalize_weights(const Graph& g, WeightMode mode) {
    std::vector<double> omega(g.edge_count(), 1.0);
    if (mode == WeightMode::unweighted) return omega;

    if (g.edge_count() == 0) return omega;
    double mean = 0.0;
    for (const Edge& e : g.edges()) mean += e.weight;
    mean /= static_cast<double>(g.edge_count());
    if (!(mean > 0.0))
        throw argument_error("weighted mode needs a positive mean edge weight");

    // w/<w>, capped at 1 so heavy links cannot stall the spreading
    for (edge_id e = 0; e < g.edge_count(); ++e)
        omega[e] = std::min(g.edge(e).weight / mean, 1.0);
    return omega;
}

ControlPlan build_control_plan(const Graph& g, const EdgeRanking& ranking,
                               double f, double delta,
                               std::span<const double> omega) {
    if (!(f >= 0.0 && f <= 1.0))
        throw argument_error("control fraction f must be in [0,1]");
    if (!(delta >= 0.0 && delta <= 1.0))
        throw argument_error("delta must be in [0,1]");
    if (omega.size() != g.edge_count())
        throw argument_error("omega must cover all edges");
    if (ranking.order.size() != g.edge_count())
        throw structural_error("ranking does not cover this graph's edges");

    ControlPlan plan;
    plan.delta = delta;
    plan.base.assign(omega.begin(), omega.end());
    plan.effective = plan.base;

    // weakest round(f*E) edges, rounding half-up
    const auto n_controlled = static_cast<std::size_t>(
        std::floor(f * static_cast<double>(g.edge_count()) + 0.5));
    plan.controlled.assign(ranking.order.begin(),
                           ranking.order.begin() + n_controlled);
    for (edge_id e : plan.controlled) plan.effective[e] = delta * plan.base[e];
    return plan;
}

SirOutcome simulate_sir(const Graph& g, const ControlPlan& plan, double beta,
                        double mu, node_id seed, Rng& rng, SirTrace* trace) {
    if (!(beta > 0.0 && beta <= 1.0))
        throw argument_error("simulate_sir: beta must be in (0,1]");
    if (!(mu > 0.0 && mu <= 1.0))
        throw argument_error("simulate_sir: mu must be in (0,1]");
    if (seed >= g.node_count())
        throw argument_error("simulate_sir: seed node out of range");

    enum : std::uint8_t { S, I, R };
    const node_id n = g.node_count();
    std::vector<std::uint8_t> state(n, S);
    state[seed] = I;

    std::vector<node_id> infected{seed}, surviving, newly;
    std::int64_t s_count = n - 1, i_count = 1, r_count = 0;
    if (trace) trace->compartments.push_back({s_count, i_count, r_count});

    std::int32_t rounds = 0;
    while (!infected.empty()) {
        ++rounds;
        newly.clear();

        // every infected-susceptible edge tries against round-start states
        for (node_id u : infected) {
            for (auto [v, e] : g.neighbors(u)) {
                if (state[v] != S) continue;
                if (rng.uniform() < plan.effective[e] * beta) {
                    // stays S until all trials of this round ran; mark via list
                    newly.push_back(v);
                }
            }
        }

        surviving.clear();
        for (node_id u : infected) {
            if (rng.uniform() < mu) {
                state[u] = R;
                --i_count;
                ++r_count;
            } else {
                surviving.push_back(u);
            }
        }

        std::sort(newly.begin(), newly.end());
        newly.erase(std::unique(newly.begin(), newly.end()), newly.end());
        for (node_id v : newly) {
            state[v] = I;
            --s_count;
            ++i_count;
        }

        infected.resize(surviving.size() + newly.size());
        std::merge(surviving.begin(), surviving.end(), newly.begin(), newly.end(),
                   infected.begin());

        if (trace) trace->compartments.push_back({s_count, i_count, r_count});
    }

    return {r_count, rounds, seed};
}

namespace {

struct PairedStats {
    double mean_a = 0, mean_b = 0, var_a = 0, var_b = 0, cov = 0;
    std::size_t n = 0;
};

PairedStats paired_stats(std::span<const std::int64_t> a,
                         std::span<const std::int64_t> b) {
    PairedStats st;
    st.n = a.size();
    for (std::size_t i = 0; i < st.n; ++i) {
        st.mean_a += static_cast<double>(a[i]);
        st.mean_b += static_cast<double>(b[i]);
    }
    st.mean_a /= static_cast<double>(st.n);
    st.mean_b /= static_cast<double>(st.n);
    for (std::size_t i = 0; i < st.n; ++i) {
        const double da = static_cast<double>(a[i]) - st.mean_a;
        const double db = static_cast<double>(b[i]) - st.mean_b;
        st.var_a += da * da;
        st.var_b += db * db;
        st.cov += da * db;
    }
    if (st.n > 1) {
        st.var_a /= static_cast<double>(st.n - 1);
        st.var_b /= static_cast<double>(st.n - 1);
        st.cov /= static_cast<double>(st.n - 1);
    }
    return st;
}

} // namespace

ExperimentResult run_experiment(const Graph& g,
                                const std::map<RankStrategy, EdgeRanking>& rankings,
                                const ExperimentConfig& cfg) {
    if (cfg.f_grid.empty() || cfg.delta_grid.empty() || cfg.strategies.empty())
        throw argument_error("experiment grids and strategies must be nonempty");
    if (cfg.num_seeds < 1) throw argument_error("num_seeds must be >= 1");
    if (cfg.num_seeds > g.node_count())
        throw argument_error("num_seeds cannot exceed the node count");

    const std::vector<double> omega = normalize_weights(g, cfg.mode);

    // resolve one ranking per strategy; the random one comes from the master seed
    std::map<RankStrategy, EdgeRanking> resolved(rankings);
    for (RankStrategy s : cfg.strategies) {
        if (s == RankStrategy::random) {
            if (!resolved.count(s))
                resolved[s] = rank_edges(g.edge_count(), RankStrategy::random, {},
                                         cfg.master_seed);
        } else if (!resolved.count(s)) {
            throw argument_error("missing ranking for strategy " + to_string(s));
        }
    }

    // shared seed node set: the paired design keys every run's substream by
    // the run slot only, so strategies see identical randomness
    std::vector<node_id> seed_nodes;
    {
        Rng rng(cfg.master_seed, StreamKind::sir_seed_sample, 0);
        std::vector<node_id> pool(g.node_count());
        std::iota(pool.begin(), pool.end(), 0);
        for (std::uint64_t i = 0; i < cfg.num_seeds; ++i) {
            const std::uint64_t j = i + rng.below(pool.size() - i);
            std::swap(pool[i], pool[j]);
        }
        pool.resize(cfg.num_seeds);
        seed_nodes = std::move(pool);
    }

    struct Config {
        RankStrategy strategy;
        std::size_t f_idx, d_idx;
        ControlPlan plan;
    };
    std::vector<Config> configs;
    for (RankStrategy s : cfg.strategies)
        for (std::size_t fi = 0; fi < cfg.f_grid.size(); ++fi)
            for (std::size_t di = 0; di < cfg.delta_grid.size(); ++di)
                configs.push_back({s, fi, di,
                                   build_control_plan(g, resolved.at(s), cfg.f_grid[fi],
                                                      cfg.delta_grid[di], omega)});

    // final R per (config, run slot); slots are preassigned so the layout is
    // identical for any thread count
    std::vector<std::vector<std::int64_t>> final_r(
        configs.size(), std::vector<std::int64_t>(cfg.num_seeds));

    const std::size_t total_runs = configs.size() * cfg.num_seeds;
    const int threads = std::max(
        1, std::min<int>(resolve_threads(cfg.threads), static_cast<int>(total_runs)));
    std::atomic<std::size_t> next{0};

    auto worker = [&]() {
        for (;;) {
            const std::size_t t = next.fetch_add(1);
            if (t >= total_runs) break;
            const std::size_t ci = t / cfg.num_seeds;
            const std::size_t run = t % cfg.num_seeds;
            Rng rng(cfg.master_seed, StreamKind::sir_run, run);
            const SirOutcome out = simulate_sir(g, configs[ci].plan, cfg.beta,
                                                cfg.mu, seed_nodes[run], rng);
            final_r[ci][run] = out.recovered_final;
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    ExperimentResult result;
    result.seeds = seed_nodes;

    auto config_index = [&](RankStrategy s, std::size_t fi, std::size_t di) {
        for (std::size_t i = 0; i < configs.size(); ++i)
            if (configs[i].strategy == s && configs[i].f_idx == fi &&
                configs[i].d_idx == di)
                return i;
        return configs.size();
    };

    for (const Config& c : configs) {
        const auto& r = final_r[config_index(c.strategy, c.f_idx, c.d_idx)];
        const PairedStats st = paired_stats(r, r);
        result.rows.push_back({c.strategy, cfg.f_grid[c.f_idx],
                               cfg.delta_grid[c.d_idx], st.mean_a,
                               cfg.num_seeds > 1
                                   ? std::sqrt(st.var_a / static_cast<double>(st.n))
                                   : 0.0,
                               cfg.num_seeds});
    }

    // ratios of mean R between paired strategies, stderr by the delta method
    // (the covariance term makes identical runs collapse to exactly zero)
    auto emit_ratio = [&](RankStrategy num, RankStrategy den) {
        for (std::size_t fi = 0; fi < cfg.f_grid.size(); ++fi) {
            for (std::size_t di = 0; di < cfg.delta_grid.size(); ++di) {
                const std::size_t a = config_index(num, fi, di);
                const std::size_t b = config_index(den, fi, di);
                if (a == configs.size() || b == configs.size()) continue;
                const PairedStats st = paired_stats(final_r[a], final_r[b]);
                const double phi = st.mean_a / st.mean_b;
                double se = 0.0;
                if (st.n > 1 && st.mean_b != 0.0) {
                    const double var_phi =
                        (st.var_a + phi * phi * st.var_b - 2.0 * phi * st.cov) /
                        (static_cast<double>(st.n) * st.mean_b * st.mean_b);
                    se = std::sqrt(std::max(0.0, var_phi));
                }
                result.ratios.push_back({to_string(num) + "_vs_" + to_string(den),
                                         cfg.f_grid[fi], cfg.delta_grid[di], phi, se});
            }
        }
    };

    const auto& strategies = cfg.strategies;
    auto has = [&](RankStrategy s) {
        return std::find(strategies.begin(), strategies.end(), s) != strategies.end();
    };
    if (has(RankStrategy::overlap_then_inverse_ctr) && has(RankStrategy::random))
        emit_ratio(RankStrategy::overlap_then_inverse_ctr, RankStrategy::random);
    if (has(RankStrategy::overlap_then_strength) && has(RankStrategy::random))
        emit_ratio(RankStrategy::overlap_then_strength, RankStrategy::random);
    if (has(RankStrategy::overlap_then_inverse_ctr) &&
        has(RankStrategy::overlap_then_strength))
        emit_ratio(RankStrategy::overlap_then_inverse_ctr,
                   RankStrategy::overlap_then_strength);

    return result;
}

} // namespace linkctr
