#include "linkctr/ctr.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <numeric>
#include <thread>

#include "linkctr/errors.hpp"
#include "linkctr/rng.hpp"

namespace linkctr {

namespace {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

void require_connected(const Graph& g) {
    if (g.node_count() == 0)
        throw argument_error("centrality needs a non-empty graph");
    const auto dist = bfs_distances(g, 0);
    if (std::any_of(dist.begin(), dist.end(),
                    [](std::int32_t d) { return d == kUnreached; }))
        throw argument_error(
            "graph is disconnected; run largest_connected_component first");
}

// scratch for one worker: peeling state plus masked-edge bookkeeping
struct RealizationScratch {
    std::vector<std::int64_t> subtree;     // per node: count of its parent edge
    std::vector<node_id> child_remaining;  // per node
    std::vector<node_id> queue;

    void reset(std::size_t n) {
        subtree.assign(n, 0);
        child_remaining.assign(n, 0);
        queue.clear();
    }
};

// Alg. 2 style leaf peel over one branching tree; calls sink(v, count) with
// the finalized count of v's parent edge for every reached non-root node.
template <typename Sink>
void peel_tree(const BranchingTree& bt, RealizationScratch& scratch, Sink&& sink) {
    scratch.reset(bt.parent.size());
    for (node_id v : bt.order)
        if (v != bt.root) ++scratch.child_remaining[bt.parent[v]];

    for (node_id v : bt.order)
        if (scratch.child_remaining[v] == 0) scratch.queue.push_back(v);

    for (std::size_t head = 0; head < scratch.queue.size(); ++head) {
        const node_id v = scratch.queue[head];
        if (v == bt.root) continue;
        const node_id p = bt.parent[v];
        scratch.subtree[v] += 1;           // the removed leaf edge counts itself
        scratch.subtree[p] += scratch.subtree[v]; // drained into the ascendant edge
        sink(v, scratch.subtree[v]);
        if (--scratch.child_remaining[p] == 0) scratch.queue.push_back(p);
    }
}

void validate_tree(const Graph& g, const BranchingTree& bt) {
    const node_id n = g.node_count();
    if (bt.parent.size() != n || bt.parent_edge.size() != n || bt.round.size() != n)
        throw structural_error("branching tree does not match the graph size");
    if (bt.root >= n || bt.round[bt.root] != 0 || bt.parent[bt.root] != kNoNode)
        throw structural_error("branching tree root is inconsistent");
    for (node_id v : bt.order) {
        if (v >= n || bt.round[v] < 0)
            throw structural_error("branching tree order lists an unreached node");
        if (v == bt.root) continue;
        const node_id p = bt.parent[v];
        const edge_id e = bt.parent_edge[v];
        if (p >= n || e >= g.edge_count() || bt.round[p] < 0)
            throw structural_error("branching tree parent pointers are invalid");
        const Edge& ed = g.edge(e);
        if (!((ed.u == v && ed.v == p) || (ed.u == p && ed.v == v)))
            throw structural_error("branching tree edge does not connect child and parent");
        if (bt.round[p] >= bt.round[v])
            throw structural_error("branching tree rounds are not increasing");
    }
}

struct MonteCarloAccum {
    std::vector<std::int64_t> sums;
    std::vector<std::int64_t> masked; // realizations in which the edge was masked

    explicit MonteCarloAccum(std::size_t e) : sums(e, 0), masked(e, 0) {}

    void merge(const MonteCarloAccum& other) {
        for (std::size_t i = 0; i < sums.size(); ++i) {
            sums[i] += other.sums[i];
            masked[i] += other.masked[i];
        }
    }
};

// Runs SI realizations for the given seed nodes in parallel and accumulates
// per-edge counts. Integer sums keyed by edge id make the merge commutative,
// so results do not depend on the thread count.
MonteCarloAccum accumulate_realizations(const Graph& g, double beta,
                                        std::span<const node_id> seeds,
                                        std::int32_t unbias_distance,
                                        std::uint64_t master_seed,
                                        const CtrOptions& opts) {
    const int threads =
        std::max(1, std::min<int>(resolve_threads(opts.threads),
                                  static_cast<int>(seeds.size())));
    const edge_id e_count = g.edge_count();

    MonteCarloAccum total(e_count);
    std::mutex merge_mutex;
    std::atomic<std::size_t> next{0};
    std::atomic<std::uint64_t> done{0};

    auto worker = [&]() {
        MonteCarloAccum local(e_count);
        RealizationScratch scratch;
        std::vector<std::uint32_t> mask_stamp(e_count, 0);
        std::uint32_t epoch = 0;

        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= seeds.size()) break;
            const node_id seed = seeds[i];

            Rng rng(master_seed, StreamKind::si_realization, seed);
            const BranchingTree bt = simulate_si(g, seed, beta, rng);

            if (unbias_distance <= 0) {
                peel_tree(bt, scratch, [&](node_id v, std::int64_t count) {
                    local.sums[bt.parent_edge[v]] += count;
                });
            } else {
                ++epoch;
                const auto dist = bfs_distances(g, seed);
                // every edge touching the ball {dist < d} is masked this run
                for (node_id x = 0; x < g.node_count(); ++x) {
                    if (dist[x] >= unbias_distance) continue;
                    for (auto [w, e] : g.neighbors(x)) {
                        if (mask_stamp[e] != epoch) {
                            mask_stamp[e] = epoch;
                            ++local.masked[e];
                        }
                    }
                }
                peel_tree(bt, scratch, [&](node_id v, std::int64_t count) {
                    const edge_id e = bt.parent_edge[v];
                    if (mask_stamp[e] != epoch) local.sums[e] += count;
                });
            }

            const std::uint64_t d = done.fetch_add(1) + 1;
            if (opts.progress_every && opts.progress &&
                d % opts.progress_every == 0)
                opts.progress(d, seeds.size());
        }

        std::scoped_lock lock(merge_mutex);
        total.merge(local);
    };

    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return total;
}

std::vector<node_id> sample_seeds(const Graph& g, std::uint64_t num_seeds,
                                  std::uint64_t master_seed) {
    const node_id n = g.node_count();
    if (num_seeds < 1 || num_seeds > n)
        throw argument_error("num_seeds must be between 1 and the node count");

    // partial Fisher-Yates: uniform subset, fixed by the master seed alone
    Rng rng(master_seed, StreamKind::seed_sample, 0);
    std::vector<node_id> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    for (std::uint64_t i = 0; i < num_seeds; ++i) {
        const std::uint64_t j = i + rng.below(n - i);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(num_seeds);
    return pool;
}

} // namespace

std::vector<std::int64_t> per_realization_ctr(const Graph& g, const BranchingTree& bt) {
    validate_tree(g, bt);
    std::vector<std::int64_t> counts(g.edge_count(), 0);
    RealizationScratch scratch;
    peel_tree(bt, scratch, [&](node_id v, std::int64_t count) {
        counts[bt.parent_edge[v]] = count;
    });
    return counts;
}

EdgeCentrality exact_average_ctr(const Graph& g, double beta,
                                 std::uint64_t master_seed,
                                 const CtrOptions& opts) {
    require_connected(g);

    std::vector<node_id> seeds(g.node_count());
    std::iota(seeds.begin(), seeds.end(), 0);
    MonteCarloAccum acc = accumulate_realizations(g, beta, seeds, 0, master_seed, opts);

    EdgeCentrality out;
    out.realizations = g.node_count();
    out.sums = std::move(acc.sums);
    out.contributions.assign(g.edge_count(), static_cast<std::int64_t>(out.realizations));
    out.values.resize(g.edge_count());
    for (edge_id e = 0; e < g.edge_count(); ++e)
        out.values[e] = static_cast<double>(out.sums[e]) /
                        static_cast<double>(out.contributions[e]);
    return out;
}

EdgeCentrality approx_ctr(const Graph& g, double beta, std::uint64_t num_seeds,
                          std::int32_t unbias_distance, std::uint64_t master_seed,
                          const CtrOptions& opts) {
    require_connected(g);
    if (unbias_distance < 0)
        throw argument_error("unbias_distance must be nonnegative");

    const std::vector<node_id> seeds = sample_seeds(g, num_seeds, master_seed);
    MonteCarloAccum acc =
        accumulate_realizations(g, beta, seeds, unbias_distance, master_seed, opts);

    EdgeCentrality out;
    out.realizations = num_seeds;
    out.sums = std::move(acc.sums);
    out.contributions.resize(g.edge_count());
    out.values.resize(g.edge_count());
    for (edge_id e = 0; e < g.edge_count(); ++e) {
        out.contributions[e] = static_cast<std::int64_t>(num_seeds) - acc.masked[e];
        out.values[e] = out.contributions[e] > 0
                            ? static_cast<double>(out.sums[e]) /
                                  static_cast<double>(out.contributions[e])
                            : 0.0;
    }
    return out;
}

namespace {

// r with degenerate inputs resolved by equality: identical vectors (e.g. the
// estimator reducing to the exact baseline on a tiny graph) correlate at 1
double plain_correlation(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, syy = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx, dy = y[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        return std::equal(x.begin(), x.end(), y.begin()) ? 1.0 : 0.0;
    return sxy / std::sqrt(sxx * syy);
}

} // namespace

DistanceScan scan_unbias_distance(const Graph& g, double beta,
                                  std::uint64_t num_seeds,
                                  std::span<const std::int32_t> d_range,
                                  std::uint64_t master_seed,
                                  const CtrOptions& opts) {
    if (d_range.empty()) throw argument_error("d_range must be nonempty");
    require_connected(g);

    const EdgeCentrality exact = exact_average_ctr(g, beta, master_seed, opts);

    const std::int32_t max_d = *std::max_element(d_range.begin(), d_range.end());
    const std::vector<node_id> seeds = sample_seeds(g, num_seeds, master_seed);
    const edge_id e_count = g.edge_count();

    // one pass over the realizations; each candidate d re-masks the same counts
    std::vector<MonteCarloAccum> per_d(d_range.size(), MonteCarloAccum(e_count));
    {
        RealizationScratch scratch;
        std::vector<std::uint32_t> stamp(e_count, 0);
        std::vector<std::int32_t> edge_min_dist(e_count, 0);
        std::uint32_t epoch = 0;

        for (const node_id seed : seeds) {
            Rng rng(master_seed, StreamKind::si_realization, seed);
            const BranchingTree bt = simulate_si(g, seed, beta, rng);
            ++epoch;

            std::vector<std::int32_t> dist;
            if (max_d > 0) {
                dist = bfs_distances(g, seed);
                for (node_id x = 0; x < g.node_count(); ++x) {
                    if (dist[x] >= max_d) continue;
                    for (auto [w, e] : g.neighbors(x)) {
                        const std::int32_t m = std::min(dist[x], dist[w]);
                        if (stamp[e] != epoch) {
                            stamp[e] = epoch;
                            edge_min_dist[e] = m;
                            for (std::size_t k = 0; k < d_range.size(); ++k)
                                if (m < d_range[k]) ++per_d[k].masked[e];
                        }
                    }
                }
            }
            peel_tree(bt, scratch, [&](node_id v, std::int64_t count) {
                const edge_id e = bt.parent_edge[v];
                const std::int32_t m = stamp[e] == epoch ? edge_min_dist[e] : max_d;
                for (std::size_t k = 0; k < d_range.size(); ++k)
                    if (m >= d_range[k]) per_d[k].sums[e] += count;
            });
        }
    }

    DistanceScan scan;
    std::vector<double> values(e_count);
    for (std::size_t k = 0; k < d_range.size(); ++k) {
        for (edge_id e = 0; e < e_count; ++e) {
            const std::int64_t contrib =
                static_cast<std::int64_t>(num_seeds) - per_d[k].masked[e];
            values[e] = contrib > 0 ? static_cast<double>(per_d[k].sums[e]) /
                                          static_cast<double>(contrib)
                                    : 0.0;
        }
        scan.table.emplace_back(d_range[k], plain_correlation(values, exact.values));
    }

    scan.recommended = scan.table.front().first;
    double best_r = scan.table.front().second;
    for (const auto& [d, r] : scan.table) {
        if (r > best_r || (r == best_r && d < scan.recommended)) {
            best_r = r;
            scan.recommended = d;
        }
    }
    return scan;
}

} // namespace linkctr
