#include "linkctr/si.hpp"

#include <algorithm>

#include "linkctr/errors.hpp"

namespace linkctr {

BranchingTree simulate_si(const Graph& g, node_id seed, double beta, Rng& rng) {
    if (!(beta > 0.0 && beta <= 1.0))
        throw argument_error("simulate_si: beta must be in (0,1]");
    if (seed >= g.node_count())
        throw argument_error("simulate_si: seed node out of range");

    const node_id n = g.node_count();
    BranchingTree bt;
    bt.root = seed;
    bt.parent.assign(n, kNoNode);
    bt.parent_edge.assign(n, kNoEdge);
    bt.round.assign(n, -1);
    bt.order.reserve(n);
    bt.order.push_back(seed);
    bt.round[seed] = 0;

    // infected nodes that may still have susceptible neighbors, ascending id;
    // scanning them in id order fixes the RNG draw sequence
    std::vector<node_id> active{seed}, still_active, newly;
    struct Candidate {
        node_id target;
        node_id infector;
        edge_id via;
    };
    std::vector<Candidate> fired;

    std::int32_t round = 0;
    while (!active.empty()) {
        ++round;
        fired.clear();
        still_active.clear();
        for (node_id u : active) {
            bool has_susceptible = false;
            for (auto [v, e] : g.neighbors(u)) {
                if (bt.round[v] >= 0) continue; // round-start state: already infected
                has_susceptible = true;
                if (rng.uniform() < beta) fired.push_back({v, u, e});
            }
            if (has_susceptible) still_active.push_back(u);
        }

        // group simultaneous infectors per target, pick the parent uniformly
        std::stable_sort(fired.begin(), fired.end(),
                         [](const Candidate& a, const Candidate& b) {
                             return a.target < b.target;
                         });
        newly.clear();
        for (std::size_t i = 0; i < fired.size();) {
            std::size_t j = i;
            while (j < fired.size() && fired[j].target == fired[i].target) ++j;
            const std::size_t pick = i + (j - i > 1 ? rng.below(j - i) : 0);
            const Candidate& c = fired[pick];
            bt.parent[c.target] = c.infector;
            bt.parent_edge[c.target] = c.via;
            bt.round[c.target] = round;
            bt.order.push_back(c.target);
            newly.push_back(c.target);
            i = j;
        }

        if (newly.empty()) {
            active.swap(still_active);
            continue;
        }
        // drop nodes whose last susceptible neighbors were just infected
        active.clear();
        for (node_id u : still_active) {
            const auto nb = g.neighbors(u);
            if (std::any_of(nb.begin(), nb.end(),
                            [&](auto p) { return bt.round[p.first] < 0; }))
                active.push_back(u);
        }
        for (node_id v : newly) {
            const auto nb = g.neighbors(v);
            if (std::any_of(nb.begin(), nb.end(),
                            [&](auto p) { return bt.round[p.first] < 0; }))
                active.push_back(v);
        }
        std::sort(active.begin(), active.end());
    }

    return bt;
}

std::vector<std::int32_t> tree_depths(const BranchingTree& bt) {
    std::vector<std::int32_t> depth(bt.parent.size(), -1);
    for (node_id v : bt.order)
        depth[v] = v == bt.root ? 0 : depth[bt.parent[v]] + 1;
    return depth;
}

} // namespace linkctr
