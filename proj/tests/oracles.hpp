// Independent reference implementations the tests check the library against.
// Everything here is deliberately naive; keep it free of linkctr internals
// beyond the public types.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "linkctr/graph.hpp"
#include "linkctr/rng.hpp"
#include "linkctr/si.hpp"

namespace oracles {

using namespace linkctr;

// k-core by repeatedly rescanning and deleting low-degree nodes until nothing
// changes; returns the surviving original labels
inline std::set<std::uint64_t> naive_k_core_labels(const Graph& g, int k) {
    std::set<node_id> alive;
    for (node_id v = 0; v < g.node_count(); ++v) alive.insert(v);

    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = alive.begin(); it != alive.end();) {
            int deg = 0;
            for (auto [w, e] : g.neighbors(*it))
                if (alive.count(w)) ++deg;
            if (deg < k) {
                it = alive.erase(it);
                changed = true;
            } else {
                ++it;
            }
        }
    }

    std::set<std::uint64_t> labels;
    for (node_id v : alive) labels.insert(g.label(v));
    return labels;
}

// per-edge transmission counts by walking every reached node's path to the
// root and incrementing each edge on the way
inline std::vector<std::int64_t> root_path_counts(const Graph& g,
                                                  const BranchingTree& bt) {
    std::vector<std::int64_t> counts(g.edge_count(), 0);
    for (node_id v : bt.order) {
        node_id cur = v;
        while (cur != bt.root) {
            counts[bt.parent_edge[cur]] += 1;
            cur = bt.parent[cur];
        }
    }
    return counts;
}

// the literal rounds-based leaf peel: snapshot the degree-1 non-root nodes of
// the remaining tree, drain each leaf edge into its ascendant edge, repeat
inline std::vector<std::int64_t> literal_leaf_peel_counts(const Graph& g,
                                                          const BranchingTree& bt) {
    std::vector<std::int64_t> counts(g.edge_count(), 0);
    std::map<node_id, std::set<node_id>> tree_adj;
    for (node_id v : bt.order) {
        tree_adj[v];
        if (v != bt.root) {
            tree_adj[v].insert(bt.parent[v]);
            tree_adj[bt.parent[v]].insert(v);
        }
    }

    while (tree_adj.size() > 1) {
        std::vector<node_id> leaves;
        for (const auto& [v, nb] : tree_adj)
            if (v != bt.root && nb.size() <= 1) leaves.push_back(v);
        for (node_id v : leaves) {
            const node_id p = bt.parent[v];
            counts[bt.parent_edge[v]] += 1;
            if (p != bt.root) counts[bt.parent_edge[p]] += counts[bt.parent_edge[v]];
            tree_adj[p].erase(v);
            tree_adj.erase(v);
        }
    }
    return counts;
}

// random recursive tree on n nodes as a graph plus the matching branching
// tree (parent of node i drawn uniformly from 0..i-1, rooted at 0)
struct RandomTree {
    Graph graph;
    BranchingTree tree;
};

inline RandomTree random_recursive_tree(node_id n, Rng& rng) {
    std::vector<node_id> parent(n, kNoNode);
    std::vector<RawEdge> edges;
    for (node_id v = 1; v < n; ++v) {
        parent[v] = static_cast<node_id>(rng.below(v));
        edges.push_back({parent[v], v, 1.0});
    }

    RandomTree rt;
    rt.graph = build_graph(edges, std::vector<std::uint64_t>{0});

    BranchingTree& bt = rt.tree;
    bt.root = 0;
    bt.parent = parent;
    bt.parent_edge.assign(n, kNoEdge);
    bt.round.assign(n, -1);
    bt.round[0] = 0;
    bt.order.push_back(0);
    for (node_id v = 1; v < n; ++v) {
        for (auto [w, e] : rt.graph.neighbors(v))
            if (w == parent[v]) bt.parent_edge[v] = e;
        bt.round[v] = bt.round[parent[v]] + 1;
        bt.order.push_back(v);
    }
    return rt;
}

} // namespace oracles
