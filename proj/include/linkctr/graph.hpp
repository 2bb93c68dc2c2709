#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "linkctr/types.hpp"

namespace linkctr {

// one input record; node ids are arbitrary nonnegative integers
struct RawEdge {
    std::uint64_t u = 0;
    std::uint64_t v = 0;
    double weight = 1.0;
};

// canonical stored edge, u < v
struct Edge {
    node_id u = 0;
    node_id v = 0;
    double weight = 1.0;
};

// Immutable undirected graph. Nodes are dense 0..N-1 with the original input
// label kept per node; edge ids are dense 0..E-1 in lexicographic (u,v) order,
// so the same edge set always gets the same ids regardless of input order.
// Safe to share read-only across threads.
class Graph {
public:
    Graph() = default;

    // labels.size() gives the node count; edges must be canonical (u < v,
    // no duplicates). Sorts edges and builds the adjacency index.
    Graph(std::vector<std::uint64_t> labels, std::vector<Edge> edges);

    node_id node_count() const { return static_cast<node_id>(labels_.size()); }
    edge_id edge_count() const { return static_cast<edge_id>(edges_.size()); }

    const Edge& edge(edge_id e) const { return edges_[e]; }
    const std::vector<Edge>& edges() const { return edges_; }

    std::uint64_t label(node_id v) const { return labels_[v]; }
    const std::vector<std::uint64_t>& labels() const { return labels_; }

    node_id degree(node_id v) const {
        return static_cast<node_id>(adj_offsets_[v + 1] - adj_offsets_[v]);
    }

    // neighbors of v as (neighbor, edge id), sorted by neighbor id
    std::span<const std::pair<node_id, edge_id>> neighbors(node_id v) const {
        return {adj_.data() + adj_offsets_[v], adj_offsets_[v + 1] - adj_offsets_[v]};
    }

    // endpoint of e opposite to v
    node_id other_end(edge_id e, node_id v) const {
        const Edge& ed = edges_[e];
        return ed.u == v ? ed.v : ed.u;
    }

private:
    std::vector<std::uint64_t> labels_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> adj_offsets_;
    std::vector<std::pair<node_id, edge_id>> adj_;
};

struct BuildStats {
    std::size_t self_loops_dropped = 0;
    std::size_t duplicates_merged = 0;
};

// Remaps labels to dense ids, drops self-loops (counted), merges duplicate
// (u,v) records by summing weights. Missing weights default to 1 upstream.
Graph build_graph(std::span<const RawEdge> edge_list, BuildStats* stats = nullptr);

// same, but also keeps nodes that appear in no edge
Graph build_graph(std::span<const RawEdge> edge_list,
                  std::span<const std::uint64_t> extra_nodes,
                  BuildStats* stats = nullptr);

// Maximal subgraph with every degree >= k (k >= 1). Surviving nodes keep their
// labels, so results can always be joined back to the original ids.
Graph k_core(const Graph& g, int k);

// Component with the most nodes; ties go to the one containing the smallest
// node id. Node order (and hence labels) is preserved.
Graph largest_connected_component(const Graph& g);

// Unweighted hop distances from source; kUnreached for other components.
std::vector<std::int32_t> bfs_distances(const Graph& g, node_id source);

} // namespace linkctr
