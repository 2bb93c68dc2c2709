#include "linkctr/graph.hpp"

#include <algorithm>
#include <queue>

#include "linkctr/errors.hpp"

namespace linkctr {

Graph::Graph(std::vector<std::uint64_t> labels, std::vector<Edge> edges)
    : labels_(std::move(labels)), edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });

    const std::size_t n = labels_.size();
    adj_offsets_.assign(n + 1, 0);
    for (const Edge& e : edges_) {
        ++adj_offsets_[e.u + 1];
        ++adj_offsets_[e.v + 1];
    }
    for (std::size_t i = 1; i <= n; ++i) adj_offsets_[i] += adj_offsets_[i - 1];

    adj_.resize(2 * edges_.size());
    std::vector<std::size_t> cursor(adj_offsets_.begin(), adj_offsets_.end() - 1);
    for (edge_id e = 0; e < edges_.size(); ++e) {
        adj_[cursor[edges_[e].u]++] = {edges_[e].v, e};
        adj_[cursor[edges_[e].v]++] = {edges_[e].u, e};
    }
    for (node_id v = 0; v < n; ++v) {
        std::sort(adj_.begin() + adj_offsets_[v], adj_.begin() + adj_offsets_[v + 1]);
    }
}

Graph build_graph(std::span<const RawEdge> edge_list, BuildStats* stats) {
    return build_graph(edge_list, {}, stats);
}

Graph build_graph(std::span<const RawEdge> edge_list,
                  std::span<const std::uint64_t> extra_nodes, BuildStats* stats) {
    BuildStats local;

    std::vector<std::uint64_t> labels(extra_nodes.begin(), extra_nodes.end());
    labels.reserve(extra_nodes.size() + 2 * edge_list.size());
    for (const RawEdge& e : edge_list) {
        labels.push_back(e.u);
        labels.push_back(e.v);
        if (e.weight < 0) throw argument_error("edge weights must be nonnegative");
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

    auto dense = [&](std::uint64_t raw) {
        return static_cast<node_id>(
            std::lower_bound(labels.begin(), labels.end(), raw) - labels.begin());
    };

    std::vector<Edge> edges;
    edges.reserve(edge_list.size());
    for (const RawEdge& e : edge_list) {
        if (e.u == e.v) {
            ++local.self_loops_dropped;
            continue;
        }
        node_id u = dense(e.u), v = dense(e.v);
        if (u > v) std::swap(u, v);
        edges.push_back({u, v, e.weight});
    }

    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    std::vector<Edge> merged;
    merged.reserve(edges.size());
    for (const Edge& e : edges) {
        if (!merged.empty() && merged.back().u == e.u && merged.back().v == e.v) {
            merged.back().weight += e.weight;
            ++local.duplicates_merged;
        } else {
            merged.push_back(e);
        }
    }

    if (stats) *stats = local;
    return Graph(std::move(labels), std::move(merged));
}

namespace {

// keeps relative node order; `keep` must be sorted ascending
Graph induced_subgraph(const Graph& g, const std::vector<node_id>& keep) {
    std::vector<node_id> remap(g.node_count(), kNoNode);
    std::vector<std::uint64_t> labels;
    labels.reserve(keep.size());
    for (node_id i = 0; i < keep.size(); ++i) {
        remap[keep[i]] = i;
        labels.push_back(g.label(keep[i]));
    }

    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if (remap[e.u] != kNoNode && remap[e.v] != kNoNode) {
            node_id u = remap[e.u], v = remap[e.v];
            if (u > v) std::swap(u, v);
            edges.push_back({u, v, e.weight});
        }
    }
    return Graph(std::move(labels), std::move(edges));
}

} // namespace

Graph k_core(const Graph& g, int k) {
    if (k < 1) throw argument_error("k_core requires k >= 1");

    const node_id n = g.node_count();
    std::vector<std::int64_t> deg(n);
    std::vector<bool> removed(n, false);
    std::queue<node_id> pending;
    for (node_id v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] < k) {
            pending.push(v);
            removed[v] = true;
        }
    }
    while (!pending.empty()) {
        node_id v = pending.front();
        pending.pop();
        for (auto [w, e] : g.neighbors(v)) {
            if (!removed[w] && --deg[w] < k) {
                removed[w] = true;
                pending.push(w);
            }
        }
    }

    std::vector<node_id> keep;
    for (node_id v = 0; v < n; ++v)
        if (!removed[v]) keep.push_back(v);
    return induced_subgraph(g, keep);
}

Graph largest_connected_component(const Graph& g) {
    const node_id n = g.node_count();
    std::vector<std::int32_t> comp(n, -1);
    std::int32_t num_comp = 0;
    std::vector<node_id> stack;
    std::vector<std::size_t> comp_size;

    for (node_id s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = num_comp;
        stack.push_back(s);
        std::size_t size = 0;
        while (!stack.empty()) {
            node_id v = stack.back();
            stack.pop_back();
            ++size;
            for (auto [w, e] : g.neighbors(v)) {
                if (comp[w] < 0) {
                    comp[w] = num_comp;
                    stack.push_back(w);
                }
            }
        }
        comp_size.push_back(size);
        ++num_comp;
    }

    // first component reaching the max size wins: components are discovered
    // in order of their smallest node id, which is the tie-break rule
    std::int32_t best = 0;
    for (std::int32_t c = 1; c < num_comp; ++c)
        if (comp_size[c] > comp_size[best]) best = c;

    std::vector<node_id> keep;
    for (node_id v = 0; v < n; ++v)
        if (comp[v] == best) keep.push_back(v);
    return induced_subgraph(g, keep);
}

std::vector<std::int32_t> bfs_distances(const Graph& g, node_id source) {
    if (source >= g.node_count()) throw argument_error("bfs source out of range");

    std::vector<std::int32_t> dist(g.node_count(), kUnreached);
    std::vector<node_id> frontier{source}, next;
    dist[source] = 0;
    std::int32_t d = 0;
    while (!frontier.empty()) {
        ++d;
        next.clear();
        for (node_id v : frontier) {
            for (auto [w, e] : g.neighbors(v)) {
                if (dist[w] == kUnreached) {
                    dist[w] = d;
                    next.push_back(w);
                }
            }
        }
        frontier.swap(next);
    }
    return dist;
}

} // namespace linkctr
