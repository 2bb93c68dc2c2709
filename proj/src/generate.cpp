#include "linkctr/generate.hpp"

#include <numeric>

#include "linkctr/errors.hpp"
#include "linkctr/rng.hpp"

namespace linkctr {

Graph generate_er(node_id n, double p, std::uint64_t rng_seed) {
    if (p < 0.0 || p > 1.0) throw argument_error("er: p must be in [0,1]");

    Rng rng(rng_seed, StreamKind::er_gen, 0);
    std::vector<Edge> edges;
    for (node_id u = 0; u < n; ++u)
        for (node_id v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) edges.push_back({u, v, 1.0});

    std::vector<std::uint64_t> labels(n);
    std::iota(labels.begin(), labels.end(), 0);
    return Graph(std::move(labels), std::move(edges));
}

std::vector<int> sbm_blocks(const std::vector<node_id>& block_sizes) {
    std::vector<int> block;
    for (std::size_t b = 0; b < block_sizes.size(); ++b)
        block.insert(block.end(), block_sizes[b], static_cast<int>(b));
    return block;
}

Graph generate_sbm(const std::vector<node_id>& block_sizes, double p_in,
                   double p_out, std::uint64_t rng_seed) {
    if (p_in < 0.0 || p_in > 1.0 || p_out < 0.0 || p_out > 1.0)
        throw argument_error("sbm: probabilities must be in [0,1]");

    const std::vector<int> block = sbm_blocks(block_sizes);
    const node_id n = static_cast<node_id>(block.size());

    Rng rng(rng_seed, StreamKind::sbm_gen, 0);
    std::vector<Edge> edges;
    for (node_id u = 0; u < n; ++u) {
        for (node_id v = u + 1; v < n; ++v) {
            const double p = block[u] == block[v] ? p_in : p_out;
            if (rng.bernoulli(p)) edges.push_back({u, v, 1.0});
        }
    }

    std::vector<std::uint64_t> labels(n);
    std::iota(labels.begin(), labels.end(), 0);
    return Graph(std::move(labels), std::move(edges));
}

} // namespace linkctr
