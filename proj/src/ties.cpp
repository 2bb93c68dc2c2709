#include "linkctr/ties.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/math/distributions/students_t.hpp>

#include "linkctr/errors.hpp"
#include "linkctr/io.hpp"
#include "linkctr/rng.hpp"

namespace linkctr {

namespace {

// common neighbors of the endpoints; adjacency lists are sorted by node id
std::size_t common_neighbors(const Graph& g, node_id a, node_id b) {
    const auto na = g.neighbors(a);
    const auto nb = g.neighbors(b);
    std::size_t count = 0;
    auto ia = na.begin();
    auto ib = nb.begin();
    while (ia != na.end() && ib != nb.end()) {
        if (ia->first < ib->first) {
            ++ia;
        } else if (ib->first < ia->first) {
            ++ib;
        } else {
            ++count;
            ++ia;
            ++ib;
        }
    }
    return count;
}

} // namespace

double overlap(const Graph& g, edge_id e) {
    if (e >= g.edge_count()) throw argument_error("overlap: edge id out of range");
    const Edge& ed = g.edge(e);
    const double n_ij = static_cast<double>(common_neighbors(g, ed.u, ed.v));
    const double denom =
        (g.degree(ed.u) - 1.0) + (g.degree(ed.v) - 1.0) - n_ij;
    return denom > 0.0 ? n_ij / denom : 0.0;
}

std::vector<double> overlap_all(const Graph& g) {
    std::vector<double> out(g.edge_count());
    for (edge_id e = 0; e < g.edge_count(); ++e) out[e] = overlap(g, e);
    return out;
}

double dyadic_strength(const Graph& g, edge_id e) {
    if (e >= g.edge_count())
        throw argument_error("dyadic_strength: edge id out of range");
    return g.edge(e).weight;
}

std::vector<double> strength_all(const Graph& g) {
    std::vector<double> out(g.edge_count());
    for (edge_id e = 0; e < g.edge_count(); ++e) out[e] = g.edge(e).weight;
    return out;
}

double zero_overlap_fraction(const Graph& g) {
    if (g.edge_count() == 0) return 0.0;
    std::size_t zeros = 0;
    for (edge_id e = 0; e < g.edge_count(); ++e)
        if (overlap(g, e) == 0.0) ++zeros;
    return static_cast<double>(zeros) / g.edge_count();
}

std::string to_string(RankStrategy s) {
    switch (s) {
        case RankStrategy::overlap_then_strength: return "overlap_then_strength";
        case RankStrategy::overlap_then_inverse_ctr: return "overlap_then_inverse_ctr";
        case RankStrategy::random: return "random";
    }
    return "unknown";
}

RankStrategy parse_strategy(const std::string& name) {
    if (name == "overlap_then_strength" || name == "O,w")
        return RankStrategy::overlap_then_strength;
    if (name == "overlap_then_inverse_ctr" || name == "O,Ctr^-1")
        return RankStrategy::overlap_then_inverse_ctr;
    if (name == "random") return RankStrategy::random;
    throw argument_error("unknown ranking strategy: " + name);
}

EdgeRanking rank_edges(std::size_t edge_count, RankStrategy strategy,
                       const EdgeMetrics& metrics, std::uint64_t rng_seed) {
    auto require_metric = [&](const std::vector<double>& m, const char* name) {
        if (m.size() != edge_count)
            throw argument_error(std::string("rank_edges: missing or mis-sized ") +
                                 name + " metric");
    };

    EdgeRanking ranking;
    ranking.strategy = strategy;
    ranking.order.resize(edge_count);
    std::iota(ranking.order.begin(), ranking.order.end(), 0);

    std::uint64_t hash = io::fnv1a64(nullptr, 0);
    auto hash_metric = [&hash](const std::vector<double>& m) {
        hash = io::fnv1a64(m.data(), m.size() * sizeof(double), hash);
    };

    switch (strategy) {
        case RankStrategy::overlap_then_strength: {
            require_metric(metrics.overlap, "overlap");
            require_metric(metrics.strength, "strength");
            hash_metric(metrics.overlap);
            hash_metric(metrics.strength);
            std::stable_sort(ranking.order.begin(), ranking.order.end(),
                             [&](edge_id a, edge_id b) {
                                 if (metrics.overlap[a] != metrics.overlap[b])
                                     return metrics.overlap[a] < metrics.overlap[b];
                                 if (metrics.strength[a] != metrics.strength[b])
                                     return metrics.strength[a] < metrics.strength[b];
                                 return a < b;
                             });
            break;
        }
        case RankStrategy::overlap_then_inverse_ctr: {
            require_metric(metrics.overlap, "overlap");
            require_metric(metrics.ctr, "ctr");
            hash_metric(metrics.overlap);
            hash_metric(metrics.ctr);
            // increasing 1/C_tr realized as decreasing C_tr; no reciprocals,
            // so C_tr = 0 edges need no special case
            std::stable_sort(ranking.order.begin(), ranking.order.end(),
                             [&](edge_id a, edge_id b) {
                                 if (metrics.overlap[a] != metrics.overlap[b])
                                     return metrics.overlap[a] < metrics.overlap[b];
                                 if (metrics.ctr[a] != metrics.ctr[b])
                                     return metrics.ctr[a] > metrics.ctr[b];
                                 return a < b;
                             });
            break;
        }
        case RankStrategy::random: {
            Rng rng(rng_seed, StreamKind::shuffle, 0);
            for (std::size_t i = 0; i + 1 < edge_count; ++i) {
                const std::size_t j = i + rng.below(edge_count - i);
                std::swap(ranking.order[i], ranking.order[j]);
            }
            hash = io::fnv1a64(&rng_seed, sizeof(rng_seed), hash);
            break;
        }
    }

    const std::string tag = to_string(strategy);
    ranking.inputs_hash = io::fnv1a64(tag.data(), tag.size(), hash);
    return ranking;
}

PearsonResult pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw argument_error("pearson: vectors must have equal length");
    const std::size_t n = x.size();
    if (n < 3) throw argument_error("pearson: need at least 3 samples");

    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);

    double sxx = 0, syy = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx, dy = y[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        throw argument_error("pearson: zero variance input");

    PearsonResult res;
    res.n = n;
    res.r = sxy / std::sqrt(sxx * syy);
    // clamp fp residue so the t transform stays defined at |r| ~ 1
    res.r = std::clamp(res.r, -1.0, 1.0);

    if (std::abs(res.r) == 1.0) {
        res.p = 0.0;
    } else {
        const double dof = static_cast<double>(n - 2);
        const double t = res.r * std::sqrt(dof / (1.0 - res.r * res.r));
        boost::math::students_t dist(dof);
        res.p = 2.0 * boost::math::cdf(dist, -std::abs(t));
    }
    return res;
}

} // namespace linkctr
