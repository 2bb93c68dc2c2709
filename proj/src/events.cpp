#include "linkctr/events.hpp"

#include <algorithm>
#include <map>

#include "linkctr/errors.hpp"

namespace linkctr {

Graph aggregate_events(const EventStream& stream, bool require_mutual,
                       BuildStats* stats) {
    if (require_mutual && !stream.directed)
        throw config_error("mutual filter requires a directed event stream");

    // per unordered pair: total count and whether each direction was seen
    struct PairCounts {
        double total = 0;
        bool fwd = false; // low -> high
        bool rev = false;
    };
    std::map<std::pair<std::uint64_t, std::uint64_t>, PairCounts> pairs;
    std::vector<std::uint64_t> nodes;

    for (const EventRecord& ev : stream.events) {
        nodes.push_back(ev.src);
        nodes.push_back(ev.dst);
        if (ev.src == ev.dst) continue;
        auto key = std::minmax(ev.src, ev.dst);
        PairCounts& pc = pairs[{key.first, key.second}];
        pc.total += 1;
        (ev.src < ev.dst ? pc.fwd : pc.rev) = true;
    }

    std::vector<RawEdge> edges;
    edges.reserve(pairs.size());
    for (const auto& [key, pc] : pairs) {
        if (require_mutual && !(pc.fwd && pc.rev)) continue;
        edges.push_back({key.first, key.second, pc.total});
    }

    // nodes whose links were all filtered out stay in the graph
    return build_graph(edges, nodes, stats);
}

} // namespace linkctr
