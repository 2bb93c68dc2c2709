#pragma once

#include <cstdint>
#include <vector>

#include "linkctr/graph.hpp"

namespace linkctr {

struct EventRecord {
    std::int64_t time = 0;
    std::uint64_t src = 0;
    std::uint64_t dst = 0;
};

struct EventStream {
    bool directed = true;
    std::vector<EventRecord> events;
};

// Aggregates an interaction sequence into a static weighted graph. The weight
// of link (i,j) is the total number of events between i and j regardless of
// direction. With require_mutual, the link exists only if at least one event
// ran in each direction; that filter needs a directed stream and throws
// config_error otherwise. Every node seen in the stream is kept, even if all
// of its links are filtered out.
Graph aggregate_events(const EventStream& stream, bool require_mutual,
                       BuildStats* stats = nullptr);

} // namespace linkctr
