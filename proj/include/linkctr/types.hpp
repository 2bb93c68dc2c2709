#pragma once

#include <cstdint>
#include <limits>

namespace linkctr {

using node_id = std::uint32_t;
using edge_id = std::uint32_t;

inline constexpr node_id kNoNode = std::numeric_limits<node_id>::max();
inline constexpr edge_id kNoEdge = std::numeric_limits<edge_id>::max();

// hop distance of nodes unreachable from the BFS source
inline constexpr std::int32_t kUnreached = std::numeric_limits<std::int32_t>::max();

} // namespace linkctr
