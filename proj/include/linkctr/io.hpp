#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "linkctr/events.hpp"
#include "linkctr/graph.hpp"

namespace linkctr::io {

// one "u v [w]" record per line, '#' comments and blank lines skipped
std::vector<RawEdge> read_edge_list(const std::filesystem::path& path);

// "t src dst" records preceded by a "directed=true|false" header line
EventStream read_event_list(const std::filesystem::path& path);

Graph load_graph(const std::filesystem::path& path, BuildStats* stats = nullptr);

// writes original labels, one "u v w" per line
void write_edge_list(const std::filesystem::path& path, const Graph& g);

// shortest round-trip decimal representation (std::to_chars); integral
// values print without a fraction
std::string format_double(double x);

// FNV-1a 64 over the file bytes, as fixed-width hex
std::string fingerprint_file(const std::filesystem::path& path);
std::uint64_t fnv1a64(const void* data, std::size_t size, std::uint64_t h = 0xcbf29ce484222325ULL);

// "key=value" lines, '#' comments; later keys override earlier ones
std::vector<std::pair<std::string, std::string>> read_kv_file(const std::filesystem::path& path);

} // namespace linkctr::io
