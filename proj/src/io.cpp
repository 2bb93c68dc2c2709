#include "linkctr/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "linkctr/errors.hpp"

namespace linkctr::io {

namespace {

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path.string());
    return in;
}

bool is_blank_or_comment(const std::string& line) {
    const auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string::npos || line[pos] == '#';
}

} // namespace

std::vector<RawEdge> read_edge_list(const std::filesystem::path& path) {
    std::ifstream in = open_input(path);
    std::vector<RawEdge> edges;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank_or_comment(line)) continue;
        std::istringstream fields(line);
        RawEdge e;
        if (!(fields >> e.u >> e.v))
            throw parse_error(path.string(), line_no, "expected 'u v [w]'");
        if (!(fields >> e.weight)) e.weight = 1.0;
        std::string rest;
        if (fields >> rest)
            throw parse_error(path.string(), line_no, "trailing tokens after 'u v w'");
        if (e.weight < 0)
            throw parse_error(path.string(), line_no, "negative edge weight");
        edges.push_back(e);
    }
    return edges;
}

EventStream read_event_list(const std::filesystem::path& path) {
    std::ifstream in = open_input(path);
    EventStream stream;
    bool saw_header = false;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank_or_comment(line)) continue;
        if (!saw_header) {
            if (line.rfind("directed=", 0) != 0)
                throw parse_error(path.string(), line_no,
                                  "event list must start with 'directed=true|false'");
            const std::string value = line.substr(9);
            if (value == "true") {
                stream.directed = true;
            } else if (value == "false") {
                stream.directed = false;
            } else {
                throw parse_error(path.string(), line_no,
                                  "directed flag must be 'true' or 'false'");
            }
            saw_header = true;
            continue;
        }
        std::istringstream fields(line);
        EventRecord ev;
        if (!(fields >> ev.time >> ev.src >> ev.dst))
            throw parse_error(path.string(), line_no, "expected 't src dst'");
        std::string rest;
        if (fields >> rest)
            throw parse_error(path.string(), line_no, "trailing tokens after 't src dst'");
        if (ev.time < 0)
            throw parse_error(path.string(), line_no, "negative timestamp");
        if (ev.src == ev.dst)
            throw parse_error(path.string(), line_no, "event with src == dst");
        stream.events.push_back(ev);
    }
    if (!saw_header)
        throw parse_error(path.string(), line_no,
                          "event list must start with 'directed=true|false'");
    return stream;
}

Graph load_graph(const std::filesystem::path& path, BuildStats* stats) {
    const std::vector<RawEdge> edges = read_edge_list(path);
    return build_graph(edges, stats);
}

void write_edge_list(const std::filesystem::path& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path.string());
    for (const Edge& e : g.edges())
        out << g.label(e.u) << ' ' << g.label(e.v) << ' ' << format_double(e.weight)
            << '\n';
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

std::uint64_t fnv1a64(const void* data, std::size_t size, std::uint64_t h) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < size; ++i) {
        h ^= bytes[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string fingerprint_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file for fingerprint: " + path.string());
    std::uint64_t h = 0xcbf29ce484222325ULL;
    char buf[1 << 16];
    while (in.read(buf, sizeof(buf)) || in.gcount() > 0)
        h = fnv1a64(buf, static_cast<std::size_t>(in.gcount()), h);
    char hex[17];
    std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(h));
    return hex;
}

std::vector<std::pair<std::string, std::string>> read_kv_file(
    const std::filesystem::path& path) {
    std::ifstream in = open_input(path);
    std::vector<std::pair<std::string, std::string>> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank_or_comment(line)) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw parse_error(path.string(), line_no, "expected 'key=value'");
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        out.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return out;
}

} // namespace linkctr::io
