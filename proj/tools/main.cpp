#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "linkctr/ctr.hpp"
#include "linkctr/errors.hpp"
#include "linkctr/events.hpp"
#include "linkctr/generate.hpp"
#include "linkctr/graph.hpp"
#include "linkctr/io.hpp"
#include "linkctr/sir.hpp"
#include "linkctr/tail.hpp"
#include "linkctr/ties.hpp"
#include "linkctr/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace linkctr;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

int run_cli(const std::vector<std::string>& args);

// CLI11's vector overload wants the arguments reversed
void parse_app(CLI::App& app, const std::vector<std::string>& args) {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
}

// ---------------------------------------------------------------------------
// output helpers

// simple typed table rendered as CSV or a JSON array of objects
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<json>> rows;
};

std::string render_cell(const json& cell) {
    if (cell.is_string()) return cell.get<std::string>();
    if (cell.is_number_float()) return io::format_double(cell.get<double>());
    return cell.dump();
}

void write_table(const fs::path& path, const Table& table, const std::string& format) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path.string());
    if (format == "json") {
        json arr = json::array();
        for (const auto& row : table.rows) {
            json obj;
            for (std::size_t c = 0; c < table.columns.size(); ++c)
                obj[table.columns[c]] = row[c];
            arr.push_back(std::move(obj));
        }
        out << arr.dump(2) << '\n';
    } else {
        for (std::size_t c = 0; c < table.columns.size(); ++c)
            out << (c ? "," : "") << table.columns[c];
        out << '\n';
        for (const auto& row : table.rows) {
            for (std::size_t c = 0; c < row.size(); ++c)
                out << (c ? "," : "") << render_cell(row[c]);
            out << '\n';
        }
    }
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

void write_json_file(const fs::path& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path.string());
    out << j.dump(2) << '\n';
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

// ---------------------------------------------------------------------------
// run manifest

class ManifestWriter {
public:
    ManifestWriter(std::string command, std::vector<std::string> argv, fs::path out_dir)
        : command_(std::move(command)),
          argv_(std::move(argv)),
          out_dir_(std::move(out_dir)),
          start_(std::chrono::steady_clock::now()) {
        fs::create_directories(out_dir_);
    }

    const fs::path& dir() const { return out_dir_; }
    fs::path path(const std::string& name) const { return out_dir_ / name; }

    void add_input(const fs::path& p) { inputs_[p.string()] = io::fingerprint_file(p); }
    void add_output(const std::string& name) { outputs_.push_back(name); }
    void set_config(json cfg) { config_ = std::move(cfg); }
    void set_master_seed(std::uint64_t seed) { master_seed_ = seed; }

    void finalize() {
        const double wall =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
                .count();
        json m;
        m["tool"] = "linkctr";
        m["version"] = kVersion;
        m["command"] = command_;
        m["argv"] = argv_;
        m["config"] = config_;
        if (master_seed_) m["master_seed"] = *master_seed_;
        m["inputs"] = inputs_;
        m["outputs"] = outputs_;
        m["wall_clock_sec"] = wall;
        write_json_file(out_dir_ / "manifest.json", m);
    }

private:
    std::string command_;
    std::vector<std::string> argv_;
    fs::path out_dir_;
    std::chrono::steady_clock::time_point start_;
    std::map<std::string, std::string> inputs_;
    std::vector<std::string> outputs_;
    json config_;
    std::optional<std::uint64_t> master_seed_;
};

// ---------------------------------------------------------------------------
// small shared pieces

std::vector<node_id> parse_sizes(const std::string& text) {
    std::vector<node_id> sizes;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        sizes.push_back(static_cast<node_id>(std::stoul(item)));
    return sizes;
}

// "a:b" inclusive range or comma-separated list
std::vector<std::int32_t> parse_d_range(const std::string& text) {
    std::vector<std::int32_t> ds;
    if (const auto colon = text.find(':'); colon != std::string::npos) {
        const int lo = std::stoi(text.substr(0, colon));
        const int hi = std::stoi(text.substr(colon + 1));
        for (int d = lo; d <= hi; ++d) ds.push_back(d);
    } else {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) ds.push_back(std::stoi(item));
    }
    if (ds.empty()) throw argument_error("empty d range");
    return ds;
}

CtrOptions make_ctr_options(int threads, std::uint64_t progress_every) {
    CtrOptions opts;
    opts.threads = threads;
    opts.progress_every = progress_every;
    if (progress_every)
        opts.progress = [](std::uint64_t done, std::uint64_t total) {
            std::fprintf(stderr, "linkctr: %llu/%llu realizations\n",
                         static_cast<unsigned long long>(done),
                         static_cast<unsigned long long>(total));
        };
    return opts;
}

struct CsvFile {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

CsvFile read_csv(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path.string());
    CsvFile csv;
    std::string line;
    std::size_t line_no = 0;
    auto split = [](const std::string& s) {
        std::vector<std::string> cells;
        std::stringstream ss(s);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        return cells;
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (csv.columns.empty()) {
            csv.columns = split(line);
            continue;
        }
        auto cells = split(line);
        if (cells.size() != csv.columns.size())
            throw parse_error(path.string(), line_no, "wrong number of columns");
        csv.rows.push_back(std::move(cells));
    }
    return csv;
}

std::size_t column_index(const CsvFile& csv, const std::string& name,
                         const fs::path& path) {
    for (std::size_t i = 0; i < csv.columns.size(); ++i)
        if (csv.columns[i] == name) return i;
    throw parse_error(path.string(), 1, "missing column '" + name + "'");
}

// per-edge metric column aligned with the graph's edge ids
std::vector<double> read_edge_column(const fs::path& path, const Graph& g,
                                     const std::string& column) {
    const CsvFile csv = read_csv(path);
    const std::size_t id_col = column_index(csv, "edge_id", path);
    const std::size_t val_col = column_index(csv, column, path);
    if (csv.rows.size() != g.edge_count())
        throw structural_error(path.string() + " covers " +
                               std::to_string(csv.rows.size()) + " edges, graph has " +
                               std::to_string(g.edge_count()));
    std::vector<double> values(g.edge_count());
    std::vector<bool> seen(g.edge_count(), false);
    for (const auto& row : csv.rows) {
        const std::size_t e = std::stoul(row[id_col]);
        if (e >= g.edge_count() || seen[e])
            throw structural_error(path.string() + ": bad or duplicate edge id " +
                                   row[id_col]);
        seen[e] = true;
        values[e] = std::stod(row[val_col]);
    }
    return values;
}

void write_ranking_file(const fs::path& path, const EdgeRanking& ranking) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path.string());
    char hex[17];
    std::snprintf(hex, sizeof(hex), "%016llx",
                  static_cast<unsigned long long>(ranking.inputs_hash));
    out << "# strategy=" << to_string(ranking.strategy) << '\n';
    out << "# inputs_hash=" << hex << '\n';
    for (edge_id e : ranking.order) out << e << '\n';
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

EdgeRanking read_ranking_file(const fs::path& path, std::size_t edge_count) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path.string());
    EdgeRanking ranking;
    bool have_strategy = false;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (line.rfind("# strategy=", 0) == 0) {
                ranking.strategy = parse_strategy(line.substr(11));
                have_strategy = true;
            } else if (line.rfind("# inputs_hash=", 0) == 0) {
                ranking.inputs_hash = std::stoull(line.substr(14), nullptr, 16);
            }
            continue;
        }
        ranking.order.push_back(static_cast<edge_id>(std::stoul(line)));
    }
    if (!have_strategy)
        throw parse_error(path.string(), 1, "missing '# strategy=' header");
    if (ranking.order.size() != edge_count)
        throw structural_error(path.string() + ": ranking covers " +
                               std::to_string(ranking.order.size()) +
                               " edges, graph has " + std::to_string(edge_count));
    std::vector<bool> seen(edge_count, false);
    for (edge_id e : ranking.order) {
        if (e >= edge_count || seen[e])
            throw structural_error(path.string() + ": not a permutation of edge ids");
        seen[e] = true;
    }
    return ranking;
}

// ---------------------------------------------------------------------------
// subcommands

int cmd_generate(const std::vector<std::string>& args) {
    CLI::App app{"generate a synthetic graph"};
    app.name("linkctr generate");
    bool er = false, sbm = false;
    std::uint64_t n = 0;
    double p = 0.0, p_in = 0.0, p_out = 0.0;
    std::string sizes_text, out_dir;
    std::uint64_t master_seed = 0;
    app.add_flag("--er", er, "Erdos-Renyi G(n,p)");
    app.add_flag("--sbm", sbm, "stochastic block model");
    app.add_option("--n", n, "node count (ER)");
    app.add_option("--p", p, "edge probability (ER)");
    app.add_option("--sizes", sizes_text, "comma-separated block sizes (SBM)");
    app.add_option("--p-in", p_in, "within-block probability (SBM)");
    app.add_option("--p-out", p_out, "between-block probability (SBM)");
    app.add_option("--master-seed", master_seed, "RNG master seed")->required();
    app.add_option("--out", out_dir, "output directory")->required();
    try {
        parse_app(app, args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }
    if (er == sbm) throw argument_error("choose exactly one of --er / --sbm");

    ManifestWriter mw("generate", args, out_dir);
    Graph g;
    json cfg;
    if (er) {
        g = generate_er(static_cast<node_id>(n), p, master_seed);
        cfg = {{"model", "er"}, {"n", n}, {"p", p}};
    } else {
        const auto sizes = parse_sizes(sizes_text);
        if (sizes.empty()) throw argument_error("--sbm needs --sizes");
        g = generate_sbm(sizes, p_in, p_out, master_seed);
        cfg = {{"model", "sbm"}, {"sizes", sizes_text}, {"p_in", p_in}, {"p_out", p_out}};
    }
    io::write_edge_list(mw.path("graph.edges"), g);
    mw.add_output("graph.edges");
    mw.set_config(cfg);
    mw.set_master_seed(master_seed);
    mw.finalize();
    std::fprintf(stderr, "linkctr: generated %u nodes, %u edges\n", g.node_count(),
                 g.edge_count());
    return kExitOk;
}

int cmd_preprocess(const std::vector<std::string>& args) {
    CLI::App app{"build and filter a static graph from raw edges or events"};
    app.name("linkctr preprocess");
    std::string input, out_dir;
    bool as_events = false, as_edges = false, mutual = false, lcc = false;
    int kcore = 0;
    app.add_option("--input", input, "edge list or event list")->required();
    app.add_flag("--events", as_events, "treat input as an event list");
    app.add_flag("--edges", as_edges, "treat input as an edge list");
    app.add_flag("--mutual", mutual, "keep only mutual links (event input)");
    app.add_option("--kcore", kcore, "extract the k-core");
    app.add_flag("--lcc", lcc, "keep the largest connected component");
    app.add_option("--out", out_dir, "output directory")->required();
    try {
        parse_app(app, args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }
    if (as_events && as_edges)
        throw argument_error("--events and --edges are mutually exclusive");

    ManifestWriter mw("preprocess", args, out_dir);
    mw.add_input(input);

    // sniff the input type when not forced: event lists open with the
    // directed= header line
    if (!as_events && !as_edges) {
        std::ifstream probe(input);
        if (!probe) throw std::runtime_error("cannot open input file: " + input);
        std::string line;
        while (std::getline(probe, line)) {
            const auto pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos || line[pos] == '#') continue;
            as_events = line.rfind("directed=", 0) == 0;
            break;
        }
    }

    json stages = json::array();
    Graph g;
    if (as_events) {
        const EventStream stream = io::read_event_list(input);
        BuildStats stats;
        const Graph unfiltered = aggregate_events(stream, false, &stats);
        stages.push_back({{"stage", "aggregate"},
                          {"events", stream.events.size()},
                          {"nodes", unfiltered.node_count()},
                          {"edges", unfiltered.edge_count()}});
        if (mutual) {
            if (!stream.directed) {
                std::fprintf(stderr,
                             "linkctr: warning: undirected event stream, "
                             "skipping the mutual filter\n");
                g = unfiltered;
            } else {
                g = aggregate_events(stream, true, &stats);
            }
            stages.push_back({{"stage", "mutual"},
                              {"applied", stream.directed},
                              {"nodes", g.node_count()},
                              {"edges", g.edge_count()}});
        } else {
            g = unfiltered;
        }
    } else {
        if (mutual)
            std::fprintf(stderr,
                         "linkctr: warning: --mutual has no effect on edge lists\n");
        BuildStats stats;
        g = io::load_graph(input, &stats);
        stages.push_back({{"stage", "build"},
                          {"nodes", g.node_count()},
                          {"edges", g.edge_count()},
                          {"self_loops_dropped", stats.self_loops_dropped},
                          {"duplicates_merged", stats.duplicates_merged}});
    }

    if (kcore > 0) {
        g = k_core(g, kcore);
        stages.push_back({{"stage", "kcore"},
                          {"k", kcore},
                          {"nodes", g.node_count()},
                          {"edges", g.edge_count()}});
    }
    if (lcc) {
        g = largest_connected_component(g);
        stages.push_back(
            {{"stage", "lcc"}, {"nodes", g.node_count()}, {"edges", g.edge_count()}});
    }

    io::write_edge_list(mw.path("graph.edges"), g);
    mw.add_output("graph.edges");

    {
        Table idmap;
        idmap.columns = {"node_id", "raw_id"};
        for (node_id v = 0; v < g.node_count(); ++v)
            idmap.rows.push_back({v, g.label(v)});
        write_table(mw.path("idmap.csv"), idmap, "csv");
        mw.add_output("idmap.csv");
    }

    json summary;
    summary["stages"] = stages;
    summary["final"] = {{"nodes", g.node_count()}, {"edges", g.edge_count()}};
    write_json_file(mw.path("summary.json"), summary);
    mw.add_output("summary.json");

    mw.set_config({{"mutual", mutual}, {"kcore", kcore}, {"lcc", lcc}});
    mw.finalize();
    return kExitOk;
}

int cmd_ctr(const std::vector<std::string>& args) {
    CLI::App app{"transmission centrality (exact or sampled-unbiased)"};
    app.name("linkctr ctr");
    std::string graph_path, out_dir, format = "csv";
    double beta = 1.0;
    bool exact = false;
    std::uint64_t seeds = 0;
    int unbias = 0, threads = 0;
    std::uint64_t master_seed = 0, progress = 0;
    double tail_xmin = 0.0;
    bool with_ccdf = false;
    app.add_option("--graph", graph_path, "edge-list file")->required();
    app.add_option("--beta", beta, "SI transmission probability")->required();
    app.add_flag("--exact", exact, "average over processes from every node");
    app.add_option("--seeds", seeds, "number of sampled seeds (heuristic)");
    app.add_option("--unbias", unbias, "masking distance d (heuristic)");
    app.add_option("--master-seed", master_seed, "RNG master seed")->required();
    app.add_option("--threads", threads, "worker threads (0 = all cores)");
    app.add_option("--progress", progress, "report every N realizations");
    app.add_flag("--ccdf", with_ccdf, "also write the value CCDF");
    app.add_option("--tail-xmin", tail_xmin, "report the Hill tail exponent above xmin");
    app.add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", out_dir, "output directory")->required();
    try {
        parse_app(app, args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }
    if (exact == (seeds > 0))
        throw argument_error("choose exactly one of --exact / --seeds M");

    ManifestWriter mw("ctr", args, out_dir);
    mw.add_input(graph_path);
    const Graph g = io::load_graph(graph_path);

    const CtrOptions opts = make_ctr_options(threads, progress);
    const EdgeCentrality ec =
        exact ? exact_average_ctr(g, beta, master_seed, opts)
              : approx_ctr(g, beta, seeds, unbias, master_seed, opts);

    const std::string table_name = format == "json" ? "ctr.json" : "ctr.csv";
    Table table;
    table.columns = {"edge_id", "u", "v", "ctr", "contributions"};
    for (edge_id e = 0; e < g.edge_count(); ++e)
        table.rows.push_back({e, g.label(g.edge(e).u), g.label(g.edge(e).v),
                              ec.values[e], ec.contributions[e]});
    write_table(mw.path(table_name), table, format);
    mw.add_output(table_name);

    json summary;
    summary["realizations"] = ec.realizations;
    summary["flagged_edges"] = [&] {
        std::size_t k = 0;
        for (edge_id e = 0; e < g.edge_count(); ++e)
            if (ec.flagged(e)) ++k;
        return k;
    }();
    if (with_ccdf) {
        Table cc;
        cc.columns = {"x", "ccdf"};
        for (const auto& [x, p] : ccdf(ec.values)) cc.rows.push_back({x, p});
        write_table(mw.path("ccdf.csv"), cc, "csv");
        mw.add_output("ccdf.csv");
    }
    if (tail_xmin > 0.0)
        summary["tail_exponent"] = tail_exponent(ec.values, tail_xmin);
    write_json_file(mw.path("summary.json"), summary);
    mw.add_output("summary.json");

    json cfg{{"beta", beta},   {"exact", exact},     {"seeds", seeds},
             {"unbias", unbias}, {"threads", threads}, {"format", format}};
    mw.set_config(cfg);
    mw.set_master_seed(master_seed);
    mw.finalize();
    return kExitOk;
}

int cmd_scan_d(const std::vector<std::string>& args) {
    CLI::App app{"scan the unbias distance against the exact baseline"};
    app.name("linkctr scan-d");
    std::string graph_path, out_dir, d_range_text = "0:5";
    double beta = 1.0;
    std::uint64_t seeds = 0, master_seed = 0;
    int threads = 0;
    app.add_option("--graph", graph_path)->required();
    app.add_option("--beta", beta)->required();
    app.add_option("--seeds", seeds, "number of sampled seeds")->required();
    app.add_option("--d-range", d_range_text, "a:b inclusive or comma list");
    app.add_option("--master-seed", master_seed)->required();
    app.add_option("--threads", threads);
    app.add_option("--out", out_dir)->required();
    try {
        parse_app(app, args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    ManifestWriter mw("scan-d", args, out_dir);
    mw.add_input(graph_path);
    const Graph g = io::load_graph(graph_path);
    const auto d_range = parse_d_range(d_range_text);

    const DistanceScan scan = scan_unbias_distance(
        g, beta, seeds, d_range, master_seed, make_ctr_options(threads, 0));

    Table table;
    table.columns = {"d", "r"};
    for (const auto& [d, r] : scan.table) table.rows.push_back({d, r});
    write_table(mw.path("scan.csv"), table, "csv");
    mw.add_output("scan.csv");

    write_json_file(mw.path("summary.json"), json{{"recommended_d", scan.recommended}});
    mw.add_output("summary.json");

    mw.set_config({{"beta", beta}, {"seeds", seeds}, {"d_range", d_range_text}});
    mw.set_master_seed(master_seed);
    mw.finalize();
    return kExitOk;
}

int cmd_metrics(const std::vector<std::string>& args) {
    CLI::App app{"per-edge overlap, strength and centrality metrics"};
    app.name("linkctr metrics");
    std::string graph_path, ctr_path, out_dir, format = "csv";
    app.add_option("--graph", graph_path)->required();
    app.add_option("--ctr", ctr_path, "centrality CSV from 'linkctr ctr'")->required();
    app.add_option("--out", out_dir)->required();
    app.add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    try {
        parse_app(app, args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    ManifestWriter mw("metrics", args, out_dir);
    mw.add_input(graph_path);
    mw.add_input(ctr_path);
    const Graph g = io::load_graph(graph_path);
    const std::vector<double> ctr = read_edge_column(ctr_path, g, "ctr");
    const std::vector<double> ov = overlap_all(g);
    const std::vector<double> st = strength_all(g);

    const std::string table_name = format == "json" ? "metrics.json" : "metrics.csv";
    Table table;
    table.columns = {"edge_id", "u", "v", "overlap", "strength", "ctr"};
    for (edge_id e = 0; e < g.edge_count(); ++e)
        table.rows.push_back(
            {e, g.label(g.edge(e).u), g.label(g.edge(e).v), ov[e], st[e], ctr[e]});
    write_table(mw.path(table_name), table, format);
    mw.add_output(table_name);

    // the three pairwise correlations the ranking strategies build on
    json summary;
    summary["zero_overlap_fraction"] = zero_overlap_fraction(g);
    auto report = [&](const char* key, std::span<const double> x,
                      std::span<const double> y) {
        try {
            const PearsonResult pr = pearson(x, y);
            summary[key] = {{"r", pr.r}, {"p", pr.p}};
        } catch (const argument_error& e) {
            summary[key] = {{"error", e.what()}};
        }
    };
    report("pearson_overlap_strength", ov, st);
    report("pearson_ctr_overlap", ctr, ov);
    report("pearson_ctr_strength", ctr, st);
    write_json_file(mw.path("summary.json"), summary);
    mw.add_output("summary.json");

    mw.set_config({{"format", format}});
    mw.finalize();
    return kExitOk;
}

int cmd_rank(const std::vector<std::string>& args) {
    CLI::App app{"rank edges weakest-first under a control strategy"};
    app.name("linkctr rank");
    std::string metrics_path, strategy_name, out_dir;
    std::uint64_t seed = 0;
    app.add_option("--metrics", metrics_path, "metrics CSV")->required();
    app.add_option("--strategy", strategy_name,
                   "overlap_then_strength|overlap_then_inverse_ctr|random")
        ->required();
    app.add_option("--seed", seed, "shuffle seed for the random strategy");
    app.add_option("--out", out_dir)->required();
    try {
        parse_app(app, args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    ManifestWriter mw("rank", args, out_dir);
    mw.add_input(metrics_path);

    const CsvFile csv = read_csv(metrics_path);
    const std::size_t e_count = csv.rows.size();
    EdgeMetrics metrics;
    auto load = [&](const std::string& col, std::vector<double>& dst) {
        const std::size_t id_col = column_index(csv, "edge_id", metrics_path);
        const std::size_t val_col = column_index(csv, col, metrics_path);
        dst.assign(e_count, 0.0);
        for (const auto& row : csv.rows)
            dst[std::stoul(row[id_col])] = std::stod(row[val_col]);
    };
    load("overlap", metrics.overlap);
    load("strength", metrics.strength);
    load("ctr", metrics.ctr);

    const RankStrategy strategy = parse_strategy(strategy_name);
    const EdgeRanking ranking = rank_edges(e_count, strategy, metrics, seed);
    write_ranking_file(mw.path("ranking.txt"), ranking);
    mw.add_output("ranking.txt");

    mw.set_config({{"strategy", strategy_name}, {"seed", seed}});
    mw.finalize();
    return kExitOk;
}

int cmd_sir(const std::vector<std::string>& args) {
    CLI::App app{"controlled SIR experiment over strategy/f/delta grids"};
    app.name("linkctr sir");
    std::string graph_path, config_path, out_dir, format = "csv";
    std::vector<std::string> ranking_paths;
    int threads = -1;
    app.add_option("--graph", graph_path)->required();
    app.add_option("--config", config_path, "key=value experiment config")->required();
    app.add_option("--ranking", ranking_paths, "ranking file (repeatable)");
    app.add_option("--threads", threads, "override config threads");
    app.add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", out_dir)->required();
    try {
        parse_app(app, args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    ManifestWriter mw("sir", args, out_dir);
    mw.add_input(graph_path);
    mw.add_input(config_path);
    const Graph g = io::load_graph(graph_path);

    ExperimentConfig cfg;
    auto parse_doubles = [](const std::string& text) {
        std::vector<double> out;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
        return out;
    };
    for (const auto& [key, value] : io::read_kv_file(config_path)) {
        if (key == "beta") cfg.beta = std::stod(value);
        else if (key == "mu") cfg.mu = std::stod(value);
        else if (key == "delta_grid") cfg.delta_grid = parse_doubles(value);
        else if (key == "f_grid") cfg.f_grid = parse_doubles(value);
        else if (key == "num_seeds") cfg.num_seeds = std::stoull(value);
        else if (key == "master_seed") cfg.master_seed = std::stoull(value);
        else if (key == "threads") cfg.threads = std::stoi(value);
        else if (key == "mode") {
            if (value == "weighted") cfg.mode = WeightMode::weighted;
            else if (value == "unweighted") cfg.mode = WeightMode::unweighted;
            else throw config_error("mode must be weighted|unweighted");
        } else if (key == "strategies") {
            std::stringstream ss(value);
            std::string item;
            while (std::getline(ss, item, ','))
                cfg.strategies.push_back(parse_strategy(item));
        } else {
            throw config_error("unknown config key: " + key);
        }
    }
    if (threads >= 0) cfg.threads = threads;

    if (cfg.mode == WeightMode::weighted) {
        const auto& edges = g.edges();
        if (std::all_of(edges.begin(), edges.end(),
                        [](const Edge& e) { return e.weight == 1.0; }))
            std::fprintf(stderr,
                         "linkctr: warning: weighted mode on a unit-weight graph; "
                         "all omega = 1\n");
    }

    std::map<RankStrategy, EdgeRanking> rankings;
    for (const std::string& path : ranking_paths) {
        mw.add_input(path);
        EdgeRanking r = read_ranking_file(path, g.edge_count());
        rankings[r.strategy] = std::move(r);
    }

    const ExperimentResult result = run_experiment(g, rankings, cfg);

    const std::string results_name = format == "json" ? "results.json" : "results.csv";
    Table results;
    results.columns = {"strategy", "f", "delta", "mean_R", "stderr_R", "num_runs"};
    for (const ExperimentRow& row : result.rows)
        results.rows.push_back({to_string(row.strategy), row.f, row.delta, row.mean_R,
                                row.stderr_R, row.num_runs});
    write_table(mw.path(results_name), results, format);
    mw.add_output(results_name);

    const std::string ratios_name = format == "json" ? "ratios.json" : "ratios.csv";
    Table ratios;
    ratios.columns = {"pair", "f", "delta", "phi", "stderr"};
    for (const RatioRow& row : result.ratios)
        ratios.rows.push_back({row.pair, row.f, row.delta, row.phi, row.stderr_phi});
    write_table(mw.path(ratios_name), ratios, format);
    mw.add_output(ratios_name);

    json cfg_json{{"beta", cfg.beta},
                  {"mu", cfg.mu},
                  {"num_seeds", cfg.num_seeds},
                  {"mode", cfg.mode == WeightMode::weighted ? "weighted" : "unweighted"},
                  {"threads", cfg.threads},
                  {"format", format}};
    mw.set_config(cfg_json);
    mw.set_master_seed(cfg.master_seed);
    mw.finalize();
    return kExitOk;
}

int cmd_replay(const std::vector<std::string>& args) {
    CLI::App app{"re-run a recorded command into a fresh output directory"};
    app.name("linkctr replay");
    std::string manifest_path, out_dir;
    app.add_option("--manifest", manifest_path)->required();
    app.add_option("--out", out_dir, "new output directory")->required();
    try {
        parse_app(app, args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    std::ifstream in(manifest_path);
    if (!in) throw std::runtime_error("cannot open manifest: " + manifest_path);
    json m = json::parse(in);
    std::vector<std::string> argv = m.at("argv").get<std::vector<std::string>>();
    const std::string command = m.at("command").get<std::string>();

    // swap the recorded output directory for the new one
    bool replaced = false;
    for (std::size_t i = 0; i + 1 < argv.size(); ++i) {
        if (argv[i] == "--out") {
            argv[i + 1] = out_dir;
            replaced = true;
        }
    }
    if (!replaced) {
        argv.push_back("--out");
        argv.push_back(out_dir);
    }

    std::vector<std::string> full{command};
    full.insert(full.end(), argv.begin(), argv.end());
    return run_cli(full);
}

// ---------------------------------------------------------------------------

int run_cli(const std::vector<std::string>& args) {
    if (args.empty()) {
        std::fprintf(stderr,
                     "usage: linkctr <generate|preprocess|ctr|scan-d|metrics|rank|"
                     "sir|replay> [options]\n");
        return kExitUsage;
    }
    const std::string cmd = args[0];
    std::vector<std::string> rest(args.begin() + 1, args.end());

    try {
        if (cmd == "generate") return cmd_generate(rest);
        if (cmd == "preprocess") return cmd_preprocess(rest);
        if (cmd == "ctr") return cmd_ctr(rest);
        if (cmd == "scan-d") return cmd_scan_d(rest);
        if (cmd == "metrics") return cmd_metrics(rest);
        if (cmd == "rank") return cmd_rank(rest);
        if (cmd == "sir") return cmd_sir(rest);
        if (cmd == "replay") return cmd_replay(rest);
        if (cmd == "--version" || cmd == "version") {
            std::printf("linkctr %s\n", kVersion);
            return kExitOk;
        }
        std::fprintf(stderr, "linkctr: unknown command '%s'\n", cmd.c_str());
        return kExitUsage;
    } catch (const argument_error& e) {
        std::fprintf(stderr, "linkctr: %s\n", e.what());
        return kExitUsage;
    } catch (const config_error& e) {
        std::fprintf(stderr, "linkctr: %s\n", e.what());
        return kExitUsage;
    } catch (const parse_error& e) {
        std::fprintf(stderr, "linkctr: %s\n", e.what());
        return kExitInput;
    } catch (const structural_error& e) {
        std::fprintf(stderr, "linkctr: %s\n", e.what());
        return kExitInput;
    } catch (const std::runtime_error& e) {
        std::fprintf(stderr, "linkctr: %s\n", e.what());
        return kExitInput;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "linkctr: internal error: %s\n", e.what());
        return kExitInternal;
    }
}

} // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run_cli(args);
}
