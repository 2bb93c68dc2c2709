#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "linkctr/ctr.hpp"
#include "linkctr/errors.hpp"
#include "linkctr/events.hpp"
#include "linkctr/generate.hpp"
#include "linkctr/graph.hpp"
#include "linkctr/rng.hpp"
#include "linkctr/si.hpp"
#include "linkctr/sir.hpp"
#include "linkctr/tail.hpp"
#include "linkctr/ties.hpp"
#include "linkctr/version.hpp"

namespace py = pybind11;
using namespace linkctr;

namespace {

Graph graph_from_tuples(const std::vector<std::tuple<std::uint64_t, std::uint64_t, double>>& edges) {
    std::vector<RawEdge> raw;
    raw.reserve(edges.size());
    for (const auto& [u, v, w] : edges) raw.push_back({u, v, w});
    return build_graph(raw);
}

EdgeMetrics make_metrics(std::vector<double> overlap, std::vector<double> strength,
                         std::vector<double> ctr) {
    EdgeMetrics m;
    m.overlap = std::move(overlap);
    m.strength = std::move(strength);
    m.ctr = std::move(ctr);
    return m;
}

} // namespace

PYBIND11_MODULE(linkctr, m) {
    m.doc() = "link transmission centrality and controlled-spreading experiments";
    m.attr("__version__") = kVersion;

    py::register_exception<argument_error>(m, "ArgumentError", PyExc_ValueError);
    py::register_exception<config_error>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<structural_error>(m, "StructuralError", PyExc_ValueError);

    py::class_<Edge>(m, "Edge")
        .def_readonly("u", &Edge::u)
        .def_readonly("v", &Edge::v)
        .def_readonly("weight", &Edge::weight)
        .def("__repr__", [](const Edge& e) {
            return "Edge(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ", w=" +
                   std::to_string(e.weight) + ")";
        });

    py::class_<Graph>(m, "Graph")
        .def_property_readonly("node_count", &Graph::node_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("edge", &Graph::edge, py::return_value_policy::reference_internal)
        .def("edges", &Graph::edges, py::return_value_policy::reference_internal)
        .def("degree", &Graph::degree)
        .def("label", &Graph::label)
        .def("neighbors", [](const Graph& g, node_id v) {
            const auto span = g.neighbors(v);
            return std::vector<std::pair<node_id, edge_id>>(span.begin(), span.end());
        });

    m.def("build_graph", &graph_from_tuples, py::arg("edges"),
          "build an undirected graph from (u, v, weight) tuples");
    m.def("k_core", &k_core, py::arg("g"), py::arg("k"));
    m.def("largest_connected_component", &largest_connected_component, py::arg("g"));
    m.def("bfs_distances", &bfs_distances, py::arg("g"), py::arg("source"));
    m.def("generate_er", &generate_er, py::arg("n"), py::arg("p"), py::arg("rng_seed"));
    m.def("generate_sbm", &generate_sbm, py::arg("block_sizes"), py::arg("p_in"),
          py::arg("p_out"), py::arg("rng_seed"));
    m.def("sbm_blocks", &sbm_blocks, py::arg("block_sizes"));

    m.def(
        "aggregate_events",
        [](const std::vector<std::tuple<std::int64_t, std::uint64_t, std::uint64_t>>& events,
           bool directed, bool require_mutual) {
            EventStream stream;
            stream.directed = directed;
            for (const auto& [t, src, dst] : events) stream.events.push_back({t, src, dst});
            return aggregate_events(stream, require_mutual);
        },
        py::arg("events"), py::arg("directed") = true, py::arg("require_mutual") = false,
        "aggregate (time, src, dst) events into a weighted graph");

    py::class_<BranchingTree>(m, "BranchingTree")
        .def_readonly("root", &BranchingTree::root)
        .def_readonly("parent", &BranchingTree::parent)
        .def_readonly("parent_edge", &BranchingTree::parent_edge)
        .def_readonly("round", &BranchingTree::round)
        .def_readonly("order", &BranchingTree::order)
        .def_property_readonly("reached", &BranchingTree::reached);

    m.def(
        "simulate_si",
        [](const Graph& g, node_id seed, double beta, std::uint64_t master_seed) {
            Rng rng(master_seed, StreamKind::si_realization, seed);
            return simulate_si(g, seed, beta, rng);
        },
        py::arg("g"), py::arg("seed"), py::arg("beta"), py::arg("master_seed"),
        py::call_guard<py::gil_scoped_release>());
    m.def("tree_depths", &tree_depths, py::arg("tree"));

    py::class_<EdgeCentrality>(m, "EdgeCentrality")
        .def_readonly("values", &EdgeCentrality::values)
        .def_readonly("sums", &EdgeCentrality::sums)
        .def_readonly("contributions", &EdgeCentrality::contributions)
        .def_readonly("realizations", &EdgeCentrality::realizations)
        .def("flagged", &EdgeCentrality::flagged);

    m.def("per_realization_ctr", &per_realization_ctr, py::arg("g"), py::arg("tree"));
    m.def(
        "exact_average_ctr",
        [](const Graph& g, double beta, std::uint64_t master_seed, int threads) {
            CtrOptions opts;
            opts.threads = threads;
            return exact_average_ctr(g, beta, master_seed, opts);
        },
        py::arg("g"), py::arg("beta"), py::arg("master_seed"), py::arg("threads") = 0,
        py::call_guard<py::gil_scoped_release>());
    m.def(
        "approx_ctr",
        [](const Graph& g, double beta, std::uint64_t num_seeds, std::int32_t unbias_distance,
           std::uint64_t master_seed, int threads) {
            CtrOptions opts;
            opts.threads = threads;
            return approx_ctr(g, beta, num_seeds, unbias_distance, master_seed, opts);
        },
        py::arg("g"), py::arg("beta"), py::arg("num_seeds"), py::arg("unbias_distance"),
        py::arg("master_seed"), py::arg("threads") = 0,
        py::call_guard<py::gil_scoped_release>());
    m.def(
        "scan_unbias_distance",
        [](const Graph& g, double beta, std::uint64_t num_seeds,
           const std::vector<std::int32_t>& d_range, std::uint64_t master_seed, int threads) {
            CtrOptions opts;
            opts.threads = threads;
            const DistanceScan scan =
                scan_unbias_distance(g, beta, num_seeds, d_range, master_seed, opts);
            return py::make_tuple(scan.table, scan.recommended);
        },
        py::arg("g"), py::arg("beta"), py::arg("num_seeds"), py::arg("d_range"),
        py::arg("master_seed"), py::arg("threads") = 0,
        py::call_guard<py::gil_scoped_release>());

    m.def("ccdf", [](const std::vector<double>& v) { return ccdf(v); }, py::arg("values"));
    m.def(
        "tail_exponent",
        [](const std::vector<double>& v, double xmin) { return tail_exponent(v, xmin); },
        py::arg("values"), py::arg("xmin"));

    m.def("overlap", &overlap, py::arg("g"), py::arg("e"));
    m.def("overlap_all", &overlap_all, py::arg("g"));
    m.def("dyadic_strength", &dyadic_strength, py::arg("g"), py::arg("e"));
    m.def("strength_all", &strength_all, py::arg("g"));
    m.def("zero_overlap_fraction", &zero_overlap_fraction, py::arg("g"));

    py::class_<EdgeRanking>(m, "EdgeRanking")
        .def_property_readonly("strategy",
                               [](const EdgeRanking& r) { return to_string(r.strategy); })
        .def_readonly("order", &EdgeRanking::order)
        .def_readonly("inputs_hash", &EdgeRanking::inputs_hash);

    m.def(
        "rank_edges",
        [](std::size_t edge_count, const std::string& strategy, std::vector<double> overlap,
           std::vector<double> strength, std::vector<double> ctr, std::uint64_t rng_seed) {
            return rank_edges(edge_count, parse_strategy(strategy),
                              make_metrics(std::move(overlap), std::move(strength),
                                           std::move(ctr)),
                              rng_seed);
        },
        py::arg("edge_count"), py::arg("strategy"), py::arg("overlap") = std::vector<double>{},
        py::arg("strength") = std::vector<double>{}, py::arg("ctr") = std::vector<double>{},
        py::arg("rng_seed") = 0);

    m.def(
        "pearson",
        [](const std::vector<double>& x, const std::vector<double>& y) {
            const PearsonResult pr = pearson(x, y);
            return py::make_tuple(pr.r, pr.p);
        },
        py::arg("x"), py::arg("y"));

    py::class_<ControlPlan>(m, "ControlPlan")
        .def_readonly("base", &ControlPlan::base)
        .def_readonly("effective", &ControlPlan::effective)
        .def_readonly("controlled", &ControlPlan::controlled)
        .def_readonly("delta", &ControlPlan::delta);

    m.def(
        "normalize_weights",
        [](const Graph& g, const std::string& mode) {
            return normalize_weights(
                g, mode == "weighted" ? WeightMode::weighted : WeightMode::unweighted);
        },
        py::arg("g"), py::arg("mode") = "unweighted");
    m.def(
        "build_control_plan",
        [](const Graph& g, const EdgeRanking& ranking, double f, double delta,
           const std::vector<double>& omega) {
            return build_control_plan(g, ranking, f, delta, omega);
        },
        py::arg("g"), py::arg("ranking"), py::arg("f"), py::arg("delta"), py::arg("omega"));
    m.def(
        "uncontrolled_plan",
        [](const Graph& g, const std::string& mode) {
            ControlPlan plan;
            plan.base = normalize_weights(
                g, mode == "weighted" ? WeightMode::weighted : WeightMode::unweighted);
            plan.effective = plan.base;
            return plan;
        },
        py::arg("g"), py::arg("mode") = "unweighted");

    py::class_<SirOutcome>(m, "SirOutcome")
        .def_readonly("recovered_final", &SirOutcome::recovered_final)
        .def_readonly("rounds", &SirOutcome::rounds)
        .def_readonly("seed", &SirOutcome::seed);

    m.def(
        "simulate_sir",
        [](const Graph& g, const ControlPlan& plan, double beta, double mu, node_id seed,
           std::uint64_t master_seed, std::uint64_t run) {
            Rng rng(master_seed, StreamKind::sir_run, run);
            return simulate_sir(g, plan, beta, mu, seed, rng);
        },
        py::arg("g"), py::arg("plan"), py::arg("beta"), py::arg("mu"), py::arg("seed"),
        py::arg("master_seed"), py::arg("run") = 0,
        py::call_guard<py::gil_scoped_release>());

    py::class_<ExperimentRow>(m, "ExperimentRow")
        .def_property_readonly("strategy",
                               [](const ExperimentRow& r) { return to_string(r.strategy); })
        .def_readonly("f", &ExperimentRow::f)
        .def_readonly("delta", &ExperimentRow::delta)
        .def_readonly("mean_R", &ExperimentRow::mean_R)
        .def_readonly("stderr_R", &ExperimentRow::stderr_R)
        .def_readonly("num_runs", &ExperimentRow::num_runs);

    py::class_<RatioRow>(m, "RatioRow")
        .def_readonly("pair", &RatioRow::pair)
        .def_readonly("f", &RatioRow::f)
        .def_readonly("delta", &RatioRow::delta)
        .def_readonly("phi", &RatioRow::phi)
        .def_readonly("stderr_phi", &RatioRow::stderr_phi);

    py::class_<ExperimentResult>(m, "ExperimentResult")
        .def_readonly("rows", &ExperimentResult::rows)
        .def_readonly("ratios", &ExperimentResult::ratios)
        .def_readonly("seeds", &ExperimentResult::seeds);

    m.def(
        "run_experiment",
        [](const Graph& g, const std::map<std::string, EdgeRanking>& rankings, double beta,
           double mu, const std::vector<double>& f_grid, const std::vector<double>& delta_grid,
           const std::vector<std::string>& strategies, std::uint64_t num_seeds,
           std::uint64_t master_seed, const std::string& mode, int threads) {
            ExperimentConfig cfg;
            cfg.beta = beta;
            cfg.mu = mu;
            cfg.f_grid = f_grid;
            cfg.delta_grid = delta_grid;
            for (const std::string& s : strategies)
                cfg.strategies.push_back(parse_strategy(s));
            cfg.num_seeds = num_seeds;
            cfg.master_seed = master_seed;
            cfg.mode = mode == "weighted" ? WeightMode::weighted : WeightMode::unweighted;
            cfg.threads = threads;
            std::map<RankStrategy, EdgeRanking> resolved;
            for (const auto& [name, ranking] : rankings)
                resolved[parse_strategy(name)] = ranking;
            return run_experiment(g, resolved, cfg);
        },
        py::arg("g"), py::arg("rankings"), py::arg("beta"), py::arg("mu"), py::arg("f_grid"),
        py::arg("delta_grid"), py::arg("strategies"), py::arg("num_seeds"),
        py::arg("master_seed"), py::arg("mode") = "unweighted", py::arg("threads") = 0,
        py::call_guard<py::gil_scoped_release>());
}
