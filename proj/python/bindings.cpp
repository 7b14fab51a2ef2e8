#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "scd/baselines.hpp"
#include "scd/error.hpp"
#include "scd/graph.hpp"
#include "scd/kmeans.hpp"
#include "scd/lfr.hpp"
#include "scd/metrics.hpp"
#include "scd/netmf.hpp"
#include "scd/parallel.hpp"
#include "scd/ppr.hpp"
#include "scd/search.hpp"
#include "scd/silhouette.hpp"

namespace py = pybind11;
using namespace scd;

namespace {

using LabelArray = py::array_t<std::int64_t, py::array::c_style | py::array::forcecast>;

Partition to_partition(const LabelArray& labels) {
    auto r = labels.unchecked<1>();
    std::vector<std::int64_t> raw(r.shape(0));
    for (py::ssize_t i = 0; i < r.shape(0); ++i) raw[i] = r(i);
    return Partition::from_labels(raw);
}

// Copies; the span usually points into a temporary Partition.
py::array_t<std::uint32_t> to_array(std::span<const std::uint32_t> labels) {
    return py::array_t<std::uint32_t>(static_cast<py::ssize_t>(labels.size()), labels.data());
}

// Accepts an (m, 2) or (m, 3) array of node ids and optional weights.
Graph graph_from_array(std::size_t n, py::array_t<double, py::array::c_style | py::array::forcecast> edges) {
    if (edges.ndim() != 2 || (edges.shape(1) != 2 && edges.shape(1) != 3))
        throw ConfigError("edges: expected an (m, 2) or (m, 3) array");
    auto e = edges.unchecked<2>();
    std::vector<Edge> list;
    list.reserve(e.shape(0));
    for (py::ssize_t i = 0; i < e.shape(0); ++i) {
        if (e(i, 0) < 0 || e(i, 1) < 0 || e(i, 0) != std::floor(e(i, 0)) || e(i, 1) != std::floor(e(i, 1)))
            throw ConfigError("edges: node ids must be non-negative integers");
        list.push_back({static_cast<NodeId>(e(i, 0)), static_cast<NodeId>(e(i, 1)), e.shape(1) == 3 ? e(i, 2) : 1.0});
    }
    return Graph::from_edges(n, list);
}

EmbeddingParams make_params(const std::string& backend, int window, int negative, int dimension) {
    EmbeddingParams p;
    p.backend = backend_from_string(backend);
    p.window = window;
    p.negative = negative;
    p.dimension = dimension;
    p.validate();
    return p;
}

py::dict record_dict(const EvaluationRecord& r) {
    py::dict d;
    d["param_set"] = r.param_index;
    d["k"] = r.k;
    d["ok"] = r.ok;
    d["silhouette"] = r.ok ? py::cast(r.silhouette) : py::none();
    d["phase"] = to_string(r.phase);
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Silhouette community detection";
    m.attr("__version__") = SCD_VERSION;

    py::register_exception<DataError>(m, "DataError", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init(&graph_from_array), py::arg("num_nodes"), py::arg("edges"),
             "Undirected graph from an (m, 2) or (m, 3) array of edges. Self-loops are dropped and "
             "repeated pairs merged by summing weights.")
        .def_static(
            "from_file",
            [](const std::string& path, bool weighted) {
                auto loaded = load_edge_list_file(path, weighted);
                std::vector<std::string> ids(loaded.ids.size());
                for (NodeId i = 0; i < ids.size(); ++i) ids[i] = loaded.ids.token(i);
                return py::make_tuple(std::move(loaded.graph), ids);
            },
            py::arg("path"), py::arg("weighted") = false,
            "Loads an edge list; returns (graph, original node tokens).")
        .def_property_readonly("num_nodes", &Graph::num_nodes)
        .def_property_readonly("num_edges", &Graph::num_edges)
        .def("degree", &Graph::degree, py::arg("node"))
        .def("volume", &Graph::volume)
        .def("edges",
             [](const Graph& g) {
                 py::array_t<double> out({static_cast<py::ssize_t>(g.num_edges()), py::ssize_t{3}});
                 auto w = out.mutable_unchecked<2>();
                 for (std::size_t i = 0; i < g.num_edges(); ++i) {
                     const auto& e = g.edges()[i];
                     w(i, 0) = e.u, w(i, 1) = e.v, w(i, 2) = e.w;
                 }
                 return out;
             })
        .def("__repr__", [](const Graph& g) {
            return "<scd.Graph nodes=" + std::to_string(g.num_nodes()) + " edges=" + std::to_string(g.num_edges()) + ">";
        });

    m.def("netmf_target", [](const Graph& g, int window, int negative) { return netmf_target(g, window, negative); },
          py::arg("graph"), py::arg("window") = 5, py::arg("negative") = 1);
    m.def(
        "netmf_embed",
        [](const Graph& g, int window, int negative, int dimension, std::uint64_t seed) {
            auto p = make_params("netmf", window, negative, dimension);
            p.seed = seed;
            return netmf_embed(g, p).matrix;
        },
        py::arg("graph"), py::arg("window") = 5, py::arg("negative") = 1, py::arg("dimension") = 32, py::arg("seed") = 0);
    m.def(
        "ppr_vector",
        [](const Graph& g, NodeId source, double alpha, double tol, int max_iter) {
            return ppr_vector(g, source, PprParams{alpha, tol, max_iter}).values;
        },
        py::arg("graph"), py::arg("source"), py::arg("alpha") = 0.85, py::arg("tol") = 1e-6, py::arg("max_iter") = 100);
    m.def(
        "ppr_embed",
        [](const Graph& g, double alpha, double tol, int max_iter) {
            return ppr_embed(g, make_params("ppr", 5, 1, 32), PprParams{alpha, tol, max_iter}).embedding.matrix;
        },
        py::arg("graph"), py::arg("alpha") = 0.85, py::arg("tol") = 1e-6, py::arg("max_iter") = 100);

    m.def(
        "kmeans",
        [](const RowMatrix& x, std::size_t k, std::uint64_t seed, int n_init) {
            KMeansOptions o;
            o.n_init = n_init;
            auto model = minibatch_kmeans(x, k, seed, o);
            return py::make_tuple(to_array(model.labels), model.centers, model.inertia);
        },
        py::arg("points"), py::arg("k"), py::arg("seed") = 0, py::arg("n_init") = 10,
        "Mini-batch k-means; returns (labels, centers, inertia).");
    m.def(
        "silhouette_samples",
        [](const RowMatrix& x, const LabelArray& labels) {
            auto p = to_partition(labels);
            return SilhouetteEvaluator(x).evaluate(p.labels()).per_point;
        },
        py::arg("points"), py::arg("labels"));
    m.def(
        "silhouette",
        [](const RowMatrix& x, const LabelArray& labels) {
            auto p = to_partition(labels);
            return SilhouetteEvaluator(x).global(p.labels());
        },
        py::arg("points"), py::arg("labels"));

    m.def("gamma_estimate", &gamma_estimate, py::arg("max_k"));
    m.def("valid_range", &valid_range, py::arg("max_k"), py::arg("gamma"), py::arg("k_min"));

    m.def(
        "detect",
        [](const Graph& g, const std::string& backend, std::vector<int> windows, std::vector<int> negatives,
           std::vector<int> dimensions, std::size_t max_k, std::size_t gamma, std::size_t patience, std::size_t k_min,
           std::optional<std::size_t> fine_radius, std::uint64_t seed) {
            SearchConfig c;
            if (backend == "ppr") {
                c.param_sets = {make_params("ppr", 5, 1, 32)};
            } else {
                for (int b : negatives)
                    for (int t : windows)
                        for (int d : dimensions) c.param_sets.push_back(make_params(backend, t, b, d));
            }
            c.max_k = max_k;
            c.gamma = gamma;
            c.patience = patience;
            c.k_min = k_min;
            c.fine_radius = fine_radius;
            c.seed = seed;
            Detection det;
            {
                py::gil_scoped_release release;
                det = scd_detect(g, c);
            }
            const auto& best = det.report.param_sets.at(det.report.best_param).params;
            py::dict params;
            params["backend"] = to_string(best.backend);
            params["window"] = best.window;
            params["negative"] = best.negative;
            params["dimension"] = best.dimension;
            py::list records;
            for (const auto& r : det.report.records) records.append(record_dict(r));
            py::dict out;
            out["labels"] = to_array(det.partition.labels());
            out["k"] = det.report.best_k;
            out["silhouette"] = det.report.best_quality;
            out["params"] = params;
            out["gamma"] = det.report.gamma;
            out["isolated_nodes"] = det.report.isolated_nodes;
            out["records"] = records;
            return out;
        },
        py::arg("graph"), py::arg("backend") = "netmf", py::arg("windows") = std::vector<int>{5},
        py::arg("negatives") = std::vector<int>{1}, py::arg("dimensions") = std::vector<int>{32}, py::arg("max_k") = 0,
        py::arg("gamma") = 0, py::arg("patience") = 5, py::arg("k_min") = 5, py::arg("fine_radius") = py::none(),
        py::arg("seed") = 0,
        "Silhouette community detection. Returns a dict with labels, k, silhouette, the winning "
        "embedding params and every evaluation record.");

    m.def("nmi", [](const LabelArray& t, const LabelArray& p) { return nmi(to_partition(t), to_partition(p)); },
          py::arg("truth"), py::arg("pred"));
    m.def("ari", [](const LabelArray& t, const LabelArray& p) { return ari(to_partition(t), to_partition(p)); },
          py::arg("truth"), py::arg("pred"));
    m.def("modularity", [](const Graph& g, const LabelArray& l) { return modularity(g, to_partition(l)); },
          py::arg("graph"), py::arg("labels"));
    m.def(
        "louvain",
        [](const Graph& g, std::uint64_t seed) {
            LouvainOptions o;
            o.seed = seed;
            return to_array(louvain(g, o).labels());
        },
        py::arg("graph"), py::arg("seed") = 0);
    m.def(
        "label_propagation", [](const Graph& g, std::uint64_t seed) { return to_array(label_propagation(g, seed).labels()); },
        py::arg("graph"), py::arg("seed") = 0);

    m.def(
        "generate_lfr",
        [](std::size_t n, double avg_deg, int max_deg, double mixing, double degree_exp, double comm_exp,
           std::uint64_t seed) {
            LfrParams p{n, avg_deg, max_deg, mixing, degree_exp, comm_exp, seed};
            auto l = generate_lfr(p);
            auto truth = to_array(l.truth.labels());
            return py::make_tuple(std::move(l.graph), truth, l.empirical_mixing);
        },
        py::arg("n") = 1000, py::arg("avg_deg") = 15.0, py::arg("max_deg") = 50, py::arg("mixing") = 0.1,
        py::arg("degree_exp") = 2.0, py::arg("comm_exp") = 1.0, py::arg("seed") = 0,
        "Simplified LFR benchmark; returns (graph, truth labels, empirical mixing).");

    m.def("set_num_threads", &set_num_threads, py::arg("threads"), "0 restores the runtime default.");
}
