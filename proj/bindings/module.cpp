#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "minorlab/adversary.hpp"
#include "minorlab/containment.hpp"
#include "minorlab/detector.hpp"
#include "minorlab/graph_io.hpp"
#include "minorlab/isomorphism.hpp"
#include "minorlab/minor_theory.hpp"
#include "minorlab/spectral.hpp"
#include "minorlab/vertex_cover.hpp"
#include "minorlab/walk_cost.hpp"

namespace py = pybind11;
using namespace minorlab;

namespace {

py::dict quantities_dict(const AdversaryQuantities& q) {
    py::dict d;
    d["m"] = q.m;
    d["m_prime"] = q.m_prime;
    d["l_max"] = q.l_max;
    d["quantum_bound"] = q.quantum_bound;
    d["classical_bound"] = q.classical_bound;
    d["v"] = py::make_tuple(q.v_num, q.v_den);
    return d;
}

py::dict plan_dict(const CostBreakdown& p) {
    py::dict d;
    d["setup"] = p.setup;
    d["update"] = p.update;
    d["checking"] = p.checking;
    d["gap"] = p.gap;
    d["marked_fraction"] = p.marked_fraction;
    d["total"] = p.total;
    py::list buckets;
    for (const auto& b : p.buckets)
        buckets.append(py::dict(py::arg("q") = b.q, py::arg("t") = b.t, py::arg("k") = b.k,
                                py::arg("alpha") = b.alpha));
    d["buckets"] = buckets;
    return d;
}

py::object witness_obj(const std::optional<ContainmentWitness>& w) {
    if (!w) return py::none();
    py::dict d;
    d["vertex_map"] = w->vertex_map;
    d["branch_sets"] = w->branch_sets;
    d["paths"] = w->paths;
    return d;
}

std::unique_ptr<RelationFamily> make_family(const std::string& name, int d, const Graph* base,
                                            int u, int v) {
    if (name == "forest") return family_forest();
    if (name == "clique") return family_clique(d);
    if (name == "edge-split") {
        if (!base) throw std::invalid_argument("edge-split family needs a base graph");
        return family_edge_split(*base, u, v);
    }
    throw std::invalid_argument("unknown family: " + name);
}

}  // namespace

PYBIND11_MODULE(_minorlab, m) {
    m.doc() = "graph containment oracles, adversary bounds, and quantum walk cost models";

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n") = 0)
        .def_static("from_edges", &Graph::from_edges)
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def("has_edge", &Graph::has_edge)
        .def("add_edge", &Graph::add_edge)
        .def("remove_edge", &Graph::remove_edge)
        .def("degree", &Graph::degree)
        .def("neighbors", &Graph::neighbors)
        .def("edges", &Graph::edges)
        .def("is_connected", &Graph::is_connected)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) +
                   ", m=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("path_with_edges", &path_with_edges);
    m.def("cycle_graph", &cycle_graph);
    m.def("complete_graph", &complete_graph);
    m.def("star_graph", &star_graph);
    m.def("claw_subdivision", &claw_subdivision);
    m.def("complete_bipartite", &complete_bipartite);
    m.def("pattern", &resolve_pattern, "Resolve a builtin pattern name or load a graph file");
    m.def("parse_graph", &parse_graph);
    m.def("to_graph6", &write_graph6);
    m.def("from_graph6", &read_graph6);

    m.def("canonical_hex", &canonical_hex);
    m.def("is_isomorphic", &is_isomorphic);

    m.def("subdivide_edge", &subdivide_edge);
    m.def("contract_edge", &contract_edge);
    m.def(
        "is_subgraph",
        [](const Graph& h, const Graph& g, bool induced) {
            return witness_obj(is_subgraph(h, g, induced));
        },
        py::arg("pattern"), py::arg("host"), py::arg("induced") = false);
    m.def("is_minor",
          [](const Graph& h, const Graph& g) { return witness_obj(is_minor(h, g)); });
    m.def("is_topological_minor", [](const Graph& h, const Graph& g) {
        return witness_obj(is_topological_minor(h, g));
    });
    m.def("minor_closure_contains",
          [](const Graph& h, const Graph& g) { return minor_closure_contains(h, g); });
    m.def("enumerate_subdivisions", &enumerate_subdivisions);

    m.def("min_vertex_cover", [](const Graph& g) {
        auto c = min_vertex_cover(g);
        return py::make_tuple(c.size, c.vertices);
    });
    m.def("vc_path", &vc_path);
    m.def("vc_claw", &vc_claw);

    m.def("beta", &beta);
    m.def("classify_edges", [](const Graph& g) {
        auto cls = classify_edges(g);
        py::dict d;
        d["beta"] = static_cast<int>(cls.internal_edges.size());
        d["internal_edges"] = cls.internal_edges;
        d["external_edges"] = cls.external_edges;
        d["dangling_paths"] = cls.dangling_paths;
        return d;
    });
    m.def("replace_edge_with_paths", &replace_edge_with_paths);
    m.def("is_star_subdivision_family", &is_star_subdivision_family);
    m.def("is_path_or_claw_family", &is_path_or_claw_family);
    m.def(
        "check_edge_suitability",
        [](const std::vector<Graph>& s, const std::vector<Graph>& b, const Graph& g, int u, int v,
           int lmax) {
            auto verdict =
                check_edge_suitability(ForbiddenFamily::make(s, b), g, u, v, lmax);
            py::dict d;
            d["suitable"] = verdict.suitable;
            d["lmax"] = verdict.lmax;
            if (!verdict.suitable) d["fail"] = py::make_tuple(verdict.fail_p, verdict.fail_q);
            return d;
        },
        py::arg("topological_minors"), py::arg("subgraphs"), py::arg("g"), py::arg("u"),
        py::arg("v"), py::arg("lmax"));

    m.def(
        "adversary_quantities",
        [](const std::string& family, int n, bool use_explicit, int d, const Graph* base, int u,
           int v) {
            auto fam = make_family(family, d, base, u, v);
            auto q = use_explicit ? quantities_explicit(*fam, n) : quantities_symmetric(*fam, n);
            return quantities_dict(q);
        },
        py::arg("family"), py::arg("n"), py::arg("use_explicit") = false, py::arg("d") = 3,
        py::arg("base") = nullptr, py::arg("u") = 0, py::arg("v") = 1);
    m.def(
        "adversary_scaling",
        [](const std::string& family, const std::vector<int>& sizes, int d) {
            auto fam = make_family(family, d, nullptr, 0, 1);
            auto fit = scaling_fit(*fam, sizes);
            return py::make_tuple(fit.slope, fit.residual);
        },
        py::arg("family"), py::arg("sizes"), py::arg("d") = 3);

    m.def("hamming_gap", [](long long n, long long k) {
        auto r = hamming_gap(n, k);
        return py::make_tuple(r.num, r.den);
    });
    m.def("johnson_gap", [](long long n, long long k) {
        auto r = johnson_gap(n, k);
        return py::make_tuple(r.num, r.den);
    });
    m.def("hamming_gap_numeric", &hamming_gap_numeric);
    m.def("johnson_gap_numeric", &johnson_gap_numeric);
    m.def("walk_search_cost", &walk_search_cost);
    m.def("plan_basic",
          [](const Graph& h, double n) { return plan_dict(plan_basic(h, n)); });
    m.def("plan_dangling",
          [](const Graph& h, double n) { return plan_dict(plan_dangling(h, n)); });
    m.def("plan_paths", [](int k, double n) { return plan_dict(plan_paths(k, n)); });
    m.def("plan_pseudosparse", [](const Graph& h, double n, double mbar) {
        return plan_dict(plan_pseudosparse(h, n, mbar));
    });
    m.def("plan_fourcycle", [](double n) { return plan_dict(plan_fourcycle(n)); });
    m.def("sparse_pipeline_cost", &sparse_pipeline_cost);
    m.def("kpath_exponent", &kpath_exponent);
    m.def("exponent_table", []() {
        py::list rows;
        for (const auto& r : exponent_table())
            rows.append(py::make_tuple(r.problem, r.predicted, r.fitted, r.residual));
        return rows;
    });

    m.def(
        "detect",
        [](const Graph& host, const Graph& pattern, const std::string& mode, std::uint64_t seed,
           double confidence, double c_param) {
            DetectMode dm;
            if (mode == "basic")
                dm = DetectMode::basic;
            else if (mode == "dangling")
                dm = DetectMode::dangling;
            else if (mode == "paths")
                dm = DetectMode::paths;
            else if (mode == "fourcycle")
                dm = DetectMode::fourcycle;
            else
                throw std::invalid_argument("unknown mode: " + mode);
            OracleGraph oracle(host);
            auto report = detect_subgraph(oracle, pattern, dm, seed, confidence, c_param);
            py::dict d;
            d["found"] = report.found;
            d["gate_accepted"] = report.gate_accepted;
            d["witness"] = report.witness ? py::cast(*report.witness) : py::object(py::none());
            d["probes"] = report.probes;
            d["rounds"] = report.rounds;
            return d;
        },
        py::arg("host"), py::arg("pattern"), py::arg("mode") = "basic", py::arg("seed") = 0,
        py::arg("confidence") = 0.9, py::arg("c_param") = 1.0);
    m.def("color_rounds", &color_rounds);
}
