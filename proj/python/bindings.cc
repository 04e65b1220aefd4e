#include <magiclab/drg.hh>
#include <magiclab/generators.hh>
#include <magiclab/graph6.hh>
#include <magiclab/json_io.hh>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace magiclab;

namespace
{
    auto distance_set_of(const std::vector<int> & d) -> DistanceSet
    {
        return DistanceSet(d);
    }

    auto matrix_from(const std::vector<std::vector<long long>> & rows) -> IntMatrix
    {
        int r = static_cast<int>(rows.size());
        int c = r ? static_cast<int>(rows[0].size()) : 0;
        IntMatrix m(r, c);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(rows[i].size()) != c)
                throw std::invalid_argument("ragged matrix");
            for (int j = 0; j < c; ++j)
                m(i, j) = rows[i][j];
        }
        return m;
    }

    auto srg_input_from(const py::object & params) -> SrgInput
    {
        if (py::isinstance<py::int_>(params))
            return CompleteGraph{params.cast<int>()};
        auto v = params.cast<std::vector<int>>();
        if (v.size() != 4)
            throw std::invalid_argument("SRG parameters are (n, r, a, c); pass an int for K_n");
        return SrgParams{v[0], v[1], v[2], v[3]};
    }
}

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Native core of magiclab";

    py::register_exception<Graph6Error>(m, "Graph6Error", PyExc_ValueError);
    py::register_exception<ArrayParseError>(m, "ArrayParseError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def_static("from_graph6", [](const std::string & s) { return parse_graph6(s); })
        .def_static("from_edges", [](int n, const std::vector<Edge> & edges) { return Graph::from_edges(n, edges); })
        .def_static("from_text", &read_graph_text, "graph6 or JSON adjacency text")
        .def_property_readonly("n", &Graph::order)
        .def("add_edge", &Graph::add_edge)
        .def("adjacent", &Graph::adjacent)
        .def("degree", &Graph::degree)
        .def("neighbours", &Graph::neighbours)
        .def("edge_count", &Graph::edge_count)
        .def("edges", &Graph::edges)
        .def("to_graph6", [](const Graph & g) { return write_graph6(g); })
        .def("to_json", [](const Graph & g) { return graph_to_json(g).dump(); })
        .def("__eq__", [](const Graph & a, const Graph & b) { return a == b; })
        .def("__repr__", [](const Graph & g) {
            return "<magiclab.Graph n=" + std::to_string(g.order()) + " edges=" + std::to_string(g.edge_count()) + ">";
        });

    m.def("generate", py::overload_cast<const std::string &>(&generate), py::arg("spec"));
    m.def("line_graph", &line_graph);
    m.def("complement", &complement);
    m.def("distance_matrix", [](const Graph & g) {
        DistanceMatrix d(g);
        std::vector<std::vector<std::optional<int>>> rows(g.order());
        for (int u = 0; u < g.order(); ++u)
            for (int v = 0; v < g.order(); ++v) {
                int e = d.at(u, v);
                rows[u].push_back(e == DistanceMatrix::unreachable ? std::nullopt : std::optional<int>(e));
            }
        return rows;
    });
    m.def("d_neighborhood", [](const Graph & g, int x, const std::vector<int> & d) {
        return d_neighborhood(g, x, distance_set_of(d));
    });
    m.def("info_json", [](const Graph & g) { return info_json(g).dump(); });
    m.def("srg_parameters", [](const Graph & g) -> std::optional<std::tuple<int, int, int, int>> {
        if (auto p = srg_parameters(g))
            return std::tuple{p->n, p->r, p->a, p->c};
        return std::nullopt;
    });
    m.def("intersection_array", [](const Graph & g) -> std::optional<std::string> {
        if (auto arr = intersection_array(g))
            return arr->to_string();
        return std::nullopt;
    });

    m.def("det_exact", [](const std::vector<std::vector<long long>> & rows) {
        std::ostringstream s;
        s << det_exact(matrix_from(rows));
        return py::int_(py::str(s.str()));
    });
    m.def("nullity", [](const std::vector<std::vector<long long>> & rows) { return nullity(matrix_from(rows)); });
    m.def("has_integer_eigenvalue", &has_integer_eigenvalue, py::arg("g"), py::arg("lam"));
    m.def("eigenvalue_multiplicity", &eigenvalue_multiplicity, py::arg("g"), py::arg("lam"));
    m.def("lemma_det_condition", [](const std::string & arr) { return lemma_det_condition(IntersectionArray::parse(arr)); });
    m.def("tridiagonal_T", [](const std::string & arr) { return tridiagonal_T(IntersectionArray::parse(arr)).to_json_string(); });

    m.def("magic_constant", [](long long n, long long r, bool closed) {
        return magic_constant(n, r, closed ? NeighbourhoodMode::closed : NeighbourhoodMode::open);
    }, py::arg("n"), py::arg("r"), py::arg("closed") = false);
    m.def("parity_precheck", [](long long n, long long r, bool closed) {
        return parity_precheck(n, r, closed ? NeighbourhoodMode::closed : NeighbourhoodMode::open);
    }, py::arg("n"), py::arg("r"), py::arg("closed") = false);
    m.def("verify_labeling", [](const Graph & g, const std::vector<int> & d, const Labeling & f) {
        return verify_labeling(g, distance_set_of(d), f);
    });
    m.def("search_json", [](const Graph & g, const std::vector<int> & d, const std::string & algo, long long timeout_ms,
                             unsigned workers) {
        SearchConfig cfg;
        cfg.d = distance_set_of(d);
        if (algo == "naive")
            cfg.algorithm = SearchAlgorithm::naive;
        else if (algo == "backtrack")
            cfg.algorithm = SearchAlgorithm::backtrack;
        else
            throw std::invalid_argument("algo must be 'naive' or 'backtrack'");
        cfg.timeout = std::chrono::milliseconds(timeout_ms);
        cfg.workers = workers;
        SearchOutcome outcome;
        {
            py::gil_scoped_release release;
            outcome = search(g, cfg);
        }
        return to_json(outcome).dump();
    }, py::arg("g"), py::arg("d"), py::arg("algo") = "backtrack", py::arg("timeout_ms") = 0, py::arg("workers") = 1);
    m.def("hnp_labeling", &hnp_labeling);

    m.def("hnp_predicate", &hnp_predicate);
    m.def("srg_feasible", [](int n, int r, int a, int c) { return srg_feasible({n, r, a, c}); });
    m.def("classify_json", [](const py::object & params) { return classify_json(srg_input_from(params)).dump(); });
    m.def("eq_ldrg_filter", [](int n, int r, int a, int c) { return eq_ldrg_filter({n, r, a, c}); });
    m.def("eq_cdm_filter", [](int n, int r, int a, int c) { return eq_cdm_filter({n, r, a, c}); });
    m.def("linegraph_pipeline_json", [](int r_max, bool run_searches, int max_vertices) {
        PipelineOptions options;
        options.r_max = r_max;
        options.run_searches = run_searches;
        options.desk_scale_vertices = max_vertices;
        py::gil_scoped_release release;
        return to_json(linegraph_pipeline(options)).dump();
    }, py::arg("r_max") = 6, py::arg("run_searches") = true, py::arg("max_vertices") = 20);

    m.def("vertex_count", [](const std::string & arr) { return vertex_count(IntersectionArray::parse(arr)); });
    m.def("filter_arrays_json", [](const std::string & text) {
        return to_json(diam3_magic_filter(parse_array_file(text))).dump();
    });
    m.def("cross_check_json", [](const std::string & text) {
        return to_json(cross_check_known(parse_array_file(text))).dump();
    });
}
