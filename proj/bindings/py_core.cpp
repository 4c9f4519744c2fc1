#include "gwalk/graph.hpp"
#include "gwalk/grover.hpp"
#include "gwalk/pst.hpp"
#include "gwalk/spectral.hpp"
#include "gwalk/spectrum_search.hpp"
#include "gwalk/walk_regularity.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;
using namespace gwalk;

namespace {

py::object json_to_py(const nlohmann::json& j) {
    switch (j.type()) {
        case nlohmann::json::value_t::null: return py::none();
        case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
        case nlohmann::json::value_t::number_integer: return py::int_(j.get<long long>());
        case nlohmann::json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
        case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
        case nlohmann::json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case nlohmann::json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default: return py::none();
    }
}

py::list spectrum_to_py(const SpectrumReport& spec) {
    py::list out;
    for (const auto& [val, mult] : spec.eigenvalues)
        out.append(py::make_tuple(val.str(), mult, val.approx()));
    return out;
}

py::dict row_to_py(const FeasibleRow& r) {
    py::dict d;
    d["k"] = r.k;
    d["n"] = r.n;
    d["alpha"] = r.alpha;
    d["beta"] = r.beta;
    d["gamma"] = r.gamma;
    d["t_x"] = py::int_(py::str(r.t_x.get_str()));
    d["q"] = py::int_(py::str(r.q.get_str()));
    d["q_x"] = py::int_(py::str(r.q_x.get_str()));
    d["spectrum"] = r.spectrum_string();
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Grover-walk analysis on regular graphs: spectra, periodicity, "
              "perfect state transfer, walk-regularity, feasible-spectrum tables";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<UnsupportedGraph>(m, "UnsupportedGraph", PyExc_ValueError);
    py::register_exception<IrreducibleCubicOrHigher>(m, "IrreducibleCubicOrHigher",
                                                     PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def_static(
            "from_edges",
            [](int n, const std::vector<std::pair<int, int>>& edges, const std::string& label) {
                return Graph::from_edges(n, edges, label);
            },
            py::arg("n"), py::arg("edges"), py::arg("label") = "")
        .def_property_readonly("n", &Graph::n)
        .def_property_readonly("label", &Graph::label)
        .def("degree", &Graph::degree)
        .def("adjacent", &Graph::adjacent)
        .def("edge_count", &Graph::edge_count)
        .def("neighbors", &Graph::neighbors)
        .def("__repr__",
             [](const Graph& g) {
                 return "Graph(" + (g.label().empty() ? std::to_string(g.n()) + " vertices"
                                                      : g.label()) +
                        ")";
             });

    m.def("construct", &construct, py::arg("expression"),
          "Build a graph from the construction-expression grammar, e.g. "
          "'coclique(hamming(3,3),2)'");
    m.def("parse_graph6", [](const std::string& s) { return parse_graph6(s); });
    m.def("to_graph6", &to_graph6);

    m.def("basic_predicates", [](const Graph& g) {
        auto p = basic_predicates(g);
        py::dict d;
        d["regular"] = p.regular ? py::object(py::int_(*p.regular)) : py::object(py::none());
        d["connected"] = p.connected;
        d["complete"] = p.complete;
        d["bipartite"] = p.bipartite;
        return d;
    });

    m.def("spectrum", [](const Graph& g) { return spectrum_to_py(exact_spectrum(g.adjacency_matrix())); },
          "Exact adjacency spectrum as (value string, multiplicity, float approximation)");
    m.def("spectrum_string",
          [](const Graph& g) { return exact_spectrum(g.adjacency_matrix()).spectrum_string(); });
    m.def("char_poly_string",
          [](const Graph& g) { return char_poly(g.adjacency_matrix()).str(); });

    m.def("srg_recognize", [](const Graph& g) -> py::object {
        auto p = srg_recognize(g);
        if (!p) return py::none();
        return py::make_tuple(p->n, p->k, p->lambda, p->mu);
    });
    m.def("classify_swr", [](const Graph& g, long ell_max) {
        auto c = classify_swr(g, ell_max);
        py::dict d;
        d["tag"] = swr_tag_name(c.tag);
        d["witness_ell"] =
            c.witness_ell ? py::object(py::int_(*c.witness_ell)) : py::object(py::none());
        return d;
    }, py::arg("g"), py::arg("ell_max") = 21);
    m.def("is_strongly_l_walk_regular", [](const Graph& g, long ell) -> py::object {
        auto abc = is_strongly_l_walk_regular(g, ell);
        if (!abc) return py::none();
        return py::make_tuple(rat_str((*abc)[0]), rat_str((*abc)[1]), rat_str((*abc)[2]));
    });

    m.def("count_triangles_through",
          [](const Graph& g, int x) { return count_triangles_through(g, x).get_si(); });
    m.def("walk_counts", [](const Graph& g, int x, long r) {
        py::list out;
        for (const Int& v : walk_counts(g, x, r)) out.append(py::int_(py::str(v.get_str())));
        return out;
    });

    m.def("pst_at_time", &pst_at_time, py::arg("g"), py::arg("tau"),
          "Ordered pairs (x, y) with T_tau(P) e_x = e_y, exactly");
    m.def("eigenvalue_support", [](const Graph& g, int x) {
        py::list out;
        for (const auto& lam : eigenvalue_support(g, x).eigenvalues) out.append(lam.str());
        return out;
    }, py::arg("g"), py::arg("x"), "Eigenvalues of P whose projections do not kill e_x");
    m.def("pst_via_conditions", [](const Graph& g, int x, int y, long tau) {
        auto v = pst_via_conditions(g, x, y, tau);
        py::dict d;
        d["transfers"] = v.transfers;
        d["reason"] = v.reason;
        return d;
    }, py::arg("g"), py::arg("x"), py::arg("y"), py::arg("tau"));
    m.def("algebraic_integer_filter", [](const Graph& g) {
        auto v = algebraic_integer_filter(g);
        py::dict d;
        d["passes"] = v.status == FilterStatus::Pass;
        d["failing"] = v.failing ? py::object(py::str(v.failing->str()))
                                 : py::object(py::none());
        return d;
    });
    m.def("analyze", [](const Graph& g, long tau_max) {
        return json_to_py(report_to_json(minimal_time_scan(g, tau_max)));
    }, py::arg("g"), py::arg("tau_max") = 60,
       "Full PST report: filter, periodicity, transfers with certificates");
    m.def("is_periodic", [](const Graph& g) -> py::object {
        try {
            auto v = check_periodic_spectral(g);
            return py::make_tuple(v.periodic,
                                  v.period ? py::object(py::int_(*v.period))
                                           : py::object(py::none()));
        } catch (const UnsupportedGraph&) {
            auto v = check_periodic_direct(build_operators(g), 120);
            return py::make_tuple(v.periodic,
                                  v.period ? py::object(py::int_(*v.period))
                                           : py::object(py::none()));
        }
    });

    m.def("feasible_rows", [](long k) {
        py::list out;
        for (const auto& r : feasible_rows(k)) out.append(row_to_py(r));
        return out;
    });
    m.def("enumerate_tables", [](long k_max) {
        py::list out;
        for (const auto& r : enumerate_tables(k_max)) out.append(row_to_py(r));
        return out;
    }, py::arg("k_max") = 20);
}
