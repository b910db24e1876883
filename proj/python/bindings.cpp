// Python bindings for the lineinv core. The module is deliberately thin: it
// exposes the value-semantic Graph type plus free functions that mirror the
// C++ API one-to-one, so behaviour documented for the library applies verbatim
// from Python. Containers cross the boundary by copy, which is the right
// trade-off for graphs of a few dozen vertices.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdio>
#include <string>

#include "lineinv/classify.hpp"
#include "lineinv/error.hpp"
#include "lineinv/graph.hpp"
#include "lineinv/isomorphism.hpp"
#include "lineinv/line_ops.hpp"
#include "lineinv/pseudo_inverse.hpp"
#include "lineinv/spectral.hpp"

namespace py = pybind11;

namespace {

std::string flip_repr(const lineinv::Flip& f) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "Flip(%s %d %d)", f.add ? "add" : "del", f.u, f.v);
  return buf;
}

std::string graph_repr(const lineinv::Graph& g) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "Graph(%d vertices, %d edges)", g.vertex_count(),
                g.edge_count());
  return buf;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  using namespace lineinv;

  m.doc() = "Line-graph construction, recognition, inversion, and minimum-flip repair.";

  py::register_exception<Error>(m, "Error");

  py::class_<Graph>(m, "Graph")
      .def(py::init<>())
      .def(py::init<int>(), py::arg("vertex_count"))
      .def(py::init<int, std::vector<Edge>>(), py::arg("vertex_count"), py::arg("edges"))
      .def("vertex_count", &Graph::vertex_count)
      .def("edge_count", &Graph::edge_count)
      .def("edges", &Graph::edges)
      .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
      .def("degree", &Graph::degree, py::arg("v"))
      .def("neighbors", &Graph::neighbors, py::arg("v"))
      .def("connected", &Graph::connected)
      .def("components", &Graph::components)
      .def(py::self == py::self)
      .def("__repr__", &graph_repr);

  py::class_<Flip>(m, "Flip")
      .def(py::init([](int u, int v, bool add) { return Flip{u, v, add}; }), py::arg("u"),
           py::arg("v"), py::arg("add"))
      .def_readonly("u", &Flip::u)
      .def_readonly("v", &Flip::v)
      .def_readonly("add", &Flip::add)
      .def(py::self == py::self)
      .def("__repr__", &flip_repr);

  py::class_<PseudoInverseSolution>(m, "PseudoInverseSolution")
      .def_readonly("flips", &PseudoInverseSolution::flips)
      .def_readonly("h_hat", &PseudoInverseSolution::h_hat)
      .def_readonly("g_hat", &PseudoInverseSolution::g_hat)
      .def_readonly("root_edge_of", &PseudoInverseSolution::root_edge_of)
      .def_readonly("objective", &PseudoInverseSolution::objective)
      .def_property_readonly("engine",
                             [](const PseudoInverseSolution& s) { return engine_name(s.engine); })
      .def_property_readonly(
          "proved_optimal",
          [](const PseudoInverseSolution& s) { return s.stats.proved_optimal; })
      .def("__repr__", [](const PseudoInverseSolution& s) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "PseudoInverseSolution(objective=%d, engine=%s)",
                      s.objective, engine_name(s.engine));
        return std::string(buf);
      });

  // Graph edits and serialization.
  m.def("add_edge", &add_edge, py::arg("g"), py::arg("u"), py::arg("v"));
  m.def("del_edge", &del_edge, py::arg("g"), py::arg("u"), py::arg("v"));
  m.def("relocate_edge", &relocate_edge, py::arg("g"), py::arg("from_edge"), py::arg("to_edge"));
  m.def("parse_edge_list", &parse_edge_list, py::arg("text"));
  m.def("serialize_edge_list", &serialize_edge_list, py::arg("g"));
  m.def("apply_flips", &apply_flips, py::arg("g"), py::arg("flips"));
  m.def("isomorphic", &isomorphic, py::arg("g1"), py::arg("g2"));

  // Line-graph operator and its inverse.
  m.def(
      "line_graph",
      [](const Graph& g) {
        LineGraphResult res = line_graph(g);
        return py::make_tuple(res.h, res.edge_map);
      },
      py::arg("g"),
      "Returns (h, edge_map) where vertex i of the line graph h stands for edge_map[i] of g.");
  m.def(
      "root", [](const Graph& h) { return root(h).roots; }, py::arg("h"),
      "All source graphs whose line graph is h: one entry, or two for a triangle component "
      "(3-star listed first).");
  m.def("is_line_graph", &is_line_graph, py::arg("h"));
  m.def("contains_induced_claw", &contains_induced_claw, py::arg("h"),
        "First induced 3-star as (hub, leaf, leaf, leaf), or None.");
  m.def("triangle_closing_sites", &triangle_closing_sites, py::arg("h"),
        "Triples (a, c, b) where adding (a, b) closes a triangle through the degree-2 vertex c "
        "and keeps h a line graph.");

  // Minimum-flip repair of a near line graph.
  m.def("solve_enumeration", &solve_enumeration, py::arg("h_tilde"), py::arg("k_max") = 4,
        "Lexicographically first minimum flip set, removals preferred to additions.");
  m.def(
      "solve_branch_and_bound",
      [](const Graph& h_tilde, double time_limit_s) {
        return solve_branch_and_bound(build_ilp(h_tilde), BnbOptions{time_limit_s});
      },
      py::arg("h_tilde"), py::arg("time_limit_s") = 60.0,
      "Exact binary-program search; returns the same flip set as solve_enumeration.");
  m.def("all_minimal_flip_sets", &all_minimal_flip_sets, py::arg("h_tilde"), py::arg("k_max") = 4);
  m.def(
      "verify_solution",
      [](const Graph& h_tilde, const PseudoInverseSolution& sol) {
        std::string diag;
        bool ok = verify_solution(h_tilde, sol, &diag);
        return py::make_tuple(ok, diag);
      },
      py::arg("h_tilde"), py::arg("solution"),
      "Re-derives the incidence factorization and returns (ok, diagnostic).");

  // Outcome labels for a perturb-then-repair run.
  m.def(
      "classify_case",
      [](const Graph& h, const Graph& h_tilde, const PseudoInverseSolution& sol,
         const FlipSet& added) {
        CaseResult res = classify_case(h, h_tilde, sol, added);
        return py::make_tuple(case_label_name(res.label), res.mixed);
      },
      py::arg("h"), py::arg("h_tilde"), py::arg("solution"), py::arg("added"),
      "Returns (label, mixed) with label one of I, II, III, IV, DEL, ADD.");
  m.def(
      "classify_mechanism",
      [](const Graph& g, const Graph& g_hat) {
        return mechanism_name(classify_mechanism(g, g_hat).label);
      },
      py::arg("g"), py::arg("g_hat"),
      "Single source-graph operation explaining g_hat, or 'Undetermined'.");

  // Spectral checks.
  m.def(
      "spectral_radius", [](const Graph& g, double tol) { return spectral_radius(g, tol).radius; },
      py::arg("g"), py::arg("tol") = 1e-10);
  m.def("is_smith", &is_smith, py::arg("g"), py::arg("tol") = 1e-9,
        "Connected with spectral radius at most 2 + tol.");
}
