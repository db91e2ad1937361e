#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mvmatch/crosscheck.hpp"
#include "mvmatch/dimacs.hpp"
#include "mvmatch/graph.hpp"
#include "mvmatch/oracle.hpp"
#include "mvmatch/phase.hpp"
#include "mvmatch/solver.hpp"

namespace py = pybind11;
using namespace mvmatch;

namespace {

using Pairs = std::vector<std::pair<Vertex, Vertex>>;

Pairs to_pairs(const Matching& m) {
  Pairs out;
  for (const Edge& e : m.pairs()) out.emplace_back(e.u, e.v);
  return out;
}

Matching from_pairs(const Graph& g, const Pairs& pairs) {
  Matching m(g.num_vertices());
  for (const auto& [u, v] : pairs) {
    if (u < 0 || v < 0 || u >= g.num_vertices() || v >= g.num_vertices() || u == v)
      throw InputError("pair (" + std::to_string(u) + ", " + std::to_string(v) + ") is out of range");
    if (m.is_matched(u) || m.is_matched(v))
      throw InputError("vertex in pair (" + std::to_string(u) + ", " + std::to_string(v) + ") is matched twice");
    m.match(u, v);
  }
  const ValidationReport report = validate_matching(g, m);
  if (!report.violations.empty()) throw InputError(report.violations.front().message);
  return m;
}

Graph make_graph(int n, const Pairs& edges) {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (const auto& [u, v] : edges) es.push_back({u, v});
  return Graph(n, es);
}

Pairs edge_list(const Graph& g) {
  Pairs out;
  for (EdgeId e = 0; e < g.num_edges(); ++e) out.emplace_back(g.edge(e).u, g.edge(e).v);
  return out;
}

std::optional<int> finite(int x) { return x == kInfinity ? std::nullopt : std::optional<int>(x); }

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Maximum cardinality matching in general graphs";

  py::register_exception<InputError>(mod, "InputError", PyExc_ValueError);
  py::register_exception<GuardExceeded>(mod, "GuardExceeded", PyExc_ValueError);

  py::class_<Graph>(mod, "Graph")
      .def(py::init(&make_graph), py::arg("num_vertices"), py::arg("edges"))
      .def_property_readonly("num_vertices", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def("edges", &edge_list)
      .def("__repr__", [](const Graph& g) {
        return "Graph(num_vertices=" + std::to_string(g.num_vertices()) +
               ", num_edges=" + std::to_string(g.num_edges()) + ")";
      });

  mod.def("parse_dimacs", &parse_dimacs_string, py::arg("text"));
  mod.def(
      "write_dimacs",
      [](const Graph& g) {
        std::ostringstream s;
        write_dimacs(g, s);
        return s.str();
      },
      py::arg("graph"));
  mod.def("random_graph", &generate_random_graph, py::arg("n"), py::arg("m"), py::arg("seed"));

  mod.def(
      "max_matching",
      [](const Graph& g, const std::optional<Pairs>& initial) {
        SolveOptions options;
        if (initial) options.initial = from_pairs(g, *initial);
        SolveResult r;
        {
          py::gil_scoped_release release;
          r = solve(g, options);
        }
        py::dict out;
        out["pairs"] = to_pairs(r.matching);
        out["size"] = r.matching.size();
        out["phases"] = r.num_phases();
        return out;
      },
      py::arg("graph"), py::arg("initial") = py::none(),
      "Returns a dict with the matched pairs, their count and the number of phases.");

  mod.def(
      "run_phase",
      [](const Graph& g, const Pairs& matching) {
        const PhaseResult r = run_phase(g, from_pairs(g, matching));
        std::vector<std::vector<Vertex>> paths;
        for (const AlternatingPath& p : r.paths) paths.push_back(p.vertices);
        py::dict out;
        out["l_m"] = finite(r.l_m);
        out["paths"] = paths;
        return out;
      },
      py::arg("graph"), py::arg("matching"),
      "One phase: minimum augmenting path length (None if there is none) and a maximal set of disjoint paths.");

  mod.def(
      "validate_matching",
      [](const Graph& g, const std::vector<Vertex>& partners) {
        std::vector<std::string> messages;
        for (const MatchingViolation& v : validate_matching(g, Matching::from_partners(partners)).violations)
          messages.push_back(v.message);
        return messages;
      },
      py::arg("graph"), py::arg("partners"),
      "Violations of a partner array (-1 for unmatched); empty when valid.");

  mod.def(
      "brute_max_matching_size",
      [](const Graph& g, bool guard_override) {
        OracleOptions o;
        o.guard_override = guard_override;
        return brute_max_matching(g, o).size;
      },
      py::arg("graph"), py::arg("guard_override") = false);

  mod.def(
      "cross_check",
      [](const Graph& g, const Pairs& matching) { return cross_check_phase(g, from_pairs(g, matching)).findings(); },
      py::arg("graph"), py::arg("matching"),
      "Compares one engine phase with the brute-force oracle; returns the findings, empty when they agree.");
}
