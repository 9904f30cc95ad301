#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "relate/cnf.hpp"
#include "relate/decide.hpp"
#include "relate/error.hpp"
#include "relate/graph.hpp"
#include "relate/json_io.hpp"
#include "relate/reductions.hpp"
#include "relate/sat_solve.hpp"

namespace py = pybind11;
using namespace relate;

namespace {

std::vector<std::vector<int>> clauses_of(const CnfFormula& f) {
  std::vector<std::vector<int>> out;
  for (const Clause& c : f.clauses()) {
    std::vector<int> lits;
    for (Literal l : c) lits.push_back(l.to_dimacs());
    out.push_back(std::move(lits));
  }
  return out;
}

// Python side sees assignments as lists of bools, index 0 = variable 1.
std::vector<bool> bits_of(const TruthAssignment& t) {
  std::vector<bool> out;
  for (int v = 1; v <= t.num_vars(); ++v) out.push_back(t.value(v));
  return out;
}

TruthAssignment assignment_of(const std::vector<bool>& bits) {
  TruthAssignment t(static_cast<int>(bits.size()));
  for (std::size_t i = 0; i < bits.size(); ++i) t.set(static_cast<int>(i) + 1, bits[i]);
  return t;
}

py::object optional_set(const std::optional<VertexSet>& s) {
  if (!s) return py::none();
  return py::cast(*s);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Relating edges, shedding vertices and the SAT to RE reduction chain";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  py::class_<CnfFormula>(m, "CnfFormula")
      .def(py::init(&CnfFormula::from_dimacs_clauses), py::arg("num_vars"), py::arg("clauses"))
      .def_property_readonly("num_vars", &CnfFormula::num_vars)
      .def_property_readonly("clauses", &clauses_of)
      .def("__len__", &CnfFormula::num_clauses)
      .def("__eq__", [](const CnfFormula& a, const CnfFormula& b) { return a == b; })
      .def("__repr__", [](const CnfFormula& f) {
        std::ostringstream ss;
        ss << "CnfFormula(" << f.num_vars() << ", " << f.num_clauses() << " clauses)";
        return ss.str();
      });

  m.def("parse_dimacs", [](const std::string& s) { return parse_dimacs(s); });
  m.def("emit_dimacs", &emit_dimacs);
  m.def("evaluate", [](const CnfFormula& f, const std::vector<bool>& t) {
    return evaluate(f, assignment_of(t));
  });
  m.def("major_literals", [](const CnfFormula& f) {
    std::vector<int> out;
    for (Literal l : classify_literals(f).major) out.push_back(l.to_dimacs());
    return out;
  });
  m.def("find_bad_pairs", [](const CnfFormula& f) {
    std::vector<std::tuple<int, int, int, int>> out;
    for (const BadPair& p : find_bad_pairs(f)) {
      out.emplace_back(p.clause_a, p.clause_b, p.lit_1.to_dimacs(), p.lit_2.to_dimacs());
    }
    return out;
  });
  m.def("is_23sat_instance", [](const CnfFormula& f) { return is_23sat_instance(f).valid; });

  m.def(
      "solve",
      [](const CnfFormula& f, std::uint64_t budget) -> py::object {
        const SolveResult r = solve(f, budget);
        if (!r.satisfiable) return py::none();
        return py::cast(bits_of(*r.model));
      },
      py::arg("formula"), py::arg("budget") = kDefaultNodeBudget,
      "A model as a list of bools, or None when unsatisfiable.");
  m.def("solve_brute", [](const CnfFormula& f) -> py::object {
    const SolveResult r = solve_brute(f);
    if (!r.satisfiable) return py::none();
    return py::cast(bits_of(*r.model));
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("num_vertices") = 0)
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
             Graph g(n);
             for (auto [u, v] : edges) g.add_edge(u, v);
             return g;
           }),
           py::arg("num_vertices"), py::arg("edges"))
      .def("add_vertex", &Graph::add_vertex)
      .def("add_edge", &Graph::add_edge)
      .def("adjacent", &Graph::adjacent)
      .def("neighbors", &Graph::neighbors)
      .def("degree", &Graph::degree)
      .def_property_readonly("num_vertices", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def_property_readonly("edges",
                             [](const Graph& g) {
                               std::vector<std::pair<int, int>> out;
                               for (Edge e : g.edges()) out.emplace_back(e.u, e.v);
                               return out;
                             })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; });

  m.def("parse_graph_dimacs", [](const std::string& s) { return parse_graph_dimacs(s); });
  m.def("emit_graph_dimacs", &emit_graph_dimacs);
  m.def("neighborhood_layer",
        py::overload_cast<const Graph&, const VertexSet&, int>(&neighborhood_layer));
  m.def("closed_neighborhood",
        py::overload_cast<const Graph&, const VertexSet&, int>(&closed_neighborhood));
  m.def("dominates", &dominates);
  m.def("is_independent", &is_independent);
  m.def("is_maximal_independent", &is_maximal_independent);
  m.def("maximal_independent_sets", &enumerate_maximal_independent_sets, py::arg("graph"),
        py::arg("cap") = kDefaultMisCap);
  m.def("is_well_covered", &is_well_covered, py::arg("graph"), py::arg("cap") = kDefaultMisCap);
  m.def("greedy_mis", &greedy_mis);
  m.def("find_cycle", &contains_cycle_of_length, py::arg("graph"), py::arg("k"));

  m.def(
      "is_relating",
      [](const Graph& g, Vertex x, Vertex y, std::uint64_t cap) {
        const auto d = is_relating(g, x, y, cap);
        return py::make_tuple(d.relating, d.witness ? optional_set(d.witness->set_s) : py::none());
      },
      py::arg("graph"), py::arg("x"), py::arg("y"), py::arg("cap") = kDefaultSubsetCap,
      "(relating, witness set or None)");
  m.def(
      "is_shedding",
      [](const Graph& g, Vertex v, std::uint64_t cap) {
        const auto d = is_shedding(g, v, cap);
        return py::make_tuple(d.shedding, d.witness ? optional_set(d.witness->set_s) : py::none());
      },
      py::arg("graph"), py::arg("v"), py::arg("cap") = kDefaultSubsetCap,
      "(shedding, non-shedding witness set or None)");
  m.def("is_w2", &is_w2_desk, py::arg("graph"), py::arg("cap") = kDefaultSubsetCap,
        py::arg("mis_cap") = kDefaultMisCap);
  m.def("is_valid_relating_witness", [](const Graph& g, Vertex x, Vertex y, const VertexSet& s) {
    return is_valid_relating_witness(g, x, y, RelatingWitness{s});
  });
  m.def("is_valid_shed_witness", [](const Graph& g, Vertex v, const VertexSet& s) {
    return is_valid_shed_witness(g, v, ShedComplementWitness{s});
  });

  m.def("to_23sat", [](const CnfFormula& f) {
    auto r = to_23sat(f);
    return py::make_tuple(r.result, trace_to_json(r.trace).dump());
  });
  m.def("eliminate_bad_pairs", [](const CnfFormula& f) {
    auto r = eliminate_bad_pairs(f);
    return py::make_tuple(r.result, trace_to_json(r.trace).dump());
  });
  m.def("build_g_i", [](const CnfFormula& f) {
    SatGraph gi = build_g_i(f);
    return py::make_tuple(gi.graph, map_to_json(gi.map).dump());
  });
  m.def("shed_to_re", [](const Graph& g, Vertex x) {
    ReInstance re = shed_to_re(g, x);
    return py::make_tuple(re.graph, std::make_pair(re.edge.u, re.edge.v));
  });

  py::class_<PipelineArtifact>(m, "Pipeline")
      .def(py::init(&full_pipeline), py::arg("formula"))
      .def_readonly("sat23", &PipelineArtifact::sat23)
      .def_readonly("bad_pair_free", &PipelineArtifact::bad_pair_free)
      .def_property_readonly("gi_graph", [](const PipelineArtifact& a) { return a.gi.graph; })
      .def_property_readonly("re_graph", [](const PipelineArtifact& a) { return a.re.graph; })
      .def_property_readonly("re_edge",
                             [](const PipelineArtifact& a) {
                               return std::make_pair(a.re.edge.u, a.re.edge.v);
                             })
      .def_property_readonly("trace_json",
                             [](const PipelineArtifact& a) { return trace_to_json(a.trace()).dump(); })
      .def("forward_witness",
           [](const PipelineArtifact& a, const std::vector<bool>& model) {
             return forward_witness(a, assignment_of(model)).set_s;
           })
      .def("backward_assignment", [](const PipelineArtifact& a, const VertexSet& s) {
        return bits_of(backward_assignment(a, RelatingWitness{s}));
      });

#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#endif
}
