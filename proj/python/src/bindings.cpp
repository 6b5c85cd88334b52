#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "rindep/betti.hpp"
#include "rindep/collapse.hpp"
#include "rindep/complex.hpp"
#include "rindep/corpus.hpp"
#include "rindep/error.hpp"
#include "rindep/graph.hpp"
#include "rindep/homology.hpp"
#include "rindep/ideal.hpp"

namespace py = pybind11;
using namespace rindep;

namespace {

using Table = std::map<std::pair<int, int>, std::uint64_t>;

std::vector<std::vector<int>> as_lists(const std::vector<VertexSet>& sets) {
  std::vector<std::vector<int>> out;
  out.reserve(sets.size());
  for (VertexSet s : sets) out.push_back(s.to_vector());
  return out;
}

Table betti(const Graph& g, int r, const std::string& method, std::uint32_t characteristic) {
  if (method == "split") return betti_from_split_tree(cochordal_split_tree(g, r)).entries();
  if (method == "oracle") return hochster_betti(ind_r(g, r), FieldSpec(characteristic)).entries();
  throw InputError("method must be 'split' or 'oracle'");
}

Table closed_form(const std::string& family, int n, int r) {
  if (family == "variables") return closed_form_betti(ClosedFormFamily::variables(n)).entries();
  switch (parse_family(family)) {
    case Family::complete: return closed_form_betti(ClosedFormFamily::complete(n, r)).entries();
    case Family::star: return closed_form_betti(ClosedFormFamily::star(n, r)).entries();
    case Family::kn_x: return closed_form_betti(ClosedFormFamily::kn_x(n, r)).entries();
    case Family::path_complement: return closed_form_betti(ClosedFormFamily::path_complement(n, r)).entries();
    default: throw InputError("no closed form for family '" + family + "'");
  }
}

}  // namespace

PYBIND11_MODULE(_rindep, m) {
  m.doc() = "r-independence complexes of graphs";
  py::register_exception<InconsistencyError>(m, "InconsistencyError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&Graph::build), py::arg("n"), py::arg("edges"))
      .def_static("family", [](const std::string& name, int n) { return generate_family(parse_family(name), n); },
                  py::arg("name"), py::arg("n"))
      .def_static("parse", &parse_graph, py::arg("text"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("edges", &Graph::edges)
      .def("complement", [](const Graph& g) { return complement(g); })
      .def("is_chordal", [](const Graph& g) { return is_chordal(g).has_value(); })
      .def("is_cochordal", [](const Graph& g) { return is_cochordal(g); })
      .def("to_text", &graph_to_string)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph order=" + std::to_string(g.order()) + " edges=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("ind_r", [](const Graph& g, int r) { return as_lists(ind_r(g, r).facets()); }, py::arg("graph"),
        py::arg("r"), "Facets of the r-independence complex.");
  m.def("sr_generators", [](const Graph& g, int r) { return as_lists(sr_generators(g, r)); }, py::arg("graph"),
        py::arg("r"), "Minimal generators of the Stanley-Reisner ideal I_r.");
  m.def("betti", &betti, py::arg("graph"), py::arg("r"), py::arg("method") = "split",
        py::arg("characteristic") = 2, "Graded Betti numbers of R/I_r as {(i, j): value}.");
  m.def("closed_form_betti", &closed_form, py::arg("family"), py::arg("n"), py::arg("r") = 0);
  m.def("leray_number", [](const Graph& g, int r, std::uint32_t p) { return leray_number(ind_r(g, r), FieldSpec(p)); },
        py::arg("graph"), py::arg("r"), py::arg("characteristic") = 2);
  m.def("split_tree", [](const Graph& g, int r) { return split_tree_to_string(cochordal_split_tree(g, r)); },
        py::arg("graph"), py::arg("r"));
  m.def("collapse_certificate",
        [](const Graph& g, int r) { return certificate_to_string(chordal_collapse_sequence(g, r)); },
        py::arg("graph"), py::arg("r"));
  m.def(
      "verify_certificate",
      [](const Graph& g, int r, const std::string& text) {
        const CollapseSequence seq = parse_certificate(text);
        const CollapseVerdict v = verify_collapse(ind_r(g, r), seq, seq.d);
        return std::make_tuple(v.valid, v.bad_step ? py::object(py::int_(*v.bad_step)) : py::object(py::none()),
                               v.reason);
      },
      py::arg("graph"), py::arg("r"), py::arg("certificate"),
      "Returns (valid, first bad step or None, reason).");
  m.def(
      "run_corpus",
      [](const std::string& kind, int count, int n_min, int n_max, std::uint64_t seed, const std::string& checks,
         int jobs) {
        CorpusSpec spec;
        spec.kind = parse_corpus_kind(kind);
        spec.count = count;
        spec.n_min = n_min;
        spec.n_max = n_max;
        spec.seed = seed;
        const CorpusReport report = run_corpus(spec, parse_checks(checks), FieldSpec(2), jobs);
        return std::make_pair(report.ok(), report.to_text());
      },
      py::arg("kind") = "random_cochordal", py::arg("count") = 100, py::arg("n_min") = 3, py::arg("n_max") = 7,
      py::arg("seed") = 1, py::arg("checks") = "all", py::arg("jobs") = 1);
}
