#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "deds/approx.hpp"
#include "deds/domination.hpp"
#include "deds/error.hpp"
#include "deds/fpt.hpp"
#include "deds/gen.hpp"
#include "deds/kernel.hpp"
#include "deds/oracle.hpp"
#include "deds/tournament.hpp"
#include "deds/twdp.hpp"

namespace py = pybind11;
using namespace deds;

namespace {

using ArcList = std::vector<std::pair<Vertex, Vertex>>;

Digraph make_graph(int n, const ArcList& arcs) {
  std::vector<Arc> list;
  list.reserve(arcs.size());
  for (auto [u, v] : arcs) list.push_back({u, v});
  return Digraph(n, std::move(list));
}

ArcList endpoints(const Digraph& g, const std::vector<ArcId>& arcs) {
  ArcList out;
  for (ArcId a : arcs) out.push_back({g.arc(a).tail, g.arc(a).head});
  return out;
}

ArcList all_arcs(const Digraph& g) {
  ArcList out;
  for (const Arc& e : g.arcs()) out.push_back({e.tail, e.head});
  return out;
}

std::vector<ArcId> ids(const Digraph& g, const ArcList& arcs) {
  std::vector<ArcId> out;
  for (auto [u, v] : arcs) {
    auto a = g.find_arc(u, v);
    if (!a) throw InputError("arc (" + std::to_string(u) + "," + std::to_string(v) + ") not in graph");
    out.push_back(*a);
  }
  return out;
}

py::object solution_or_none(const Digraph& g, const std::optional<Solution>& sol) {
  if (!sol) return py::none();
  return py::cast(endpoints(g, sol->arcs));
}

}  // namespace

PYBIND11_MODULE(_deds, m) {
  m.doc() = "Directed (p,q)-edge dominating set solvers";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  m.def("verify",
        [](int n, const ArcList& arcs, int p, int q, const ArcList& solution) {
          auto g = make_graph(n, arcs);
          return verify(Instance(g, p, q), ids(g, solution));
        },
        py::arg("n"), py::arg("arcs"), py::arg("p"), py::arg("q"), py::arg("solution"));

  m.def("solve_oracle",
        [](int n, const ArcList& arcs, int p, int q, std::optional<int> k) {
          auto g = make_graph(n, arcs);
          return solution_or_none(g, exact_min_deds(Instance(g, p, q), k.value_or(g.num_arcs())));
        },
        py::arg("n"), py::arg("arcs"), py::arg("p"), py::arg("q"), py::arg("k") = py::none());

  m.def("solve_fpt01",
        [](int n, const ArcList& arcs, int k) {
          auto g = make_graph(n, arcs);
          return solution_or_none(g, solve_01(g, k));
        },
        py::arg("n"), py::arg("arcs"), py::arg("k"));

  m.def("solve_fpt11",
        [](int n, const ArcList& arcs, int k) {
          auto g = make_graph(n, arcs);
          return solution_or_none(g, solve_11(g, k));
        },
        py::arg("n"), py::arg("arcs"), py::arg("k"));

  m.def("approx01", [](int n, const ArcList& arcs) {
    auto g = make_graph(n, arcs);
    return endpoints(g, approx_01(g).solution.arcs);
  });
  m.def("approx11", [](int n, const ArcList& arcs) {
    auto g = make_graph(n, arcs);
    return endpoints(g, approx_11(g).solution.arcs);
  });

  m.def("solve_twdp",
        [](int n, const ArcList& arcs, int p, int q) {
          auto g = make_graph(n, arcs);
          auto r = solve_twdp(Instance(g, p, q), make_nice(heuristic_td(g)));
          return endpoints(g, r.solution.arcs);
        },
        py::arg("n"), py::arg("arcs"), py::arg("p"), py::arg("q"));

  m.def("solve_tournament",
        [](int n, const ArcList& arcs, int p, int q) {
          auto g = make_graph(n, arcs);
          auto sol = solve_tournament(Tournament(g), p, q);
          return py::make_tuple(sol.engine, endpoints(g, sol.arcs));
        },
        py::arg("n"), py::arg("arcs"), py::arg("p"), py::arg("q"));

  m.def("kernelize",
        [](int n, const ArcList& arcs, int p, int q, int k) {
          auto g = make_graph(n, arcs);
          if (p == 0 && q == 1) {
            auto kr = kernelize_01(g, k);
            return py::make_tuple(to_string(kr.verdict), kr.reduced.num_vertices(), all_arcs(kr.reduced), kr.k_out);
          }
          if (p == 1 && q == 1) {
            auto kr = kernelize_11(g, k);
            return py::make_tuple(to_string(kr.verdict), kr.reduced.num_vertices(), all_arcs(kr.reduced), kr.k_out);
          }
          throw InputError("kernels exist for (0,1) and (1,1) only");
        },
        py::arg("n"), py::arg("arcs"), py::arg("p"), py::arg("q"), py::arg("k"));

  m.def("gen_tournament", [](int n, std::uint64_t seed) { return all_arcs(gen_tournament(n, seed).graph()); },
        py::arg("n"), py::arg("seed"));
  m.def("gen_digraph", [](int n, double prob, std::uint64_t seed) { return all_arcs(gen_digraph(n, prob, seed)); },
        py::arg("n"), py::arg("prob"), py::arg("seed"));
}
