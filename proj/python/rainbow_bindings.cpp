#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rainbow/bounds.hpp"
#include "rainbow/canonical.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/enumerate.hpp"
#include "rainbow/extremal.hpp"
#include "rainbow/formats.hpp"
#include "rainbow/graph6.hpp"
#include "rainbow/solver.hpp"
#include "rainbow/verify.hpp"

namespace py = pybind11;
using namespace rainbow;

namespace {

std::vector<std::pair<int, int>> edge_pairs(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

EdgeColoring make_coloring(const Graph& g, const std::vector<int>& colors, int k) {
  if (static_cast<int>(colors.size()) != g.size())
    throw InputError("need one color per edge, in graph.edges() order");
  EdgeColoring col{k, {}};
  for (int c : colors) {
    if (c < 1) throw InputError("colors are positive integers");
    col.colors.push_back(static_cast<Color>(c));
    col.k = std::max(col.k, c);
  }
  return col;
}

std::vector<int> color_list(const EdgeColoring& col) {
  return {col.colors.begin(), col.colors.end()};
}

SearchOptions budget_options(std::uint64_t budget) {
  SearchOptions o;
  if (budget > 0) o.node_budget = budget;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact rainbow connection numbers and the extremal function t(n,d)";

  auto base = py::register_exception<Error>(m, "RainbowError", PyExc_RuntimeError);
  py::register_exception<InputError>(m, "InputError", base);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def_static(
          "from_edges",
          [](int n, const std::vector<std::pair<int, int>>& edges) {
            return Graph::from_edge_list(n, edges);
          },
          py::arg("n"), py::arg("edges"))
      .def_static("from_graph6", [](const std::string& s) { return graph6_decode(s); })
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("edges", &edge_pairs)
      .def("graph6", [](const Graph& g) { return graph6_encode(g); })
      .def("degree", &Graph::degree)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.size()) +
               ", g6='" + graph6_encode(g) + "')";
      });

  m.def("graph6_encode", &graph6_encode);
  m.def("graph6_decode", [](const std::string& s) { return graph6_decode(s); });
  m.def("canonical_label", [](const Graph& g) { return canonical_form(g); });
  m.def("is_connected", &is_connected);
  m.def("diameter", &diameter);
  m.def("bridges", [](const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (const Edge& e : bridges(g)) out.emplace_back(e.u, e.v);
    return out;
  });

  m.def(
      "is_rainbow_connected",
      [](const Graph& g, const std::vector<int>& colors) {
        const EdgeColoring col = make_coloring(g, colors, 0);
        const VerifyResult v = is_rainbow_connected(g, col);
        py::dict out;
        out["rainbow_connected"] = v.rainbow_connected;
        out["failing_pair"] = v.failing_pair;
        py::list paths;
        for (const PairPath& p : v.certificate.paths) paths.append(py::make_tuple(p.s, p.t, p.path));
        out["paths"] = paths;
        return out;
      },
      py::arg("graph"), py::arg("colors"));

  m.def(
      "rc",
      [](const Graph& g, int k_max, std::uint64_t budget) {
        const int kmax = k_max > 0 ? k_max : std::max(1, std::min(g.size(), kMaxSearchColors));
        RcResult r;
        {
          py::gil_scoped_release release;
          r = rc_exact(g, kmax, budget_options(budget));
        }
        return py::make_tuple(r.rc, color_list(r.witness));
      },
      py::arg("graph"), py::arg("k_max") = 0, py::arg("budget") = 0,
      "Exact rc(G) and a witness coloring (colors in graph.edges() order).");

  m.def(
      "connected_graphs",
      [](int n, int m_min, int m_max) {
        if (m_max < 0) m_max = n * (n - 1) / 2;
        return connected_graphs(EnumerationQuery::edges(n, m_min, m_max));
      },
      py::arg("n"), py::arg("m_min") = 0, py::arg("m_max") = -1);

  m.def(
      "build_gdn",
      [](int n, int d) {
        const GdnConstruction c = build_gdn(n, d);
        return py::make_tuple(c.graph, color_list(c.coloring));
      },
      py::arg("n"), py::arg("d"));

  m.def("bounds", [](int n, int d) { return bound_report_json(bound_report(n, d)).dump(); },
        py::arg("n"), py::arg("d"), "Bound report as a JSON string.");
  m.def("bridge_lower", &eval_prop2_lower);
  m.def("hub_upper", &eval_prop3_upper);
  m.def("jarry_laugier", &eval_jarry_laugier);

  m.def(
      "tnd",
      [](int n, int d, int workers, std::uint64_t budget) {
        ExtremalOptions opts;
        opts.search = budget_options(budget);
        opts.workers = workers;
        std::string record;
        {
          py::gil_scoped_release release;
          record = extremal_json(compute_tnd(n, d, opts)).dump();
        }
        return record;
      },
      py::arg("n"), py::arg("d"), py::arg("workers") = 1, py::arg("budget") = 0,
      "t(n,d) record as a JSON string.");
}
