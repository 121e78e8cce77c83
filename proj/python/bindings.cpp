#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "remmatch/cli.hpp"
#include "remmatch/connectivity.hpp"
#include "remmatch/enumerate.hpp"
#include "remmatch/error.hpp"
#include "remmatch/families.hpp"
#include "remmatch/finders.hpp"
#include "remmatch/matching.hpp"
#include "remmatch/oracle.hpp"
#include "remmatch/structure.hpp"
#include "remmatch/verify.hpp"

namespace py = pybind11;
using namespace remmatch;

namespace {

using EdgePairs = std::vector<std::pair<int, int>>;

EdgePairs pairs(const std::vector<Edge>& edges) {
  EdgePairs out;
  for (const Edge& e : edges) out.emplace_back(e.u, e.v);
  return out;
}

std::vector<Edge> edges_from(const EdgePairs& p) {
  std::vector<Edge> out;
  for (auto [a, b] : p) out.push_back(make_edge(a, b));
  return out;
}

SearchBudget budget(std::optional<std::uint64_t> nodes, std::optional<std::int64_t> ms) {
  SearchBudget b = SearchBudget::from_env();
  if (nodes) b.node_limit = *nodes;
  if (ms) b.time_limit = std::chrono::milliseconds(*ms);
  return b;
}

py::dict outcome_dict(const FinderOutcome& r) {
  py::dict d;
  d["status"] = to_string(r.status);
  d["requested_size"] = r.requested_size;
  d["route"] = r.route;
  d["matching"] = pairs(r.matching.edges());
  d["exception"] = r.status == FinderOutcome::Status::Exception ? py::object(py::str(r.exception.name()))
                                                                : py::object(py::none());
  return d;
}

py::dict report_dict(const VerificationReport& r) {
  py::dict d;
  d["theorem_id"] = r.theorem_id;
  d["conjecture"] = r.conjecture;
  d["k"] = r.k;
  d["delta"] = r.delta;
  d["n_range"] = std::make_pair(r.n_min, r.n_max);
  d["graphs_considered"] = r.graphs_considered;
  d["graphs_checked"] = r.graphs_checked;
  d["passes"] = r.passes;
  d["exceptions_matched"] = r.exceptions_matched;
  d["counterexamples"] = r.counterexamples;
  d["undecided"] = r.undecided;
  std::vector<std::string> failures;
  for (const auto& f : r.finder_failures) failures.push_back(f.graph6);
  d["finder_failures"] = failures;
  std::vector<std::pair<std::string, std::string>> exceptions;
  for (const auto& e : r.exception_instances) exceptions.emplace_back(e.graph6, e.family);
  d["exception_instances"] = exceptions;
  d["arithmetic_holds"] = r.arithmetic_holds();
  d["wall_time_ms"] = r.wall_time_ms;
  return d;
}

TheoremParams params(int k, std::optional<int> delta, int n_min, int n_max, int jobs) {
  TheoremParams p;
  p.k = k;
  p.delta = delta;
  p.n_min = n_min;
  p.n_max = n_max;
  p.jobs = jobs;
  p.budget = SearchBudget::from_env();
  return p;
}

std::vector<Graph> source_or_enumeration(const std::optional<std::vector<Graph>>& graphs, int n_min,
                                         int n_max) {
  if (graphs) return *graphs;
  return enumerate_connected_range(n_min, n_max);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Removable matchings in k-connected graphs";

  static py::exception<Error> error(m, "RemmatchError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const EdgePairs& edges) {
             const auto e = edges_from(edges);
             return Graph(n, std::span<const Edge>(e));
           }),
           py::arg("n"), py::arg("edges") = EdgePairs{})
      .def_static("from_graph6", [](const std::string& w) { return parse_graph6(w); })
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("m", &Graph::m)
      .def_property_readonly("graph6", [](const Graph& g) { return write_graph6(g); })
      .def("edges", [](const Graph& g) { return pairs(g.edges()); })
      .def("degree", &Graph::degree)
      .def("neighbors", &Graph::neighbors)
      .def("has_edge", [](const Graph& g, int u, int v) { return g.has_edge(make_edge(u, v)); })
      .def("__repr__", [](const Graph& g) {
        std::ostringstream s;
        s << "Graph(n=" << g.n() << ", m=" << g.m() << ", graph6='" << write_graph6(g) << "')";
        return s.str();
      });

  auto fam = m.def_submodule("families", "Named graphs");
  fam.def("complete", &families::complete);
  fam.def("cycle", &families::cycle);
  fam.def("path", &families::path);
  fam.def("complete_bipartite", &families::complete_bipartite);
  fam.def("star", &families::star);
  fam.def("wheel", &families::wheel);
  fam.def("petersen", &families::petersen);

  m.def("vertex_connectivity", &vertex_connectivity);
  m.def("minimum_vertex_cut", [](const Graph& g) {
    const VertexCut c = minimum_vertex_cut(g);
    return std::make_pair(c.size, c.separator.members());
  });
  m.def("is_k_connected", [](const Graph& g, int k) {
    const auto c = is_k_connected(g, k);
    py::dict d;
    d["connected"] = c.connected();
    d["k_tested"] = c.k_tested;
    d["separator"] = c.separator.members();
    return d;
  });
  m.def("min_degree", &min_degree);
  m.def("max_matching_size", &max_matching_size);
  m.def("classify_exception", [](const Graph& g) { return classify_exception(g).name(); });
  m.def("canonical_code", &canonical_code);

  m.def(
      "minimally_k_connected_reduction",
      [](const Graph& g, int k, std::optional<std::uint64_t> seed) {
        const auto r = minimally_k_connected_reduction(g, k, seed);
        return std::make_pair(r.core, pairs(r.removed));
      },
      py::arg("g"), py::arg("k"), py::arg("seed") = py::none());
  m.def("mader_audit_passes", [](const Graph& core, int k) {
    try {
      return mader_property_audit(core, k).passed();
    } catch (const Error& e) {
      if (e.code() == ErrorCode::AuditFailure) return false;
      throw;
    }
  });

  m.def(
      "find",
      [](const Graph& g, const std::string& policy, int k, std::optional<int> delta, std::optional<int> size,
         std::optional<std::uint64_t> node_limit, std::optional<std::int64_t> time_limit_ms) {
        const SearchBudget b = budget(node_limit, time_limit_ms);
        if (policy == "two") return outcome_dict(find_removable_2matching(g, k, b));
        if (policy == "half-delta") return outcome_dict(find_half_delta_matching(g, k, b));
        if (policy == "high-k") return outcome_dict(find_matching_high_k(g, k, b));
        if (policy == "one-delta")
          return outcome_dict(find_one_removable_delta(g, delta.value_or(min_degree(g)), b));
        if (policy == "half-n-min") return outcome_dict(find_one_removable_minhalf(g, b));
        if (policy == "two-near-delta") return outcome_dict(find_two_removable_near_delta(g, delta, b));
        if (policy == "exact" && size) return outcome_dict(bounded_exact_search(g, k, *size, b));
        throw Error(ErrorCode::InvalidArgument, "unknown policy or missing size: " + policy);
      },
      py::arg("g"), py::arg("policy"), py::arg("k") = 1, py::arg("delta") = py::none(),
      py::arg("size") = py::none(), py::arg("node_limit") = py::none(), py::arg("time_limit_ms") = py::none());

  m.def(
      "max_removable_matching",
      [](const Graph& g, int k, std::optional<std::uint64_t> node_limit,
         std::optional<std::int64_t> time_limit_ms) {
        const OracleResult r = max_removable_matching(g, k, budget(node_limit, time_limit_ms));
        py::dict d;
        d["r"] = r.r;
        d["witness"] = pairs(r.witness.edges());
        d["exhaustive"] = r.exhaustive;
        return d;
      },
      py::arg("g"), py::arg("k"), py::arg("node_limit") = py::none(), py::arg("time_limit_ms") = py::none());

  m.def(
      "enumerate_connected_graphs",
      [](int n, int min_connectivity, int min_degree) {
        return enumerate_connected_graphs(n, EnumerationFilter{min_connectivity, min_degree});
      },
      py::arg("n"), py::arg("min_connectivity") = 1, py::arg("min_degree") = 0);

  m.def(
      "verify_theorem",
      [](const std::string& id, int k, std::optional<int> delta, int n_min, int n_max, int jobs,
         std::optional<std::vector<Graph>> graphs) {
        py::gil_scoped_release release;
        const auto source = source_or_enumeration(graphs, n_min, n_max);
        auto r = verify_theorem(id, params(k, delta, n_min, n_max, jobs), source);
        py::gil_scoped_acquire acquire;
        return report_dict(r);
      },
      py::arg("theorem_id"), py::arg("k") = 1, py::arg("delta") = py::none(), py::arg("n_min") = 1,
      py::arg("n_max") = 7, py::arg("jobs") = 1, py::arg("graphs") = py::none());

  m.def(
      "hunt_conjecture",
      [](const std::string& id, int k, std::optional<int> delta, int n_min, int n_max, int jobs,
         std::optional<std::vector<Graph>> graphs) {
        py::gil_scoped_release release;
        const auto source = source_or_enumeration(graphs, n_min, n_max);
        auto r = hunt_conjecture(id, params(k, delta, n_min, n_max, jobs), source);
        py::gil_scoped_acquire acquire;
        return report_dict(r);
      },
      py::arg("conjecture_id"), py::arg("k") = 1, py::arg("delta") = py::none(), py::arg("n_min") = 1,
      py::arg("n_max") = 7, py::arg("jobs") = 1, py::arg("graphs") = py::none());

  m.def(
      "empirical_f",
      [](int k, int delta, int n_max, std::optional<std::vector<Graph>> graphs) {
        const auto source = source_or_enumeration(graphs, 2 * delta, std::min(n_max, kMaxEnumerationOrder));
        const EmpiricalFTable t = empirical_f(k, delta, n_max, source);
        py::dict d;
        d["k"] = t.k;
        d["delta"] = t.delta;
        d["graphs_checked"] = t.graphs_checked;
        d["lower_observed"] = t.lower_observed;
        d["witnesses"] = t.witnesses;
        d["paper_lower"] = t.paper_bounds.lower;
        d["paper_upper"] = t.paper_bounds.upper;
        d["consistent"] = t.consistent();
        return d;
      },
      py::arg("k"), py::arg("delta"), py::arg("n_max"), py::arg("graphs") = py::none());

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args, const std::string& stdin_text) {
        std::istringstream in(stdin_text);
        std::ostringstream out, err;
        const int code = run_cli(args, in, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), py::arg("stdin") = "");
}
