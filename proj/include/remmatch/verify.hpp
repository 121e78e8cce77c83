#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "remmatch/graph.hpp"
#include "remmatch/search.hpp"

namespace remmatch {

/// Family filter and finder parameters shared by theorem suites and hunts.
/// `delta`, when set, drops graphs whose minimum degree is below it; for
/// one-delta and two-near-delta it is also the degree parameter of the result.
struct TheoremParams {
  int k = 1;
  std::optional<int> delta;
  int n_min = 1;
  int n_max = 7;
  int jobs = 1;
  /// Shuffles the edge order of the minimally-k-connected reduction.
  std::optional<std::uint64_t> seed;
  SearchBudget budget;
};

struct GraphVerdict {
  enum class Kind { Skipped, Pass, Exception, Counterexample, FinderFailure, Undecided };

  Kind kind = Kind::Skipped;
  int target = 0;
  int found = 0;
  std::string route;
  /// Exception family name when kind == Exception.
  std::string exception;
  std::optional<int> oracle_r;
  bool oracle_exhaustive = false;
  std::vector<Edge> matching;
  std::string note;
};

std::string to_string(GraphVerdict::Kind kind);

struct CounterexampleRecord {
  std::string graph6;
  int target = 0;
  std::optional<int> oracle_r;
  std::string note;
};

struct ExceptionRecord {
  std::string graph6;
  std::string family;
};

/// graphs_checked counts decided graphs only and always equals
/// passes + exceptions_matched + counterexamples.size(). Graphs the budget
/// could not decide and finder misbehavior are listed separately.
struct VerificationReport {
  std::string theorem_id;
  bool conjecture = false;
  int k = 0;
  std::optional<int> delta;
  int n_min = 0;
  int n_max = 0;
  std::uint64_t graphs_considered = 0;
  std::uint64_t graphs_checked = 0;
  std::uint64_t passes = 0;
  std::uint64_t exceptions_matched = 0;
  std::vector<std::string> counterexamples;
  std::vector<CounterexampleRecord> counterexample_details;
  std::vector<ExceptionRecord> exception_instances;
  std::vector<std::string> undecided;
  std::vector<CounterexampleRecord> finder_failures;
  /// Finder matchings re-tested with a separator scan independent of max flow.
  std::uint64_t matchings_rechecked = 0;
  std::uint64_t recheck_failures = 0;
  double wall_time_ms = 0;

  bool arithmetic_holds() const {
    return graphs_checked == passes + exceptions_matched + counterexamples.size();
  }
  bool clean() const {
    return counterexamples.empty() && finder_failures.empty() && recheck_failures == 0;
  }
};

struct SuiteInfo {
  std::string id;
  std::string summary;
};

std::vector<SuiteInfo> registered_theorems();
std::vector<SuiteInfo> registered_conjectures();

/// Applies one theorem (or conjecture) to one graph: hypothesis filter,
/// finder, exception check, oracle revalidation of any failure.
GraphVerdict check_graph(const std::string& suite_id, const Graph& g, const TheoremParams& params);

/// Throws UnknownTheorem for ids outside registered_theorems().
VerificationReport verify_theorem(const std::string& theorem_id, const TheoremParams& params,
                                  const std::vector<Graph>& source);

/// Same mechanics for open statements. Throws UnknownConjecture.
VerificationReport hunt_conjecture(const std::string& conjecture_id, const TheoremParams& params,
                                   const std::vector<Graph>& source);

/// The bounds on f(k, delta) stated for the applicable clauses. `lower` is
/// absent when no clause gives one.
struct PaperBounds {
  std::optional<int> lower;
  int upper = 0;
  std::vector<std::string> clauses;
};

PaperBounds f_paper_bounds(int k, int delta);

struct EmpiricalFTable {
  int k = 0;
  int delta = 0;
  int n_min = 0;
  int n_max = 0;
  std::uint64_t graphs_checked = 0;
  std::optional<int> lower_observed;
  /// graph6 of every minimizer, sorted.
  std::vector<std::string> witnesses;
  PaperBounds paper_bounds;
  /// Graphs whose oracle run hit the budget; their r is only a lower bound.
  std::vector<std::string> undecided;
  double wall_time_ms = 0;

  bool consistent() const;
};

/// Minimum of r_k over graphs with kappa >= k, min degree >= delta and
/// n in [2 delta, n_max]. Throws EmptyFamily when nothing qualifies.
EmpiricalFTable empirical_f(int k, int delta, int n_max, const std::vector<Graph>& source,
                            const SearchBudget& budget = SearchBudget{}, int jobs = 1);

/// k-connectivity by trying every vertex subset of size below k; independent
/// of the flow code and only meant for small n.
bool separator_scan_k_connected(const Graph& g, int k);

}  // namespace remmatch
