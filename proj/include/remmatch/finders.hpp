#pragma once

#include <optional>
#include <string>
#include <vector>

#include "remmatch/graph.hpp"
#include "remmatch/search.hpp"
#include "remmatch/structure.hpp"

namespace remmatch {

/// Result of a matching finder.
///
/// Matching: certified, i.e. G - matching was re-tested k-connected before
/// the outcome was built. Exception: the input belongs to a family the
/// corresponding theorem excludes. NotFound: the exact fallback searched the
/// whole space and no removable matching of the requested size exists; for an
/// input inside a theorem's hypotheses this is either a bug or a
/// counterexample, and callers must report it. BudgetExhausted: the fallback
/// gave up, which says nothing about existence.
struct FinderOutcome {
  enum class Status { Matching, Exception, NotFound, BudgetExhausted };

  Status status = Status::NotFound;
  Matching matching;
  ExceptionClass exception;
  int requested_size = 0;
  /// Which construction produced the result, e.g. "hall-cover" or "exact-search".
  std::string route;
  std::uint64_t search_nodes = 0;

  bool has_matching() const { return status == Status::Matching; }
};

std::string to_string(FinderOutcome::Status status);

/// True when `edges` is a matching of g and g minus it is k-connected.
bool certify_removable(const Graph& g, int k, std::span<const Edge> edges);

/// Lexicographically first edge e with G - e k-connected. Requires g
/// k-connected with delta >= k+1; nullopt means the search failed, which the
/// edge-removal theorem rules out.
std::optional<Edge> find_removable_edge(const Graph& g, int k);

/// Lexicographically first vertex x with G - x k-connected. Requires g
/// k-connected, delta >= floor(3k/2) and n >= k+2.
std::optional<int> find_removable_vertex(const Graph& g, int k);

/// Removes `count` vertices one at a time, re-checking the vertex-removal
/// degree bound before every step. Returns original ids in removal order.
std::optional<std::vector<int>> peel_removable_vertices(const Graph& g, int k, int count);

/// Exact fallback: a removable matching of exactly `size` edges.
FinderOutcome bounded_exact_search(const Graph& g, int k, int size,
                                   const SearchBudget& budget = SearchBudget{});

/// k-removable 2-matching in a k-connected graph with delta >= k+1; cycles are
/// the exception for k = 1.
FinderOutcome find_removable_2matching(const Graph& g, int k,
                                       const SearchBudget& budget = SearchBudget{});

/// k-removable ceil((delta+1)/2)-matching for k in {1,2,3}. Requires
/// delta >= k+1 for k <= 2 and delta >= 5 for k = 3. Exceptions: cycles when
/// k = 1 and delta = 2; K_{delta+1} when delta is even and at least 4.
FinderOutcome find_half_delta_matching(const Graph& g, int k,
                                       const SearchBudget& budget = SearchBudget{});

/// Same target for k >= 4 and delta >= 3k-1; K_{delta+1} with delta even is
/// the exception.
FinderOutcome find_matching_high_k(const Graph& g, int k,
                                   const SearchBudget& budget = SearchBudget{});

/// 1-removable matching of `delta_target` edges in a connected graph with
/// n >= 2*delta_target and min degree >= delta_target >= 3.
FinderOutcome find_one_removable_delta(const Graph& g, int delta_target,
                                       const SearchBudget& budget = SearchBudget{});

/// 1-removable min(floor(n/2), delta)-matching in a connected graph with
/// delta >= 3.
FinderOutcome find_one_removable_minhalf(const Graph& g,
                                         const SearchBudget& budget = SearchBudget{});

/// Neighbor y of x with G - {x, y} connected. Requires g 2-connected and x the
/// unique vertex of degree below m for some m > 2, that is, every other vertex
/// has degree >= 3 and strictly more than d(x).
std::optional<int> noncut_neighbor(const Graph& g, int x);

/// 2-removable (delta-3)-matching, or (delta-2)-matching when delta is even,
/// in a 2-connected graph with n >= 2(delta-2) and min degree >= delta >= 5.
/// `delta` defaults to the graph's minimum degree.
FinderOutcome find_two_removable_near_delta(const Graph& g, std::optional<int> delta = std::nullopt,
                                            const SearchBudget& budget = SearchBudget{});

/// ceil((d+1)/2) for the half-delta family of results.
inline int half_delta_target(int delta) { return (delta + 2) / 2; }

}  // namespace remmatch
