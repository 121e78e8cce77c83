#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "remmatch/graph.hpp"

namespace remmatch {

/// core = input minus `removed`; core is minimally k-connected.
struct ReductionResult {
  Graph core;
  std::vector<Edge> removed;
  int k = 0;
};

/// Greedy edge deletion in lexicographic order (or a seeded shuffle), keeping
/// k-connectivity. A single pass suffices: if G - e is not k-connected, no
/// later deletion can make e removable again.
ReductionResult minimally_k_connected_reduction(const Graph& g, int k,
                                                std::optional<std::uint64_t> seed = std::nullopt);

bool is_minimally_k_connected(const Graph& g, int k);

/// Open ear decomposition. The first ear is a cycle (listed without repeating
/// its start vertex); every later ear is a path whose two ends already appear
/// earlier and whose inner vertices are new.
struct EarDecomposition {
  std::vector<int> initial_cycle;
  std::vector<std::vector<int>> ears;
};

/// Chain decomposition over a lexicographic DFS from vertex 0.
EarDecomposition ear_decomposition(const Graph& g);

/// A simple path (vertex sequence) of length >= min(2*delta, n-1).
std::vector<int> long_path(const Graph& g);

/// Hamiltonian cycle (closing edge implied) for graphs with 2*delta >= n >= 3.
/// With `allow_outside_dirac` the condition is not enforced; the routine then
/// still tries rotation and, for n <= 10, exhaustive search.
std::vector<int> hamiltonian_cycle_dirac(const Graph& g, bool allow_outside_dirac = false);

struct ExceptionClass {
  enum class Tag { None, Cycle, CompleteOfOrder, CompleteBipartite, Tree };

  Tag tag = Tag::None;
  /// Order for Cycle and CompleteOfOrder, smaller part for CompleteBipartite.
  int a = 0;
  /// Larger part for CompleteBipartite.
  int b = 0;

  /// "cycle", "complete", "complete_bipartite", "tree" or "none".
  std::string name() const;
  friend bool operator==(const ExceptionClass&, const ExceptionClass&) = default;
};

bool is_cycle_graph(const Graph& g);
bool is_complete_graph(const Graph& g);
bool is_tree(const Graph& g);
/// (a, b) with a <= b when g is K_{a,b} with a >= 1.
std::optional<std::pair<int, int>> complete_bipartite_parts(const Graph& g);

/// Family detection, checked in the order complete, cycle, complete
/// bipartite, tree. K_3 is therefore reported as complete and C_4 as a cycle;
/// use belongs_to() when a specific family must be tested.
ExceptionClass classify_exception(const Graph& g);
bool belongs_to(const Graph& g, const ExceptionClass& family);

/// Structural facts every minimally k-connected graph must satisfy.
struct MaderAudit {
  int k = 0;
  int n = 0;
  int m = 0;
  int degree_k_count = 0;
  bool min_degree_is_k = false;
  bool high_degree_part_is_forest = false;
  bool enough_degree_k_vertices = false;
  /// Vacuously true when n < 3k-2.
  bool size_bound = false;
  /// Vacuously true unless n >= 3k-1 and m = k(n-k).
  bool equality_is_complete_bipartite = false;

  bool passed() const {
    return min_degree_is_k && high_degree_part_is_forest && enough_degree_k_vertices &&
           size_bound && equality_is_complete_bipartite;
  }
};

/// Throws NotMinimallyKConnected on bad input and AuditFailure naming the first
/// failed clause.
MaderAudit mader_property_audit(const Graph& core, int k);

}  // namespace remmatch
