#pragma once

#include <optional>
#include <vector>

#include "remmatch/graph.hpp"

namespace remmatch {

/// Exactly one of the two members is set.
struct HallOutcome {
  std::optional<Matching> covering_matching;
  /// S inside the designated part with |N(S)| < |S|.
  std::optional<VertexSet> deficiency_set;

  bool covers() const { return covering_matching.has_value(); }
};

/// Matching saturating `x` in a bipartite graph whose one side is `x`, or a
/// Hall violator. The violator is the set of x-vertices reachable by
/// alternating paths from the unsaturated ones.
HallOutcome matching_covering(const Graph& gbip, const VertexSet& x);

/// Maximum matching using only edges between `left` and `right` (which must be
/// disjoint). Augmentation visits vertices in increasing id order, so the
/// result is deterministic.
std::vector<Edge> bipartite_matching(const Graph& g, Mask left, Mask right);

/// alpha'(G). Bipartite graphs use augmenting paths; other graphs are solved
/// by memoized exhaustive search and must have n <= 20.
int max_matching_size(const Graph& g);

}  // namespace remmatch
