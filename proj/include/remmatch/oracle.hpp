#pragma once

#include <cstdint>

#include "remmatch/graph.hpp"
#include "remmatch/search.hpp"

namespace remmatch {

/// r_k(G): the size of a largest k-removable matching (0 when no single edge
/// is removable). `witness` realizes r. When `exhaustive` is false the budget
/// ran out and r is only a lower bound.
struct OracleResult {
  int r = 0;
  Matching witness;
  bool exhaustive = true;
  std::uint64_t nodes = 0;
};

inline constexpr int kOracleDefaultMaxOrder = 14;

/// Requires g k-connected and n <= max_order.
OracleResult max_removable_matching(const Graph& g, int k, const SearchBudget& budget = SearchBudget{},
                                    int max_order = kOracleDefaultMaxOrder);

}  // namespace remmatch
