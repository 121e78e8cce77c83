#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "remmatch/graph.hpp"

namespace remmatch {

struct SearchBudget {
  std::uint64_t node_limit = 20'000'000;
  std::chrono::milliseconds time_limit{60'000};

  /// Defaults overridden by REMMATCH_NODE_LIMIT / REMMATCH_TIME_LIMIT_MS.
  static SearchBudget from_env();
};

/// Branch and bound over matchings made of individually k-removable edges,
/// enumerated in lexicographic edge order. A branch dies as soon as the graph
/// minus the chosen edges is no longer k-connected (removal is monotone), or
/// when the still-available vertices cannot complete the target.
class RemovableMatchingSearch {
 public:
  enum class Status { Found, NoneExists, BudgetExhausted };

  RemovableMatchingSearch(const Graph& g, int k, SearchBudget budget);

  /// First matching of exactly `size` edges in DFS order.
  Status find(int size, std::vector<Edge>& out);
  /// Largest removable matching; `best` holds the witness found so far even
  /// when the budget runs out.
  Status maximize(std::vector<Edge>& best);

  std::uint64_t nodes() const { return nodes_; }
  const std::vector<Edge>& removable_edges() const { return candidates_; }

 private:
  bool dfs_find(std::size_t start, Mask used, const Graph& current, int size);
  void dfs_max(std::size_t start, Mask used, const Graph& current);
  int bound(std::size_t start, Mask used) const;
  bool out_of_budget();

  const Graph& g_;
  int k_;
  SearchBudget budget_;
  std::chrono::steady_clock::time_point deadline_;
  std::vector<Edge> candidates_;
  std::vector<Edge> chosen_;
  std::vector<Edge> best_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace remmatch
