#include "remmatch/oracle.hpp"

#include "remmatch/connectivity.hpp"
#include "remmatch/error.hpp"

namespace remmatch {

OracleResult max_removable_matching(const Graph& g, int k, const SearchBudget& budget, int max_order) {
  if (g.n() > max_order)
    throw Error(ErrorCode::TooLarge, "oracle guard is n <= " + std::to_string(max_order));
  if (!k_connected(g, k))
    throw Error(ErrorCode::NotKConnected, "graph is not " + std::to_string(k) + "-connected");
  RemovableMatchingSearch search(g, k, budget);
  std::vector<Edge> best;
  const auto status = search.maximize(best);
  OracleResult out;
  out.r = static_cast<int>(best.size());
  out.witness = Matching(best);
  out.exhaustive = status != RemovableMatchingSearch::Status::BudgetExhausted;
  out.nodes = search.nodes();
  return out;
}

}  // namespace remmatch
