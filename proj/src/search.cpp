#include "remmatch/search.hpp"

#include <cstdlib>
#include <string>

#include "remmatch/connectivity.hpp"

namespace remmatch {

SearchBudget SearchBudget::from_env() {
  SearchBudget b;
  if (const char* nodes = std::getenv("REMMATCH_NODE_LIMIT")) b.node_limit = std::stoull(nodes);
  if (const char* ms = std::getenv("REMMATCH_TIME_LIMIT_MS"))
    b.time_limit = std::chrono::milliseconds(std::stoll(ms));
  return b;
}

RemovableMatchingSearch::RemovableMatchingSearch(const Graph& g, int k, SearchBudget budget)
    : g_(g), k_(k), budget_(budget), deadline_(std::chrono::steady_clock::now() + budget.time_limit) {
  for (const Edge& e : g.edges())
    if (k_connected(without_edges(g, std::span<const Edge>(&e, 1)), k)) candidates_.push_back(e);
}

bool RemovableMatchingSearch::out_of_budget() {
  if (exhausted_) return true;
  ++nodes_;
  if (nodes_ > budget_.node_limit) exhausted_ = true;
  else if ((nodes_ & 255) == 0 && std::chrono::steady_clock::now() > deadline_) exhausted_ = true;
  return exhausted_;
}

int RemovableMatchingSearch::bound(std::size_t start, Mask used) const {
  Mask avail = 0;
  for (std::size_t i = start; i < candidates_.size(); ++i) {
    const Mask ends = bit(candidates_[i].u) | bit(candidates_[i].v);
    if (!(ends & used)) avail |= ends;
  }
  return popcount(avail) / 2;
}

bool RemovableMatchingSearch::dfs_find(std::size_t start, Mask used, const Graph& current, int size) {
  if (static_cast<int>(chosen_.size()) == size) return true;
  if (out_of_budget()) return false;
  if (static_cast<int>(chosen_.size()) + bound(start, used) < size) return false;
  for (std::size_t i = start; i < candidates_.size(); ++i) {
    const Edge& e = candidates_[i];
    if (used & (bit(e.u) | bit(e.v))) continue;
    Graph next = without_edges(current, std::span<const Edge>(&e, 1));
    if (!k_connected(next, k_)) continue;
    chosen_.push_back(e);
    if (dfs_find(i + 1, used | bit(e.u) | bit(e.v), next, size)) return true;
    chosen_.pop_back();
    if (exhausted_) return false;
  }
  return false;
}

RemovableMatchingSearch::Status RemovableMatchingSearch::find(int size, std::vector<Edge>& out) {
  chosen_.clear();
  if (size <= 0) {
    out.clear();
    return Status::Found;
  }
  if (dfs_find(0, 0, g_, size)) {
    out = chosen_;
    return Status::Found;
  }
  return exhausted_ ? Status::BudgetExhausted : Status::NoneExists;
}

void RemovableMatchingSearch::dfs_max(std::size_t start, Mask used, const Graph& current) {
  if (chosen_.size() > best_.size()) best_ = chosen_;
  if (out_of_budget()) return;
  if (chosen_.size() + bound(start, used) <= best_.size()) return;
  for (std::size_t i = start; i < candidates_.size(); ++i) {
    const Edge& e = candidates_[i];
    if (used & (bit(e.u) | bit(e.v))) continue;
    Graph next = without_edges(current, std::span<const Edge>(&e, 1));
    if (!k_connected(next, k_)) continue;
    chosen_.push_back(e);
    dfs_max(i + 1, used | bit(e.u) | bit(e.v), next);
    chosen_.pop_back();
    if (exhausted_) return;
    if (chosen_.size() + bound(i + 1, used) <= best_.size()) return;
  }
}

RemovableMatchingSearch::Status RemovableMatchingSearch::maximize(std::vector<Edge>& best) {
  chosen_.clear();
  best_.clear();
  dfs_max(0, 0, g_);
  best = best_;
  return exhausted_ ? Status::BudgetExhausted : Status::Found;
}

}  // namespace remmatch
