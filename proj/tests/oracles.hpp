// Reference implementations used only by the tests. Each one is written from
// the definitions, with no code shared with the library beyond the Graph type.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "remmatch/graph.hpp"

namespace oracle {

using remmatch::Edge;
using remmatch::Graph;

// Depth-first reachability over vertices not in `removed`.
inline bool connected_without(const Graph& g, std::uint64_t removed) {
  const int n = g.n();
  int start = -1, alive = 0;
  for (int v = 0; v < n; ++v)
    if (!((removed >> v) & 1)) {
      ++alive;
      if (start < 0) start = v;
    }
  if (alive <= 1) return true;
  std::vector<int> stack{start};
  std::vector<bool> seen(n, false);
  seen[start] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < n; ++w)
      if (!seen[w] && !((removed >> w) & 1) && g.adjacent(v, w)) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == alive;
}

// Smallest separating set by trying subsets in increasing size; n-1 when none.
inline int connectivity(const Graph& g) {
  const int n = g.n();
  if (n <= 1) return 0;
  if (!connected_without(g, 0)) return 0;
  int best = n - 1;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    const int size = __builtin_popcountll(s);
    if (size >= best || n - size < 2) continue;
    if (!connected_without(g, s)) best = size;
  }
  return best;
}

inline bool k_connected(const Graph& g, int k) { return g.n() >= k + 1 && connectivity(g) >= k; }

inline Graph remove_edges(const Graph& g, const std::vector<Edge>& edges) {
  std::vector<Edge> keep;
  for (const Edge& e : g.edges())
    if (std::find(edges.begin(), edges.end(), e) == edges.end()) keep.push_back(e);
  return Graph(g.n(), keep);
}

// Every matching of g, including the empty one.
inline void all_matchings(const std::vector<Edge>& edges, std::size_t from, std::uint64_t used,
                          std::vector<Edge>& current, std::vector<std::vector<Edge>>& out) {
  out.push_back(current);
  for (std::size_t i = from; i < edges.size(); ++i) {
    const std::uint64_t ends = (std::uint64_t{1} << edges[i].u) | (std::uint64_t{1} << edges[i].v);
    if (used & ends) continue;
    current.push_back(edges[i]);
    all_matchings(edges, i + 1, used | ends, current, out);
    current.pop_back();
  }
}

inline std::vector<std::vector<Edge>> all_matchings(const Graph& g) {
  std::vector<std::vector<Edge>> out;
  std::vector<Edge> current;
  all_matchings(g.edges(), 0, 0, current, out);
  return out;
}

inline int max_matching(const Graph& g) {
  std::size_t best = 0;
  for (const auto& m : all_matchings(g)) best = std::max(best, m.size());
  return static_cast<int>(best);
}

// r_k(G) by testing every matching.
inline int max_removable_matching(const Graph& g, int k) {
  std::size_t best = 0;
  for (const auto& m : all_matchings(g))
    if (m.size() > best && k_connected(remove_edges(g, m), k)) best = m.size();
  return static_cast<int>(best);
}

// Full-permutation canonical form: the minimum upper-triangle code.
inline std::uint64_t permutation_code(const Graph& g) {
  const int n = g.n();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(p[i], p[j]) ? 1 : 0);
    best = std::min(best, code);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

// Isomorphism classes of connected graphs on n vertices by brute force.
inline std::size_t connected_classes(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) slots.emplace_back(i, j);
  std::set<std::uint64_t> seen;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << slots.size()); ++bits) {
    std::vector<Edge> edges;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((bits >> s) & 1) edges.push_back({slots[s].first, slots[s].second});
    Graph g(n, edges);
    if (!connected_without(g, 0)) continue;
    seen.insert(permutation_code(g));
  }
  return seen.size();
}

inline bool is_simple_path(const Graph& g, const std::vector<int>& p) {
  std::set<int> distinct(p.begin(), p.end());
  if (distinct.size() != p.size()) return false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (!g.adjacent(p[i], p[i + 1])) return false;
  return true;
}

inline bool is_hamiltonian_cycle(const Graph& g, const std::vector<int>& c) {
  return static_cast<int>(c.size()) == g.n() && is_simple_path(g, c) && g.n() >= 3 &&
         g.adjacent(c.front(), c.back());
}

// Longest path length (edges) by exhaustive DFS.
inline int longest_path(const Graph& g) {
  int best = 0;
  std::vector<bool> used(g.n(), false);
  auto dfs = [&](auto&& self, int v, int len) -> void {
    best = std::max(best, len);
    for (int w = 0; w < g.n(); ++w)
      if (!used[w] && g.adjacent(v, w)) {
        used[w] = true;
        self(self, w, len + 1);
        used[w] = false;
      }
  };
  for (int s = 0; s < g.n(); ++s) {
    used[s] = true;
    dfs(dfs, s, 0);
    used[s] = false;
  }
  return best;
}

}  // namespace oracle
