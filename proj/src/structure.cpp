#include "remmatch/structure.hpp"

#include <algorithm>
#include <deque>
#include <random>

#include "remmatch/connectivity.hpp"
#include "remmatch/error.hpp"

namespace remmatch {

// ---------------------------------------------------------------- reduction

ReductionResult minimally_k_connected_reduction(const Graph& g, int k,
                                                std::optional<std::uint64_t> seed) {
  if (!k_connected(g, k))
    throw Error(ErrorCode::NotKConnected, "graph is not " + std::to_string(k) + "-connected");
  std::vector<Edge> order = g.edges();
  if (seed) {
    std::mt19937_64 rng(*seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  ReductionResult out;
  out.k = k;
  out.core = g;
  for (const Edge& e : order) {
    Graph candidate = without_edges(out.core, std::span<const Edge>(&e, 1));
    if (k_connected(candidate, k)) {
      out.core = std::move(candidate);
      out.removed.push_back(e);
    }
  }
  std::sort(out.removed.begin(), out.removed.end());
  return out;
}

bool is_minimally_k_connected(const Graph& g, int k) {
  if (!k_connected(g, k)) return false;
  for (const Edge& e : g.edges())
    if (k_connected(without_edges(g, std::span<const Edge>(&e, 1)), k)) return false;
  return true;
}

// --------------------------------------------------------- ear decomposition

EarDecomposition ear_decomposition(const Graph& g) {
  if (g.n() < 3 || !k_connected(g, 2))
    throw Error(ErrorCode::Not2Connected, "ear decomposition needs a 2-connected graph");
  const int n = g.n();
  std::vector<int> parent(n, -1);
  std::vector<int> dfi(n, -1);
  std::vector<int> order;
  // Iterative DFS taking the smallest unvisited neighbor first.
  std::vector<int> stack{0};
  dfi[0] = 0;
  order.push_back(0);
  while (!stack.empty()) {
    const int u = stack.back();
    Mask fresh = 0;
    for (Mask m = g.neighbor_mask(u); m; m &= m - 1)
      if (dfi[lowest(m)] < 0) fresh |= bit(lowest(m));
    if (!fresh) {
      stack.pop_back();
      continue;
    }
    const int v = lowest(fresh);
    parent[v] = u;
    dfi[v] = static_cast<int>(order.size());
    order.push_back(v);
    stack.push_back(v);
  }

  std::vector<std::vector<int>> chains;
  Mask visited = 0;
  for (int v : order) {
    // Back edges v-w with w a proper descendant, in increasing w.
    for (Mask m = g.neighbor_mask(v); m; m &= m - 1) {
      const int w = lowest(m);
      if (dfi[w] <= dfi[v] || parent[w] == v) continue;
      visited |= bit(v);
      std::vector<int> chain{v};
      int x = w;
      while (!(visited & bit(x))) {
        chain.push_back(x);
        visited |= bit(x);
        x = parent[x];
      }
      chain.push_back(x);
      chains.push_back(std::move(chain));
    }
  }
  EarDecomposition out;
  out.initial_cycle = chains.front();
  out.initial_cycle.pop_back();
  out.ears.assign(chains.begin() + 1, chains.end());
  return out;
}

// ------------------------------------------------------------ path routines

namespace {

int path_length(const std::deque<int>& p) { return static_cast<int>(p.size()) - 1; }

// Extends both ends greedily with the smallest free neighbor.
void extend_maximally(const Graph& g, std::deque<int>& path, Mask& on_path) {
  for (bool grew = true; grew;) {
    grew = false;
    if (Mask m = g.neighbor_mask(path.back()) & ~on_path) {
      path.push_back(lowest(m));
      on_path |= bit(lowest(m));
      grew = true;
    }
    if (Mask m = g.neighbor_mask(path.front()) & ~on_path) {
      path.push_front(lowest(m));
      on_path |= bit(lowest(m));
      grew = true;
    }
  }
}

// Cycle through exactly the path's vertices when the ends are adjacent or
// "cross" (x ~ p[i+1] and y ~ p[i]); empty otherwise.
std::vector<int> close_cycle(const Graph& g, const std::deque<int>& path) {
  const int l = path_length(path);
  const int x = path.front();
  const int y = path.back();
  if (l >= 2 && g.adjacent(x, y)) return {path.begin(), path.end()};
  for (int i = 0; i + 1 < l; ++i) {
    if (g.adjacent(x, path[i + 1]) && g.adjacent(y, path[i])) {
      std::vector<int> cycle(path.begin(), path.begin() + i + 1);
      for (int j = l; j > i; --j) cycle.push_back(path[j]);
      return cycle;
    }
  }
  return {};
}

struct ExhaustiveSearch {
  const Graph& g;
  bool want_cycle;
  std::vector<int> best;
  std::vector<int> current;

  void dfs(int u, Mask used) {
    if (current.size() > best.size()) {
      if (!want_cycle) best = current;
    }
    if (want_cycle && static_cast<int>(current.size()) == g.n() &&
        g.adjacent(u, current.front())) {
      best = current;
      return;
    }
    for (Mask m = g.neighbor_mask(u) & ~used; m; m &= m - 1) {
      const int v = lowest(m);
      current.push_back(v);
      dfs(v, used | bit(v));
      current.pop_back();
      if (want_cycle && !best.empty()) return;
      if (!want_cycle && static_cast<int>(best.size()) == g.n()) return;
    }
  }

  std::vector<int> run() {
    for (int s = 0; s < g.n(); ++s) {
      current = {s};
      dfs(s, bit(s));
      if (want_cycle) return best;  // a Hamiltonian cycle passes through 0
      if (static_cast<int>(best.size()) == g.n()) break;
    }
    return best;
  }
};

constexpr int kExhaustivePathLimit = 10;

}  // namespace

std::vector<int> long_path(const Graph& g) {
  if (g.n() == 0 || !is_connected(g))
    throw Error(ErrorCode::Disconnected, "long_path needs a connected graph");
  const int n = g.n();
  const int target = std::min(2 * min_degree(g), n - 1);
  std::deque<int> path{0};
  Mask on_path = bit(0);
  while (true) {
    extend_maximally(g, path, on_path);
    if (path_length(path) >= n - 1) break;
    const std::vector<int> cycle = close_cycle(g, path);
    if (cycle.empty()) break;
    // Open the cycle at a vertex with a neighbor off the cycle; one exists
    // because g is connected and the cycle misses some vertex.
    bool reopened = false;
    for (std::size_t j = 0; j < cycle.size() && !reopened; ++j) {
      const Mask out = g.neighbor_mask(cycle[j]) & ~on_path;
      if (!out) continue;
      std::deque<int> next{lowest(out)};
      for (std::size_t t = 0; t < cycle.size(); ++t) next.push_back(cycle[(j + t) % cycle.size()]);
      on_path |= bit(lowest(out));
      path = std::move(next);
      reopened = true;
    }
    if (!reopened) break;
  }
  if (path_length(path) >= target) return {path.begin(), path.end()};
  if (n <= kExhaustivePathLimit) {
    std::vector<int> best = ExhaustiveSearch{g, false, {}, {}}.run();
    if (static_cast<int>(best.size()) - 1 >= target) return best;
  }
  throw Error(ErrorCode::PreconditionViolated, "rotation stalled below the guaranteed length");
}

std::vector<int> hamiltonian_cycle_dirac(const Graph& g, bool allow_outside_dirac) {
  const int n = g.n();
  if (n < 3) throw Error(ErrorCode::PreconditionViolated, "Hamiltonian cycle needs n >= 3");
  if (!allow_outside_dirac && 2 * min_degree(g) < n)
    throw Error(ErrorCode::PreconditionViolated, "Dirac condition 2*delta >= n fails");
  if (is_connected(g)) {
    const std::vector<int> p = long_path(g);
    if (static_cast<int>(p.size()) == n) {
      const std::deque<int> path(p.begin(), p.end());
      std::vector<int> cycle = close_cycle(g, path);
      if (!cycle.empty()) return cycle;
    }
  }
  if (n <= kExhaustivePathLimit) {
    std::vector<int> cycle = ExhaustiveSearch{g, true, {}, {}}.run();
    if (!cycle.empty()) return cycle;
  }
  throw Error(ErrorCode::PreconditionViolated, "no Hamiltonian cycle found");
}

// --------------------------------------------------------------- exceptions

std::string ExceptionClass::name() const {
  switch (tag) {
    case Tag::Cycle: return "cycle";
    case Tag::CompleteOfOrder: return "complete";
    case Tag::CompleteBipartite: return "complete_bipartite";
    case Tag::Tree: return "tree";
    case Tag::None: break;
  }
  return "none";
}

bool is_complete_graph(const Graph& g) { return g.m() == g.n() * (g.n() - 1) / 2; }

bool is_cycle_graph(const Graph& g) {
  if (g.n() < 3) return false;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) != 2) return false;
  return is_connected(g);
}

bool is_tree(const Graph& g) { return g.n() >= 1 && is_connected(g) && g.m() == g.n() - 1; }

std::optional<std::pair<int, int>> complete_bipartite_parts(const Graph& g) {
  if (g.n() < 2 || !is_connected(g)) return std::nullopt;
  // The side containing vertex 0 is its non-neighborhood (including itself).
  const Mask left = g.vertex_mask() & ~g.neighbor_mask(0);
  const Mask right = g.neighbor_mask(0);
  if (!right) return std::nullopt;
  for (int v = 0; v < g.n(); ++v) {
    const Mask expected = (left & bit(v)) ? right : left;
    if (g.neighbor_mask(v) != expected) return std::nullopt;
  }
  const int a = popcount(left);
  const int b = popcount(right);
  return std::make_pair(std::min(a, b), std::max(a, b));
}

ExceptionClass classify_exception(const Graph& g) {
  using Tag = ExceptionClass::Tag;
  if (g.n() >= 1 && is_complete_graph(g)) return {Tag::CompleteOfOrder, g.n(), 0};
  if (is_cycle_graph(g)) return {Tag::Cycle, g.n(), 0};
  if (auto parts = complete_bipartite_parts(g)) return {Tag::CompleteBipartite, parts->first, parts->second};
  if (is_tree(g)) return {Tag::Tree, g.n(), 0};
  return {};
}

bool belongs_to(const Graph& g, const ExceptionClass& family) {
  using Tag = ExceptionClass::Tag;
  switch (family.tag) {
    case Tag::Cycle: return is_cycle_graph(g) && g.n() == family.a;
    case Tag::CompleteOfOrder: return is_complete_graph(g) && g.n() == family.a;
    case Tag::CompleteBipartite: {
      auto parts = complete_bipartite_parts(g);
      return parts && parts->first == family.a && parts->second == family.b;
    }
    case Tag::Tree: return is_tree(g) && g.n() == family.a;
    case Tag::None: return classify_exception(g).tag == Tag::None;
  }
  return false;
}

// -------------------------------------------------------------- Mader audit

MaderAudit mader_property_audit(const Graph& core, int k) {
  if (k < 1 || !is_minimally_k_connected(core, k))
    throw Error(ErrorCode::NotMinimallyKConnected,
                "audit input is not minimally " + std::to_string(k) + "-connected");
  MaderAudit a;
  a.k = k;
  a.n = core.n();
  a.m = core.m();
  const Mask low = degree_k_vertices(core, k).mask();
  a.degree_k_count = popcount(low);
  a.min_degree_is_k = min_degree(core) == k;
  a.high_degree_part_is_forest = is_forest(induced_mask(core, core.vertex_mask() & ~low).graph);
  a.enough_degree_k_vertices =
      static_cast<long>(a.degree_k_count) * (2 * k - 1) >= static_cast<long>(k - 1) * a.n + 2 * k;
  a.size_bound = a.n < 3 * k - 2 || a.m <= k * (a.n - k);
  a.equality_is_complete_bipartite = true;
  if (a.n >= 3 * k - 1 && a.m == k * (a.n - k)) {
    auto parts = complete_bipartite_parts(core);
    a.equality_is_complete_bipartite = parts && parts->first == k && parts->second == a.n - k;
  }
  const char* failed = nullptr;
  if (!a.min_degree_is_k) failed = "minimum degree differs from k";
  else if (!a.high_degree_part_is_forest) failed = "vertices of degree > k do not induce a forest";
  else if (!a.enough_degree_k_vertices) failed = "too few vertices of degree k";
  else if (!a.size_bound) failed = "edge count exceeds k(n-k)";
  else if (!a.equality_is_complete_bipartite) failed = "extremal edge count without K_{k,n-k}";
  if (failed) throw Error(ErrorCode::AuditFailure, failed);
  return a;
}

}  // namespace remmatch
