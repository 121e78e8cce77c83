#include "remmatch/finders.hpp"

#include <algorithm>

#include "remmatch/connectivity.hpp"
#include "remmatch/error.hpp"
#include "remmatch/matching.hpp"

namespace remmatch {

std::string to_string(FinderOutcome::Status status) {
  switch (status) {
    case FinderOutcome::Status::Matching: return "matching";
    case FinderOutcome::Status::Exception: return "exception";
    case FinderOutcome::Status::NotFound: return "not_found";
    case FinderOutcome::Status::BudgetExhausted: return "budget_exhausted";
  }
  return "unknown";
}

bool certify_removable(const Graph& g, int k, std::span<const Edge> edges) {
  return is_matching_set(g, edges) && k_connected(without_edges(g, edges), k);
}

namespace {

// Certification attempts allowed per constructive route before giving way
// to the exact search.
constexpr int kRouteAttempts = 256;

void require(bool condition, const std::string& what) {
  if (!condition) throw Error(ErrorCode::PreconditionViolated, what);
}

void require_k_connected(const Graph& g, int k) {
  require(k_connected(g, k), "graph is not " + std::to_string(k) + "-connected");
}

FinderOutcome matched(std::vector<Edge> edges, int size, std::string route) {
  FinderOutcome out;
  out.status = FinderOutcome::Status::Matching;
  out.matching = Matching(std::move(edges));
  out.requested_size = size;
  out.route = std::move(route);
  return out;
}

FinderOutcome excepted(ExceptionClass family, int size) {
  FinderOutcome out;
  out.status = FinderOutcome::Status::Exception;
  out.exception = family;
  out.requested_size = size;
  out.route = "exception";
  return out;
}

Mask ends_of(std::span<const Edge> edges) {
  Mask m = 0;
  for (const auto& e : edges) m |= bit(e.u) | bit(e.v);
  return m;
}

std::vector<Edge> map_edges(const std::vector<Edge>& edges, const std::vector<int>& original) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const auto& e : edges) out.push_back(make_edge(original[e.u], original[e.v]));
  return out;
}

std::optional<std::pair<Edge, Edge>> disjoint_pair(const std::vector<Edge>& edges) {
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (!(ends_of(std::span<const Edge>(&edges[i], 1)) & ends_of(std::span<const Edge>(&edges[j], 1))))
        return std::make_pair(edges[i], edges[j]);
  return std::nullopt;
}

// Peel X by repeated vertex removal so G - X stays k-connected, pick a small
// core of edges (edges of H = G - X whose removal keeps H k-connected, edges
// inside X), then let a bipartite matching between the rest of X and the rest
// of H supply the remaining edges. Every candidate is certified.
std::optional<std::vector<Edge>> peel_and_cover(const Graph& g, int k, int peel, int target,
                                                int& attempts) {
  if (peel < 0 || peel > target) return std::nullopt;
  std::vector<int> peeled;
  if (peel > 0) {
    try {
      auto x = peel_removable_vertices(g, k, peel);
      if (!x) return std::nullopt;
      peeled = *x;
    } catch (const Error&) {
      return std::nullopt;
    }
  }
  const Mask xs = VertexSet(peeled).mask();
  const Mask hs = g.vertex_mask() & ~xs;
  const Relabeled h = induced_mask(g, hs);
  const Mask attached = neighborhood(g, xs);

  std::vector<Edge> h_removable;
  for (const Edge& e : h.graph.edges())
    if (k_connected(without_edges(h.graph, std::span<const Edge>(&e, 1)), k))
      h_removable.push_back(make_edge(h.original[e.u], h.original[e.v]));
  // Edges reaching outside N(X) first: they leave the X-side matching alone.
  std::stable_partition(h_removable.begin(), h_removable.end(), [&](const Edge& e) {
    return xs != 0 && (~attached & (bit(e.u) | bit(e.v)));
  });
  std::vector<Edge> inner;
  for (int x : peeled)
    for (int y : peeled)
      if (x < y && g.adjacent(x, y)) inner.push_back({x, y});

  std::vector<std::vector<Edge>> cores{{}};
  for (const Edge& e : h_removable) cores.push_back({e});
  for (const Edge& xx : inner)
    for (const Edge& e : h_removable) cores.push_back({xx, e});
  for (const Edge& xx : inner) cores.push_back({xx});
  if (target - peel >= 2 && h.graph.n() >= k + 1) {
    const auto reduced = minimally_k_connected_reduction(h.graph, k);
    const std::vector<Edge> f = map_edges(reduced.removed, h.original);
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = i + 1; j < f.size(); ++j)
        if (!(ends_of(std::span<const Edge>(&f[i], 1)) & ends_of(std::span<const Edge>(&f[j], 1))))
          cores.push_back({f[i], f[j]});
  }

  for (const auto& core : cores) {
    if (attempts <= 0) return std::nullopt;
    if (static_cast<int>(core.size()) > target) continue;
    const Mask used = ends_of(core);
    const std::vector<Edge> cover = bipartite_matching(g, xs & ~used, hs & ~used);
    const std::size_t need = static_cast<std::size_t>(target) - core.size();
    if (cover.size() < need) continue;
    std::vector<Edge> candidate = core;
    candidate.insert(candidate.end(), cover.begin(), cover.begin() + static_cast<long>(need));
    --attempts;
    if (certify_removable(g, k, candidate)) return candidate;
  }
  return std::nullopt;
}

FinderOutcome with_fallback(const Graph& g, int k, int size, const SearchBudget& budget) {
  FinderOutcome out = bounded_exact_search(g, k, size, budget);
  return out;
}

}  // namespace

// -------------------------------------------------------- single removals

std::optional<Edge> find_removable_edge(const Graph& g, int k) {
  require(k >= 1, "k must be >= 1");
  require_k_connected(g, k);
  require(min_degree(g) >= k + 1, "minimum degree must be at least k+1");
  for (const Edge& e : g.edges())
    if (k_connected(without_edges(g, std::span<const Edge>(&e, 1)), k)) return e;
  return std::nullopt;
}

std::optional<int> find_removable_vertex(const Graph& g, int k) {
  require(k >= 1, "k must be >= 1");
  require_k_connected(g, k);
  require(min_degree(g) >= (3 * k) / 2, "minimum degree must be at least floor(3k/2)");
  require(g.n() >= k + 2, "need n >= k+2 for G - x to be k-connected");
  for (int v = 0; v < g.n(); ++v)
    if (k_connected(induced_mask(g, g.vertex_mask() & ~bit(v)).graph, k)) return v;
  return std::nullopt;
}

std::optional<std::vector<int>> peel_removable_vertices(const Graph& g, int k, int count) {
  require(count >= 0, "peel count must be non-negative");
  std::vector<int> out;
  Relabeled current{g, {}};
  for (int v = 0; v < g.n(); ++v) current.original.push_back(v);
  for (int step = 0; step < count; ++step) {
    const auto v = find_removable_vertex(current.graph, k);
    if (!v) return std::nullopt;
    out.push_back(current.original[*v]);
    Relabeled next = induced_mask(current.graph, current.graph.vertex_mask() & ~bit(*v));
    for (int& id : next.original) id = current.original[id];
    current = std::move(next);
  }
  return out;
}

// ------------------------------------------------------------- exact search

FinderOutcome bounded_exact_search(const Graph& g, int k, int size, const SearchBudget& budget) {
  if (!k_connected(g, k))
    throw Error(ErrorCode::NotKConnected, "graph is not " + std::to_string(k) + "-connected");
  RemovableMatchingSearch search(g, k, budget);
  std::vector<Edge> found;
  const auto status = search.find(size, found);
  FinderOutcome out;
  out.requested_size = size;
  out.route = "exact-search";
  out.search_nodes = search.nodes();
  switch (status) {
    case RemovableMatchingSearch::Status::Found:
      out.status = FinderOutcome::Status::Matching;
      out.matching = Matching(found);
      break;
    case RemovableMatchingSearch::Status::NoneExists:
      out.status = FinderOutcome::Status::NotFound;
      break;
    case RemovableMatchingSearch::Status::BudgetExhausted:
      out.status = FinderOutcome::Status::BudgetExhausted;
      break;
  }
  return out;
}

// -------------------------------------------------------------- 2-matchings

FinderOutcome find_removable_2matching(const Graph& g, int k, const SearchBudget& budget) {
  require(k >= 1, "k must be >= 1");
  require_k_connected(g, k);
  require(min_degree(g) >= k + 1, "minimum degree must be at least k+1");
  if (k == 1 && is_cycle_graph(g)) return excepted({ExceptionClass::Tag::Cycle, g.n(), 0}, 2);

  // Any two disjoint edges of a maximal removable set form a removable
  // 2-matching, since G - F is a spanning k-connected subgraph of the result.
  const auto reduced = minimally_k_connected_reduction(g, k);
  if (auto pair = disjoint_pair(reduced.removed)) {
    std::vector<Edge> edges{pair->first, pair->second};
    if (certify_removable(g, k, edges)) return matched(std::move(edges), 2, "reduction-pair");
  }
  int attempts = kRouteAttempts;
  if (auto m = peel_and_cover(g, k, 1, 2, attempts)) return matched(*m, 2, "peel-cover");
  return with_fallback(g, k, 2, budget);
}

// ----------------------------------------------------------- half-delta

FinderOutcome find_half_delta_matching(const Graph& g, int k, const SearchBudget& budget) {
  require(k >= 1 && k <= 3, "half-delta finder covers k in {1,2,3}");
  require_k_connected(g, k);
  const int delta = min_degree(g);
  if (k <= 2) require(delta >= k + 1, "minimum degree must be at least k+1");
  else require(delta >= 5, "k = 3 needs minimum degree at least 5");
  const int target = half_delta_target(delta);
  if (k == 1 && delta == 2 && is_cycle_graph(g))
    return excepted({ExceptionClass::Tag::Cycle, g.n(), 0}, target);
  if (delta % 2 == 0 && delta >= 4 && is_complete_graph(g) && g.n() == delta + 1)
    return excepted({ExceptionClass::Tag::CompleteOfOrder, g.n(), 0}, target);

  if (target == 2) {
    FinderOutcome two = find_removable_2matching(g, k, budget);
    two.requested_size = target;
    return two;
  }
  int attempts = kRouteAttempts;
  for (int peel = target; peel >= target - 2; --peel)
    if (auto m = peel_and_cover(g, k, peel, target, attempts)) return matched(*m, target, "peel-cover");
  return with_fallback(g, k, target, budget);
}

FinderOutcome find_matching_high_k(const Graph& g, int k, const SearchBudget& budget) {
  require(k >= 4, "high-k finder needs k >= 4");
  require_k_connected(g, k);
  const int delta = min_degree(g);
  require(delta >= 3 * k - 1, "minimum degree must be at least 3k-1");
  const int target = half_delta_target(delta);
  if (delta % 2 == 0 && is_complete_graph(g) && g.n() == delta + 1)
    return excepted({ExceptionClass::Tag::CompleteOfOrder, g.n(), 0}, target);
  int attempts = kRouteAttempts;
  for (int peel = target; peel >= target - 2; --peel)
    if (auto m = peel_and_cover(g, k, peel, target, attempts)) return matched(*m, target, "peel-cover");
  return with_fallback(g, k, target, budget);
}

// ------------------------------------------------------------ k = 1 routes

namespace {

// Alternate edges p0p1, p2p3, ... of a vertex sequence.
std::vector<Edge> alternate_edges(const std::vector<int>& seq, int count) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < seq.size() && static_cast<int>(out.size()) < count; i += 2)
    out.push_back(make_edge(seq[i], seq[i + 1]));
  return out;
}

// Splits along a path-derived matching and repairs inside the two sides.
std::optional<std::vector<Edge>> one_delta_repair(const Graph& g, int target,
                                                  const std::vector<Edge>& m,
                                                  const SearchBudget& budget) {
  std::vector<Edge> kept;
  std::optional<Edge> breaker;
  for (const Edge& e : m) {
    kept.push_back(e);
    if (!is_connected(without_edges(g, kept))) {
      kept.pop_back();
      if (!breaker) breaker = e;
    }
  }
  if (!breaker) return std::nullopt;
  std::vector<Edge> split = kept;
  split.push_back(*breaker);
  const Graph cut = without_edges(g, split);
  const auto parts = components(cut);
  if (parts.size() != 2) return std::nullopt;

  // Two-component repair: half-delta matchings inside each side.
  const int first_share = (target + 1) / 2;
  std::vector<Edge> combined;
  for (int side = 0; side < 2; ++side) {
    const int share = side == 0 ? first_share : target - first_share;
    const Relabeled part = induced_mask(cut, parts[side]);
    if (share == 0) continue;
    if (part.graph.n() < 3 || min_degree(part.graph) < 2 || !is_connected(part.graph)) {
      combined.clear();
      break;
    }
    FinderOutcome inner;
    try {
      inner = find_half_delta_matching(part.graph, 1, budget);
    } catch (const Error&) {
      combined.clear();
      break;
    }
    if (!inner.has_matching() || static_cast<int>(inner.matching.size()) < share) {
      combined.clear();
      break;
    }
    std::vector<Edge> mapped = map_edges(inner.matching.edges(), part.original);
    combined.insert(combined.end(), mapped.begin(), mapped.begin() + share);
  }
  if (static_cast<int>(combined.size()) == target && certify_removable(g, 1, combined)) return combined;

  // Complete-graph swap: replace x1y1, x2y2 by x1x2, y1y2.
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      const Edge a = m[i];
      const Edge b = m[j];
      for (int flip = 0; flip < 2; ++flip) {
        const int x1 = a.u, y1 = a.v;
        const int x2 = flip ? b.v : b.u, y2 = flip ? b.u : b.v;
        if (!g.adjacent(x1, x2) || !g.adjacent(y1, y2)) continue;
        std::vector<Edge> swapped;
        for (std::size_t t = 0; t < m.size(); ++t)
          if (t != i && t != j) swapped.push_back(m[t]);
        swapped.push_back(make_edge(x1, x2));
        swapped.push_back(make_edge(y1, y2));
        if (static_cast<int>(swapped.size()) == target && certify_removable(g, 1, swapped))
          return swapped;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

FinderOutcome find_one_removable_delta(const Graph& g, int delta_target, const SearchBudget& budget) {
  require(delta_target >= 3, "delta target must be at least 3");
  require(g.n() >= 2 * delta_target, "need n >= 2*delta");
  require(is_connected(g), "graph must be connected");
  require(min_degree(g) >= delta_target, "minimum degree below the target");

  const std::vector<Edge> m = alternate_edges(long_path(g), delta_target);
  if (static_cast<int>(m.size()) == delta_target) {
    if (certify_removable(g, 1, m)) return matched(m, delta_target, "long-path");
    if (auto repaired = one_delta_repair(g, delta_target, m, budget))
      return matched(*repaired, delta_target, "path-repair");
  }
  return with_fallback(g, 1, delta_target, budget);
}

FinderOutcome find_one_removable_minhalf(const Graph& g, const SearchBudget& budget) {
  require(is_connected(g), "graph must be connected");
  const int delta = min_degree(g);
  require(delta >= 3, "minimum degree must be at least 3");
  const int target = std::min(g.n() / 2, delta);
  if (g.n() >= 2 * delta) {
    FinderOutcome out = find_one_removable_delta(g, delta, budget);
    out.requested_size = target;
    return out;
  }
  const std::vector<Edge> m = alternate_edges(hamiltonian_cycle_dirac(g), target);
  if (static_cast<int>(m.size()) == target && certify_removable(g, 1, m))
    return matched(m, target, "hamiltonian-cycle");
  return with_fallback(g, 1, target, budget);
}

// ------------------------------------------------------------ k = 2 routes

std::optional<int> noncut_neighbor(const Graph& g, int x) {
  require(x >= 0 && x < g.n(), "vertex out of range");
  require(k_connected(g, 2), "graph must be 2-connected");
  int others = kInfiniteDegree;
  for (int v = 0; v < g.n(); ++v)
    if (v != x) others = std::min(others, g.degree(v));
  require(others >= 3, "every vertex other than x needs degree >= m > 2");
  require(g.degree(x) < others, "x must be the unique vertex of degree below m");
  for (int y : g.neighbors(x))
    if (is_connected_within(g, g.vertex_mask() & ~bit(x) & ~bit(y))) return y;
  return std::nullopt;
}

namespace {

// 2-removable matching of G'_i avoiding its contracted vertex, mapped back to
// ids of G. Follows the two cases on the degree of the contracted vertex.
std::optional<std::vector<Edge>> side_matching(const Contracted& side, int delta,
                                               const SearchBudget& budget) {
  const Graph& h = side.graph;
  const int hub = side.new_vertex;
  if (!k_connected(h, 2)) return std::nullopt;
  Graph work = h;
  std::vector<int> to_h(h.n());
  for (int v = 0; v < h.n(); ++v) to_h[v] = v;
  int avoid = hub;
  if (h.degree(hub) < delta - 1) {
    std::optional<int> y;
    try {
      y = noncut_neighbor(h, hub);
    } catch (const Error&) {
      return std::nullopt;
    }
    if (!y) return std::nullopt;
    const Contracted merged = contract_subset(h, VertexSet{hub, *y});
    work = merged.graph;
    to_h = merged.original;
    avoid = merged.new_vertex;
  }
  if (!k_connected(work, 2) || min_degree(work) < 3) return std::nullopt;
  FinderOutcome inner;
  try {
    inner = find_half_delta_matching(work, 2, budget);
  } catch (const Error&) {
    return std::nullopt;
  }
  if (!inner.has_matching()) return std::nullopt;
  std::vector<Edge> out;
  for (const Edge& e : inner.matching.edges()) {
    if (e.u == avoid || e.v == avoid) continue;
    const int a = to_h[e.u];
    const int b = to_h[e.v];
    if (a < 0 || b < 0 || a == hub || b == hub) continue;
    out.push_back(make_edge(side.original[a], side.original[b]));
  }
  return out;
}

std::optional<std::vector<Edge>> near_delta_contraction(const Graph& g, int delta, int target,
                                                        const SearchBudget& budget) {
  const std::vector<Edge> m = alternate_edges(long_path(g), delta - 2);
  if (static_cast<int>(m.size()) < target) return std::nullopt;
  const std::vector<Edge> prefix(m.begin(), m.begin() + target);
  if (certify_removable(g, 2, prefix)) return prefix;
  if (k_connected(without_edges(g, m), 2)) return std::nullopt;
  // Shrink to a minimal non-2-removable sub-matching.
  std::vector<Edge> minimal = m;
  for (std::size_t i = 0; i < minimal.size();) {
    std::vector<Edge> fewer = minimal;
    fewer.erase(fewer.begin() + static_cast<long>(i));
    if (!k_connected(without_edges(g, fewer), 2)) minimal = std::move(fewer);
    else ++i;
  }
  const Graph reduced = without_edges(g, minimal);
  for (int x = 0; x < g.n(); ++x) {
    const auto parts = components(reduced, reduced.vertex_mask() & ~bit(x));
    if (parts.size() != 2) continue;
    std::vector<Edge> combined;
    bool ok = true;
    for (int i = 0; i < 2 && ok; ++i) {
      const Mask squash = parts[1 - i] | bit(x);
      const Contracted side = contract_subset(g, VertexSet::from_mask(squash));
      auto half = side_matching(side, delta, budget);
      if (!half) ok = false;
      else combined.insert(combined.end(), half->begin(), half->end());
    }
    if (!ok || static_cast<int>(combined.size()) < target) continue;
    combined.resize(static_cast<std::size_t>(target));
    if (certify_removable(g, 2, combined)) return combined;
  }
  return std::nullopt;
}

}  // namespace

FinderOutcome find_two_removable_near_delta(const Graph& g, std::optional<int> delta,
                                            const SearchBudget& budget) {
  require_k_connected(g, 2);
  const int d = delta.value_or(min_degree(g));
  require(d >= 5, "delta must be at least 5");
  require(min_degree(g) >= d, "minimum degree below delta");
  require(g.n() >= 2 * (d - 2), "need n >= 2(delta-2)");
  const int target = d % 2 == 0 ? d - 2 : d - 3;
  if (auto m = near_delta_contraction(g, d, target, budget)) return matched(*m, target, "contraction");
  int attempts = kRouteAttempts;
  for (int peel = target; peel >= target - 2; --peel)
    if (auto m = peel_and_cover(g, 2, peel, target, attempts)) return matched(*m, target, "peel-cover");
  return with_fallback(g, 2, target, budget);
}

}  // namespace remmatch
