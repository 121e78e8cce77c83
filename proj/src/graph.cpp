#include "remmatch/graph.hpp"

#include <algorithm>

#include "remmatch/error.hpp"

namespace remmatch {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedGraph6: return "MalformedGraph6";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::EdgeAbsent: return "EdgeAbsent";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::SetsOverlap: return "SetsOverlap";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::SubsetIsWholeGraph: return "SubsetIsWholeGraph";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::SameVertex: return "SameVertex";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotBipartiteWithPart: return "NotBipartiteWithPart";
    case ErrorCode::NotKConnected: return "NotKConnected";
    case ErrorCode::Not2Connected: return "Not2Connected";
    case ErrorCode::NotMinimallyKConnected: return "NotMinimallyKConnected";
    case ErrorCode::AuditFailure: return "AuditFailure";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::UnknownTheorem: return "UnknownTheorem";
    case ErrorCode::UnknownConjecture: return "UnknownConjecture";
    case ErrorCode::EmptyFamily: return "EmptyFamily";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Edge make_edge(int a, int b) {
  if (a < 0 || b < 0) throw Error(ErrorCode::VertexOutOfRange, "negative vertex id");
  if (a == b) throw Error(ErrorCode::InvalidArgument, "self-loop at " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(std::initializer_list<int> ids) : VertexSet(std::vector<int>(ids)) {}

VertexSet::VertexSet(std::vector<int> ids) : members_(std::move(ids)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.front() < 0)
    throw Error(ErrorCode::VertexOutOfRange, "negative vertex id");
}

VertexSet VertexSet::from_mask(Mask m) {
  VertexSet s;
  for (; m; m &= m - 1) s.members_.push_back(lowest(m));
  return s;
}

bool VertexSet::contains(int v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

Mask VertexSet::mask() const {
  Mask m = 0;
  for (int v : members_) {
    if (v >= kMaxVertices) throw Error(ErrorCode::VertexOutOfRange, std::to_string(v));
    m |= bit(v);
  }
  return m;
}

// ----------------------------------------------------------------- Matching

Matching::Matching(std::initializer_list<Edge> edges) : Matching(std::vector<Edge>(edges)) {}

Matching::Matching(std::vector<Edge> edges) {
  for (auto& e : edges) e = make_edge(e.u, e.v);
  std::sort(edges.begin(), edges.end());
  std::vector<int> ends;
  for (const auto& e : edges) {
    ends.push_back(e.u);
    ends.push_back(e.v);
  }
  std::sort(ends.begin(), ends.end());
  if (std::adjacent_find(ends.begin(), ends.end()) != ends.end())
    throw Error(ErrorCode::InvalidArgument, "matching edges are not vertex-disjoint");
  edges_ = std::move(edges);
}

VertexSet Matching::vertices() const {
  std::vector<int> ids;
  for (const auto& e : edges_) {
    ids.push_back(e.u);
    ids.push_back(e.v);
  }
  return VertexSet(std::move(ids));
}

Mask Matching::vertex_mask() const { return vertices().mask(); }

// -------------------------------------------------------------------- Graph

Graph::Graph(int n) {
  if (n < 0 || n > kMaxVertices)
    throw Error(ErrorCode::Unsupported, "vertex count " + std::to_string(n) + " outside [0, 64]");
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const auto& raw : edges) {
    Edge e = make_edge(raw.u, raw.v);
    if (e.v >= n) throw Error(ErrorCode::VertexOutOfRange, std::to_string(e.v));
    adj_[e.u] |= bit(e.v);
    adj_[e.v] |= bit(e.u);
  }
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

Graph Graph::from_masks(std::vector<Mask> adjacency) {
  Graph g(static_cast<int>(adjacency.size()));
  const int n = g.n();
  const Mask all = low_mask(n);
  for (int v = 0; v < n; ++v) {
    if (adjacency[v] & ~all) throw Error(ErrorCode::VertexOutOfRange, "neighbor id >= n");
    if (adjacency[v] & bit(v)) throw Error(ErrorCode::InvalidArgument, "self-loop");
    for (Mask m = adjacency[v]; m; m &= m - 1) {
      if (!(adjacency[lowest(m)] & bit(v)))
        throw Error(ErrorCode::InvalidArgument, "adjacency is not symmetric");
    }
  }
  g.adj_ = std::move(adjacency);
  return g;
}

int Graph::m() const {
  int total = 0;
  for (Mask a : adj_) total += popcount(a);
  return total / 2;
}

std::vector<int> Graph::neighbors(int v) const { return VertexSet::from_mask(adj_[v]).members(); }

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n(); ++u)
    for (Mask m = adj_[u] & ~low_mask(u + 1); m; m &= m - 1) out.push_back({u, lowest(m)});
  return out;
}

bool Graph::has_edge(const Edge& e) const {
  return e.u >= 0 && e.v < n() && e.u != e.v && adjacent(e.u, e.v);
}

// ------------------------------------------------------------------- graph6

namespace {

constexpr int kGraph6Offset = 63;
constexpr int kGraph6MaxOrder = 62;
constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
  if (text.empty()) throw Error(ErrorCode::MalformedGraph6, "empty word");
  for (char c : text) {
    const int b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126)
      throw Error(ErrorCode::MalformedGraph6, "byte " + std::to_string(b) + " outside 63..126");
  }
  const int n = static_cast<unsigned char>(text[0]) - kGraph6Offset;
  if (n > kGraph6MaxOrder)
    throw Error(ErrorCode::Unsupported, "graph6 words with more than 62 vertices are not supported");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() != body + 1)
    throw Error(ErrorCode::MalformedGraph6, "expected " + std::to_string(body + 1) +
                                                " bytes for n=" + std::to_string(n) + ", got " +
                                                std::to_string(text.size()));
  std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int word = static_cast<unsigned char>(text[1 + k / 6]) - kGraph6Offset;
      if ((word >> (5 - k % 6)) & 1) {
        adj[i] |= bit(j);
        adj[j] |= bit(i);
      }
    }
  }
  for (; k < body * 6; ++k) {
    const int word = static_cast<unsigned char>(text[1 + k / 6]) - kGraph6Offset;
    if ((word >> (5 - k % 6)) & 1) throw Error(ErrorCode::MalformedGraph6, "nonzero padding");
  }
  return Graph::from_masks(std::move(adj));
}

std::string write_graph6(const Graph& g) {
  const int n = g.n();
  if (n > kGraph6MaxOrder)
    throw Error(ErrorCode::Unsupported, "graph6 writer supports n <= 62, got " + std::to_string(n));
  std::string out(1, static_cast<char>(n + kGraph6Offset));
  int word = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      word = (word << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(word + kGraph6Offset));
        word = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((word << (6 - filled)) + kGraph6Offset));
  return out;
}

// --------------------------------------------------------------- operations

Graph without_edges(const Graph& g, std::span<const Edge> edges) {
  std::vector<Mask> adj = g.masks();
  for (const auto& e : edges) {
    adj[e.u] &= ~bit(e.v);
    adj[e.v] &= ~bit(e.u);
  }
  return Graph::from_masks(std::move(adj));
}

Graph delete_edges(const Graph& g, std::span<const Edge> edges) {
  for (const auto& raw : edges) {
    const Edge e = make_edge(raw.u, raw.v);
    if (!g.has_edge(e))
      throw Error(ErrorCode::EdgeAbsent,
                  "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " not in graph");
  }
  std::vector<Edge> normalized;
  for (const auto& raw : edges) normalized.push_back(make_edge(raw.u, raw.v));
  return without_edges(g, normalized);
}

Graph delete_edges(const Graph& g, const Matching& m) { return delete_edges(g, m.edges()); }

Relabeled induced_mask(const Graph& g, Mask keep) {
  keep &= g.vertex_mask();
  Relabeled r;
  std::vector<int> position(static_cast<std::size_t>(g.n()), -1);
  for (Mask m = keep; m; m &= m - 1) {
    position[lowest(m)] = static_cast<int>(r.original.size());
    r.original.push_back(lowest(m));
  }
  std::vector<Mask> adj(r.original.size(), 0);
  for (std::size_t i = 0; i < r.original.size(); ++i)
    for (Mask m = g.neighbor_mask(r.original[i]) & keep; m; m &= m - 1)
      adj[i] |= bit(position[lowest(m)]);
  r.graph = Graph::from_masks(std::move(adj));
  return r;
}

namespace {

Mask checked_mask(const Graph& g, const VertexSet& s) {
  for (int v : s)
    if (v >= g.n()) throw Error(ErrorCode::VertexOutOfRange, std::to_string(v));
  return s.mask();
}

}  // namespace

Relabeled delete_vertices(const Graph& g, const VertexSet& s) {
  return induced_mask(g, g.vertex_mask() & ~checked_mask(g, s));
}

Relabeled induced(const Graph& g, const VertexSet& s) { return induced_mask(g, checked_mask(g, s)); }

Relabeled bipartite_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
  const Mask am = checked_mask(g, a);
  const Mask bm = checked_mask(g, b);
  if (am & bm) throw Error(ErrorCode::SetsOverlap, "parts share a vertex");
  std::vector<Mask> adj = g.masks();
  for (int v = 0; v < g.n(); ++v) {
    if (am & bit(v)) adj[v] &= bm;
    else if (bm & bit(v)) adj[v] &= am;
    else adj[v] = 0;
  }
  return induced_mask(Graph::from_masks(std::move(adj)), am | bm);
}

Contracted contract_subset(const Graph& g, const VertexSet& h) {
  const Mask hm = checked_mask(g, h);
  if (hm == 0) throw Error(ErrorCode::EmptySubset, "contracted set is empty");
  if (hm == g.vertex_mask()) throw Error(ErrorCode::SubsetIsWholeGraph, "cannot contract all vertices");
  const Relabeled rest = induced_mask(g, g.vertex_mask() & ~hm);
  const Mask attach = neighborhood(g, hm);
  std::vector<Mask> adj = rest.graph.masks();
  const int fresh = static_cast<int>(adj.size());
  adj.push_back(0);
  for (int i = 0; i < fresh; ++i) {
    if (attach & bit(rest.original[i])) {
      adj[i] |= bit(fresh);
      adj[fresh] |= bit(i);
    }
  }
  Contracted c;
  c.graph = Graph::from_masks(std::move(adj));
  c.new_vertex = fresh;
  c.original = rest.original;
  c.original.push_back(-1);
  return c;
}

// --------------------------------------------------------------- predicates

int min_degree(const Graph& g) {
  int best = kInfiniteDegree;
  for (int v = 0; v < g.n(); ++v) best = std::min(best, g.degree(v));
  return best;
}

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.n(); ++v) best = std::max(best, g.degree(v));
  return best;
}

VertexSet degree_k_vertices(const Graph& g, int k) {
  Mask m = 0;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) == k) m |= bit(v);
  return VertexSet::from_mask(m);
}

bool is_forest(const Graph& g) {
  return g.m() == g.n() - static_cast<int>(components(g).size());
}

bool is_matching_set(const Graph& g, std::span<const Edge> edges) {
  Mask used = 0;
  for (const auto& raw : edges) {
    if (raw.u == raw.v || raw.u < 0 || raw.v < 0) return false;
    const Edge e = make_edge(raw.u, raw.v);
    if (!g.has_edge(e)) return false;
    if (used & (bit(e.u) | bit(e.v))) return false;
    used |= bit(e.u) | bit(e.v);
  }
  return true;
}

Mask neighborhood(const Graph& g, Mask x) {
  Mask out = 0;
  for (Mask m = x; m; m &= m - 1) out |= g.neighbor_mask(lowest(m));
  return out & ~x;
}

std::vector<Mask> components(const Graph& g, Mask alive) {
  std::vector<Mask> out;
  Mask left = alive & g.vertex_mask();
  while (left) {
    Mask comp = bit(lowest(left));
    Mask frontier = comp;
    while (frontier) {
      Mask next = 0;
      for (Mask m = frontier; m; m &= m - 1) next |= g.neighbor_mask(lowest(m));
      next &= alive & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

std::vector<Mask> components(const Graph& g) { return components(g, g.vertex_mask()); }

int component_count(const Graph& g) { return static_cast<int>(components(g).size()); }

bool is_connected_within(const Graph& g, Mask alive) {
  alive &= g.vertex_mask();
  if (alive == 0) return true;
  Mask comp = bit(lowest(alive));
  Mask frontier = comp;
  while (frontier) {
    Mask next = 0;
    for (Mask m = frontier; m; m &= m - 1) next |= g.neighbor_mask(lowest(m));
    next &= alive & ~comp;
    comp |= next;
    frontier = next;
  }
  return comp == alive;
}

bool is_connected(const Graph& g) { return is_connected_within(g, g.vertex_mask()); }

bool is_bipartite(const Graph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.n()), -1);
  for (int s = 0; s < g.n(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (Mask m = g.neighbor_mask(u); m; m &= m - 1) {
        const int v = lowest(m);
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          stack.push_back(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace remmatch
