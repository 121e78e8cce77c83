#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace remmatch {

/// Bit i set means vertex i is a member.
using Mask = std::uint64_t;

inline constexpr int kMaxVertices = 64;
inline constexpr int kInfiniteDegree = std::numeric_limits<int>::max();

inline Mask bit(int v) { return Mask{1} << v; }
inline Mask low_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
inline int popcount(Mask m) { return __builtin_popcountll(m); }
inline int lowest(Mask m) { return __builtin_ctzll(m); }

/// Unordered pair {u, v} stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Normalizes the pair; throws on a self-loop or a negative id.
Edge make_edge(int a, int b);

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<int> ids);
  explicit VertexSet(std::vector<int> ids);
  static VertexSet from_mask(Mask m);

  const std::vector<int>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(int v) const;
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  /// Requires every member < 64.
  Mask mask() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<int> members_;
};

/// Pairwise vertex-disjoint edges, sorted.
class Matching {
 public:
  Matching() = default;
  Matching(std::initializer_list<Edge> edges);
  explicit Matching(std::vector<Edge> edges);

  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  VertexSet vertices() const;
  Mask vertex_mask() const;

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<Edge> edges_;
};

/// Immutable simple undirected graph on vertices 0..n-1 (n <= 64), stored as
/// one neighbor bitmask per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges);

  /// Validates symmetry, range and absence of loops.
  static Graph from_masks(std::vector<Mask> adjacency);

  int n() const { return static_cast<int>(adj_.size()); }
  int m() const;
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1; }
  Mask neighbor_mask(int v) const { return adj_[v]; }
  std::vector<int> neighbors(int v) const;
  int degree(int v) const { return popcount(adj_[v]); }
  Mask vertex_mask() const { return low_mask(n()); }
  const std::vector<Mask>& masks() const { return adj_; }

  /// Edges in lexicographic order.
  std::vector<Edge> edges() const;
  bool has_edge(const Edge& e) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Mask> adj_;
};

/// A graph whose vertices were renumbered; original[i] is the id in the source
/// graph of new vertex i.
struct Relabeled {
  Graph graph;
  std::vector<int> original;
};

struct Contracted {
  Graph graph;
  int new_vertex = -1;
  /// original[new_vertex] is -1.
  std::vector<int> original;
};

// graph6 (single-byte order form, n <= 62).
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

Graph delete_edges(const Graph& g, std::span<const Edge> edges);
Graph delete_edges(const Graph& g, const Matching& m);
Relabeled delete_vertices(const Graph& g, const VertexSet& s);
Relabeled induced(const Graph& g, const VertexSet& s);
Relabeled bipartite_between(const Graph& g, const VertexSet& a, const VertexSet& b);
Contracted contract_subset(const Graph& g, const VertexSet& h);

// Mask-level variants used on hot paths; no relabeling, no range checks.
Graph without_edges(const Graph& g, std::span<const Edge> edges);
Relabeled induced_mask(const Graph& g, Mask keep);

/// kInfiniteDegree for the 0-vertex graph.
int min_degree(const Graph& g);
int max_degree(const Graph& g);
VertexSet degree_k_vertices(const Graph& g, int k);
bool is_forest(const Graph& g);
bool is_matching_set(const Graph& g, std::span<const Edge> edges);

/// N(X) = union of neighborhoods minus X.
Mask neighborhood(const Graph& g, Mask x);

/// Components restricted to the vertices in `alive`.
std::vector<Mask> components(const Graph& g, Mask alive);
std::vector<Mask> components(const Graph& g);
int component_count(const Graph& g);
bool is_connected(const Graph& g);
/// Connectivity of the subgraph induced on `alive`; true when alive is empty.
bool is_connected_within(const Graph& g, Mask alive);

bool is_bipartite(const Graph& g);

}  // namespace remmatch
