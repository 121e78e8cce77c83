#pragma once

#include "remmatch/graph.hpp"

namespace remmatch {

/// Outcome of a k-connectivity test. A failing test carries a minimum
/// separating set (empty when the graph is already disconnected), except when
/// the graph has at most k vertices, where no set can witness the failure.
struct ConnectivityCertificate {
  enum class Verdict { Connected, SeparatingSet, TooFewVertices };

  Verdict verdict = Verdict::TooFewVertices;
  int k_tested = 0;
  VertexSet separator;

  bool connected() const { return verdict == Verdict::Connected; }
};

struct VertexCut {
  int size = 0;
  /// Empty for disconnected graphs and for complete graphs (which have no cut).
  VertexSet separator;
};

/// Exact kappa(G). kappa(K_n) = n-1, kappa of a disconnected graph or K_1 is 0.
int vertex_connectivity(const Graph& g);
VertexCut minimum_vertex_cut(const Graph& g);

/// k-connected means n >= k+1 and no separating set of fewer than k vertices.
ConnectivityCertificate is_k_connected(const Graph& g, int k);

/// Boolean form of is_k_connected without building a certificate; this is the
/// variant the search routines call in their inner loops.
bool k_connected(const Graph& g, int k);

/// Maximum number of internally vertex-disjoint u-v paths. An edge uv counts
/// as one path.
int local_vertex_connectivity(const Graph& g, int u, int v);

/// Exhaustive subset scan; n <= 12.
int brute_force_vertex_connectivity(const Graph& g);

}  // namespace remmatch
