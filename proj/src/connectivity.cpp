#include "remmatch/connectivity.hpp"

#include <algorithm>
#include <array>

#include "remmatch/error.hpp"

namespace remmatch {
namespace {

// Unit-capacity flow on the vertex-split network: every vertex v other than
// the terminals becomes v_in -> v_out with capacity 1, every edge uv becomes
// u_out -> v_in and v_out -> u_in. Source is s_out, sink is t_in.
class SplitFlow {
 public:
  SplitFlow(const Graph& g, int s, int t) : g_(g), s_(s), t_(t), flow_(g.n(), 0) {}

  /// Augments until `limit` paths are found or none remain.
  int run(int limit) {
    int value = 0;
    while (value < limit && augment()) ++value;
    return value;
  }

  /// Only meaningful after run() stopped short of its limit.
  Mask cut() const {
    Mask c = 0;
    for (Mask m = reached_in_ & ~reached_out_; m; m &= m - 1) {
      const int v = lowest(m);
      if (v != s_ && v != t_) c |= bit(v);
    }
    return c;
  }

 private:
  // Node encoding: 2*v is v_in, 2*v+1 is v_out.
  bool augment() {
    const int n = g_.n();
    std::array<int, 2 * kMaxVertices> parent;
    std::array<int, 2 * kMaxVertices> queue;
    int head = 0;
    int tail = 0;
    reached_in_ = 0;
    reached_out_ = bit(s_);
    reached_in_ |= bit(s_);
    queue[tail++] = 2 * s_ + 1;
    parent[2 * s_ + 1] = -1;
    const int sink = 2 * t_;
    bool found = false;
    while (head < tail && !found) {
      const int node = queue[head++];
      const int v = node / 2;
      if (node & 1) {
        // v_out: forward along unused edges, backward into v_in.
        for (Mask m = g_.neighbor_mask(v) & ~flow_[v] & ~reached_in_; m; m &= m - 1) {
          const int w = lowest(m);
          reached_in_ |= bit(w);
          parent[2 * w] = node;
          queue[tail++] = 2 * w;
          if (2 * w == sink) {
            found = true;
            break;
          }
        }
        if (!found && v != s_ && (through_ & bit(v)) && !(reached_in_ & bit(v))) {
          reached_in_ |= bit(v);
          parent[2 * v] = node;
          queue[tail++] = 2 * v;
        }
      } else {
        // v_in: forward through the vertex, backward against incoming flow.
        if (!(through_ & bit(v)) && !(reached_out_ & bit(v))) {
          reached_out_ |= bit(v);
          parent[2 * v + 1] = node;
          queue[tail++] = 2 * v + 1;
        }
        for (int u = 0; u < n; ++u) {
          if ((flow_[u] & bit(v)) && !(reached_out_ & bit(u))) {
            reached_out_ |= bit(u);
            parent[2 * u + 1] = node;
            queue[tail++] = 2 * u + 1;
          }
        }
      }
    }
    if (!found) return false;
    for (int node = sink; parent[node] != -1; node = parent[node]) {
      const int prev = parent[node];
      const int a = prev / 2;
      const int b = node / 2;
      const bool from_out = prev & 1;
      const bool to_out = node & 1;
      if (from_out && !to_out) {
        if (a != b) flow_[a] |= bit(b);  // a_out -> b_in
        else through_ &= ~bit(a);        // undo a_in -> a_out
      } else if (!from_out && to_out) {
        if (a == b) through_ |= bit(a);  // a_in -> a_out
        else flow_[b] &= ~bit(a);        // undo b_out -> a_in
      }
    }
    return true;
  }

  const Graph& g_;
  int s_;
  int t_;
  std::vector<Mask> flow_;
  Mask through_ = 0;
  Mask reached_in_ = 0;
  Mask reached_out_ = 0;
};

// Pairs whose local connectivity bounds kappa from above, in the order the
// connectivity routines visit them: a min-degree vertex s against each
// non-neighbor, then the non-adjacent pairs inside N(s).
template <class Visit>
bool for_each_witness_pair(const Graph& g, Visit&& visit) {
  int s = 0;
  for (int v = 1; v < g.n(); ++v)
    if (g.degree(v) < g.degree(s)) s = v;
  const Mask ns = g.neighbor_mask(s);
  for (Mask m = g.vertex_mask() & ~ns & ~bit(s); m; m &= m - 1)
    if (!visit(s, lowest(m))) return false;
  for (Mask a = ns; a; a &= a - 1) {
    const int x = lowest(a);
    for (Mask b = ns & ~g.neighbor_mask(x) & ~low_mask(x + 1); b; b &= b - 1)
      if (!visit(x, lowest(b))) return false;
  }
  return true;
}

bool is_complete(const Graph& g) {
  return g.m() == g.n() * (g.n() - 1) / 2;
}

}  // namespace

VertexCut minimum_vertex_cut(const Graph& g) {
  if (g.n() == 0) throw Error(ErrorCode::EmptyGraph, "vertex connectivity of the empty graph");
  if (g.n() == 1 || !is_connected(g)) return {0, {}};
  if (is_complete(g)) return {g.n() - 1, {}};
  int s = 0;
  for (int v = 1; v < g.n(); ++v)
    if (g.degree(v) < g.degree(s)) s = v;
  VertexCut best{g.degree(s), VertexSet::from_mask(g.neighbor_mask(s))};
  for_each_witness_pair(g, [&](int a, int b) {
    SplitFlow flow(g, a, b);
    const int value = flow.run(best.size);
    if (value < best.size) best = {value, VertexSet::from_mask(flow.cut())};
    return true;
  });
  return best;
}

int vertex_connectivity(const Graph& g) { return minimum_vertex_cut(g).size; }

bool k_connected(const Graph& g, int k) {
  if (k <= 0) return g.n() >= 1;
  if (g.n() < k + 1) return false;
  if (min_degree(g) < k) return false;
  if (!is_connected(g)) return false;
  if (k == 1) return true;
  return for_each_witness_pair(g, [&](int a, int b) { return SplitFlow(g, a, b).run(k) >= k; });
}

ConnectivityCertificate is_k_connected(const Graph& g, int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be >= 1");
  ConnectivityCertificate cert;
  cert.k_tested = k;
  if (g.n() < k + 1) {
    cert.verdict = ConnectivityCertificate::Verdict::TooFewVertices;
    return cert;
  }
  if (k_connected(g, k)) {
    cert.verdict = ConnectivityCertificate::Verdict::Connected;
    return cert;
  }
  cert.verdict = ConnectivityCertificate::Verdict::SeparatingSet;
  cert.separator = minimum_vertex_cut(g).separator;
  return cert;
}

int local_vertex_connectivity(const Graph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.n() || v >= g.n())
    throw Error(ErrorCode::VertexOutOfRange, "endpoint outside graph");
  if (u == v) throw Error(ErrorCode::SameVertex, "local connectivity needs distinct endpoints");
  if (g.adjacent(u, v)) {
    const Edge e = make_edge(u, v);
    const Graph reduced = without_edges(g, std::span<const Edge>(&e, 1));
    return 1 + SplitFlow(reduced, u, v).run(g.n());
  }
  return SplitFlow(g, u, v).run(g.n());
}

int brute_force_vertex_connectivity(const Graph& g) {
  const int n = g.n();
  if (n == 0) throw Error(ErrorCode::EmptyGraph, "vertex connectivity of the empty graph");
  if (n > 12) throw Error(ErrorCode::TooLarge, "brute force is limited to n <= 12");
  const Mask all = g.vertex_mask();
  int best = n - 1;
  for (Mask s = 0; s <= all; ++s) {
    const int size = popcount(s);
    if (size >= best || popcount(all & ~s) < 2) continue;
    if (!is_connected_within(g, all & ~s)) best = size;
  }
  return best;
}

}  // namespace remmatch
