#include "remmatch/families.hpp"

#include <vector>

namespace remmatch::families {

Graph complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.push_back({u, v});
  return Graph(n, e);
}

Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back(make_edge(i, (i + 1) % n));
  return Graph(n, e);
}

Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(n, e);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> e;
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) e.push_back({u, v});
  return Graph(a + b, e);
}

Graph star(int leaves) { return complete_bipartite(1, leaves); }

Graph wheel(int rim) { return independent_join_cycle(1, rim); }

Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back(make_edge(i, (i + 1) % 5));
    e.push_back(make_edge(i, i + 5));
    e.push_back(make_edge(5 + i, 5 + (i + 2) % 5));
  }
  return Graph(10, e);
}

Graph independent_join_cycle(int a, int c) {
  std::vector<Edge> e;
  for (int i = 0; i < c; ++i) e.push_back(make_edge(a + i, a + (i + 1) % c));
  for (int x = 0; x < a; ++x)
    for (int i = 0; i < c; ++i) e.push_back({x, a + i});
  return Graph(a + c, e);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> e = a.edges();
  for (const auto& f : b.edges()) e.push_back({f.u + a.n(), f.v + a.n()});
  return Graph(a.n() + b.n(), e);
}

}  // namespace remmatch::families
