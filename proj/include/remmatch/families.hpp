#pragma once

#include "remmatch/graph.hpp"

// Named graphs used throughout tests, examples and the sample corpora.
namespace remmatch::families {

Graph complete(int n);
Graph cycle(int n);
Graph path(int n);
/// Parts are {0..a-1} and {a..a+b-1}.
Graph complete_bipartite(int a, int b);
/// Center 0, leaves 1..leaves.
Graph star(int leaves);
/// Hub 0 joined to a cycle on 1..rim.
Graph wheel(int rim);
Graph petersen();
/// Independent set {0..a-1} joined to a cycle on the remaining c vertices.
Graph independent_join_cycle(int a, int c);
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace remmatch::families
