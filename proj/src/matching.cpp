#include "remmatch/matching.hpp"

#include <algorithm>
#include <cstdint>

#include "remmatch/error.hpp"

namespace remmatch {
namespace {

constexpr int kExactMatchingLimit = 20;

class Augmenter {
 public:
  Augmenter(const Graph& g, Mask left, Mask right)
      : g_(g), left_(left), right_(right), mate_(g.n(), -1) {}

  void run() {
    for (Mask m = left_; m; m &= m - 1) {
      seen_ = 0;
      try_augment(lowest(m));
    }
  }

  int mate(int v) const { return mate_[v]; }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Mask m = left_; m; m &= m - 1) {
      const int x = lowest(m);
      if (mate_[x] >= 0) out.push_back(make_edge(x, mate_[x]));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  bool try_augment(int x) {
    for (Mask m = g_.neighbor_mask(x) & right_ & ~seen_; m; m &= m - 1) {
      const int y = lowest(m);
      seen_ |= bit(y);
      if (mate_[y] < 0 || try_augment(mate_[y])) {
        mate_[y] = x;
        mate_[x] = y;
        return true;
      }
    }
    return false;
  }

  const Graph& g_;
  Mask left_;
  Mask right_;
  Mask seen_ = 0;
  std::vector<int> mate_;
};

int exact_matching(const Graph& g, Mask alive, std::vector<std::int8_t>& memo) {
  if (popcount(alive) < 2) return 0;
  if (memo[alive] >= 0) return memo[alive];
  const int v = lowest(alive);
  const Mask rest = alive & ~bit(v);
  int best = exact_matching(g, rest, memo);
  for (Mask m = g.neighbor_mask(v) & rest; m; m &= m - 1)
    best = std::max(best, 1 + exact_matching(g, rest & ~bit(lowest(m)), memo));
  memo[alive] = static_cast<std::int8_t>(best);
  return best;
}

}  // namespace

std::vector<Edge> bipartite_matching(const Graph& g, Mask left, Mask right) {
  if (left & right) throw Error(ErrorCode::SetsOverlap, "bipartite sides overlap");
  Augmenter aug(g, left & g.vertex_mask(), right & g.vertex_mask());
  aug.run();
  return aug.edges();
}

HallOutcome matching_covering(const Graph& gbip, const VertexSet& x) {
  for (int v : x)
    if (v >= gbip.n()) throw Error(ErrorCode::VertexOutOfRange, std::to_string(v));
  if (x.empty()) throw Error(ErrorCode::NotBipartiteWithPart, "designated part is empty");
  const Mask xs = x.mask();
  const Mask ys = gbip.vertex_mask() & ~xs;
  for (int v = 0; v < gbip.n(); ++v) {
    const Mask same = (xs & bit(v)) ? xs : ys;
    if (gbip.neighbor_mask(v) & same)
      throw Error(ErrorCode::NotBipartiteWithPart, "edge inside one side at vertex " + std::to_string(v));
  }
  Augmenter aug(gbip, xs, ys);
  aug.run();
  HallOutcome out;
  Mask unmatched = 0;
  for (Mask m = xs; m; m &= m - 1)
    if (aug.mate(lowest(m)) < 0) unmatched |= bit(lowest(m));
  if (unmatched == 0) {
    out.covering_matching = Matching(aug.edges());
    return out;
  }
  Mask reached_x = unmatched;
  Mask reached_y = 0;
  Mask frontier = unmatched;
  while (frontier) {
    const Mask ny = neighborhood(gbip, frontier) & ys & ~reached_y;
    reached_y |= ny;
    Mask next = 0;
    for (Mask m = ny; m; m &= m - 1) next |= bit(aug.mate(lowest(m)));
    frontier = next & ~reached_x;
    reached_x |= next;
  }
  out.deficiency_set = VertexSet::from_mask(reached_x);
  return out;
}

int max_matching_size(const Graph& g) {
  if (is_bipartite(g)) {
    // Two-color by BFS; the color classes are the sides.
    Mask left = 0;
    std::vector<int> color(g.n(), -1);
    for (int s = 0; s < g.n(); ++s) {
      if (color[s] >= 0) continue;
      color[s] = 0;
      std::vector<int> stack{s};
      while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        if (color[u] == 0) left |= bit(u);
        for (Mask m = g.neighbor_mask(u); m; m &= m - 1) {
          const int v = lowest(m);
          if (color[v] < 0) {
            color[v] = 1 - color[u];
            stack.push_back(v);
          }
        }
      }
    }
    return static_cast<int>(bipartite_matching(g, left, g.vertex_mask() & ~left).size());
  }
  if (g.n() > kExactMatchingLimit)
    throw Error(ErrorCode::TooLarge, "non-bipartite maximum matching is limited to n <= 20");
  std::vector<std::int8_t> memo(std::size_t{1} << g.n(), -1);
  return exact_matching(g, g.vertex_mask(), memo);
}

}  // namespace remmatch
