#include "remmatch/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_set>

#include "remmatch/connectivity.hpp"
#include "remmatch/error.hpp"

namespace remmatch {
namespace {

constexpr int kMaxCanonicalOrder = 11;

// Iterated degree refinement; colors are ranks of isomorphism-invariant
// signatures, so the ordered partition is itself invariant.
std::vector<int> refine(const Graph& g) {
  const int n = g.n();
  std::vector<int> color(n);
  for (int v = 0; v < n; ++v) color[v] = g.degree(v);
  int classes = -1;
  while (true) {
    std::vector<std::vector<int>> signature(n);
    for (int v = 0; v < n; ++v) {
      signature[v].push_back(color[v]);
      std::vector<int> around;
      for (Mask m = g.neighbor_mask(v); m; m &= m - 1) around.push_back(color[lowest(m)]);
      std::sort(around.begin(), around.end());
      signature[v].insert(signature[v].end(), around.begin(), around.end());
    }
    std::vector<std::vector<int>> distinct = signature;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v)
      color[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), signature[v]) -
                                  distinct.begin());
    if (static_cast<int>(distinct.size()) == classes) break;
    classes = static_cast<int>(distinct.size());
  }
  return color;
}

class Canonicalizer {
 public:
  explicit Canonicalizer(const Graph& g) : g_(g), n_(g.n()), bits_(n_ * (n_ - 1) / 2) {
    const std::vector<int> color = refine(g_);
    std::vector<int> order(n_);
    for (int v = 0; v < n_; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return color[a] < color[b]; });
    cell_.resize(n_);
    for (int p = 0; p < n_; ++p) {
      Mask cell = 0;
      for (int v = 0; v < n_; ++v)
        if (color[v] == color[order[p]]) cell |= bit(v);
      cell_[p] = cell;
    }
    // Twins (N(u) - v == N(v) - u) are swapped by an automorphism.
    twins_.assign(n_, 0);
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v)
        if (u != v && (g.neighbor_mask(u) & ~bit(v)) == (g.neighbor_mask(v) & ~bit(u)))
          twins_[u] |= bit(v);
    perm_.assign(n_, -1);
  }

  void run() {
    if (n_ <= 1) {
      best_perm_.assign(n_, 0);
      return;
    }
    dfs(0, 0, 0);
  }

  std::uint64_t code() const { return best_; }

  Graph graph() const {
    std::vector<Mask> adj(n_, 0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (i != j && g_.adjacent(best_perm_[i], best_perm_[j])) adj[i] |= bit(j);
    return Graph::from_masks(std::move(adj));
  }

 private:
  std::uint64_t column(int p, int v) const {
    std::uint64_t c = 0;
    const int first = p * (p - 1) / 2;
    for (int j = 0; j < p; ++j)
      if (g_.adjacent(v, perm_[j])) c |= std::uint64_t{1} << (bits_ - 1 - (first + j));
    return c;
  }

  std::uint64_t prefix_mask(int p) const {
    const int len = p * (p - 1) / 2;
    if (len == 0) return 0;
    return (~std::uint64_t{0} << (bits_ - len)) & ((bits_ >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits_) - 1));
  }

  void dfs(int p, Mask used, std::uint64_t code) {
    if (p == n_) {
      if (!have_best_ || code > best_) {
        best_ = code;
        best_perm_ = perm_;
        have_best_ = true;
      }
      return;
    }
    std::vector<std::pair<std::uint64_t, int>> options;
    Mask tried = 0;
    for (Mask m = cell_[p] & ~used; m; m &= m - 1) {
      const int v = lowest(m);
      if (twins_[v] & tried & cell_[p]) continue;
      tried |= bit(v);
      perm_[p] = v;
      options.emplace_back(code | column(p, v), v);
    }
    std::sort(options.begin(), options.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    const std::uint64_t mask = prefix_mask(p + 1);
    for (const auto& [next, v] : options) {
      if (have_best_ && (next & mask) < (best_ & mask)) continue;
      perm_[p] = v;
      dfs(p + 1, used | bit(v), next);
    }
    perm_[p] = -1;
  }

  Graph g_;
  int n_;
  int bits_;
  std::vector<Mask> cell_;
  std::vector<Mask> twins_;
  std::vector<int> perm_;
  std::vector<int> best_perm_;
  std::uint64_t best_ = 0;
  bool have_best_ = false;
};

void require_canonical_order(const Graph& g) {
  if (g.n() > kMaxCanonicalOrder)
    throw Error(ErrorCode::TooLarge, "canonical codes are limited to n <= 11");
}

std::vector<Graph> all_connected(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<Graph>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  std::vector<Graph> level{Graph(n)};
  std::vector<Graph> connected;
  while (!level.empty()) {
    for (const Graph& g : level)
      if (n >= 1 && is_connected(g)) connected.push_back(g);
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::pair<std::uint64_t, Graph>> next;
    for (const Graph& g : level) {
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (g.adjacent(u, v)) continue;
          std::vector<Mask> adj = g.masks();
          adj[u] |= bit(v);
          adj[v] |= bit(u);
          Canonicalizer c(Graph::from_masks(std::move(adj)));
          c.run();
          if (seen.insert(c.code()).second) next.emplace_back(c.code(), c.graph());
        }
      }
    }
    std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    level.clear();
    for (auto& [code, g] : next) level.push_back(std::move(g));
  }
  cache[n] = connected;
  return connected;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  require_canonical_order(g);
  Canonicalizer c(g);
  c.run();
  return c.code();
}

Graph canonical_graph(const Graph& g) {
  require_canonical_order(g);
  Canonicalizer c(g);
  c.run();
  return c.graph();
}

std::vector<Graph> enumerate_connected_graphs(int n, const EnumerationFilter& filter) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  if (n > kMaxEnumerationOrder)
    throw Error(ErrorCode::TooLarge, "built-in enumeration stops at n = 8; ingest graph6 instead");
  std::vector<Graph> out;
  for (const Graph& g : all_connected(n)) {
    if (min_degree(g) < filter.min_degree && n > 0) continue;
    if (filter.min_connectivity > 1 && !k_connected(g, filter.min_connectivity)) continue;
    out.push_back(g);
  }
  return out;
}

std::vector<Graph> enumerate_connected_range(int n_min, int n_max, const EnumerationFilter& filter) {
  std::vector<Graph> out;
  for (int n = std::max(1, n_min); n <= n_max; ++n) {
    auto part = enumerate_connected_graphs(n, filter);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

std::vector<Graph> ingest_graph6_stream(std::istream& in, bool strict, std::vector<IngestIssue>* issues) {
  std::vector<Graph> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view word = line;
    while (!word.empty() && (word.back() == '\r' || word.back() == ' ' || word.back() == '\t'))
      word.remove_suffix(1);
    if (word.empty() || word == ">>graph6<<") continue;
    try {
      out.push_back(parse_graph6(word));
    } catch (const Error& e) {
      if (strict)
        throw Error(ErrorCode::MalformedGraph6, "line " + std::to_string(number) + ": " + e.what());
      if (issues) issues->push_back({number, e.what()});
    }
  }
  return out;
}

}  // namespace remmatch
