#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "remmatch/graph.hpp"

namespace remmatch {

struct EnumerationFilter {
  /// Graphs are always connected; raise this to require k-connectivity.
  int min_connectivity = 1;
  int min_degree = 0;
};

inline constexpr int kMaxEnumerationOrder = 8;

/// Canonical code: the lexicographically largest upper-triangle bit string
/// (graph6 bit order) over all labelings that respect the ordered cells of
/// iterated degree refinement. Requires n <= 11 so the code fits 64 bits.
std::uint64_t canonical_code(const Graph& g);
/// The graph whose labeling realizes canonical_code.
Graph canonical_graph(const Graph& g);

/// One representative per isomorphism class of connected graphs on n vertices
/// passing the filter, in canonical form, ordered by edge count then code.
/// n <= 8; results are cached per n.
std::vector<Graph> enumerate_connected_graphs(int n, const EnumerationFilter& filter = {});

/// All connected graphs with n in [n_min, n_max].
std::vector<Graph> enumerate_connected_range(int n_min, int n_max, const EnumerationFilter& filter = {});

struct IngestIssue {
  int line = 0;
  std::string message;
};

/// Reads one graph6 word per line, skipping blank lines and ">>graph6<<"
/// headers. Strict mode throws MalformedGraph6 naming the line; otherwise bad
/// lines are recorded in `issues` and skipped.
std::vector<Graph> ingest_graph6_stream(std::istream& in, bool strict = true,
                                        std::vector<IngestIssue>* issues = nullptr);

}  // namespace remmatch
