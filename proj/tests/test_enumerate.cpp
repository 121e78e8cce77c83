#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "remmatch/connectivity.hpp"
#include "remmatch/enumerate.hpp"
#include "remmatch/error.hpp"
#include "remmatch/families.hpp"

using namespace remmatch;

TEST(Enumerate, KnownCounts) {
  const std::size_t expected[] = {0, 1, 1, 2, 6, 21, 112, 853, 11117};
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(enumerate_connected_graphs(n).size(), expected[n]) << n;
}

TEST(Enumerate, MatchesBruteForceClasses) {
  for (int n = 1; n <= 6; ++n)
    EXPECT_EQ(enumerate_connected_graphs(n).size(), oracle::connected_classes(n)) << n;
}

TEST(Enumerate, RepresentativesArePairwiseNonIsomorphic) {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::uint64_t> codes;
    for (const Graph& g : enumerate_connected_graphs(n)) {
      EXPECT_TRUE(is_connected(g));
      EXPECT_TRUE(codes.insert(oracle::permutation_code(g)).second) << write_graph6(g);
    }
  }
}

TEST(Enumerate, Filters) {
  const auto dense = enumerate_connected_graphs(4, {2, 3});
  ASSERT_EQ(dense.size(), 1u);
  EXPECT_EQ(dense[0], families::complete(4));
  for (const Graph& g : enumerate_connected_graphs(6, {3, 0})) EXPECT_GE(vertex_connectivity(g), 3);
  EXPECT_THROW(enumerate_connected_graphs(9), Error);
}

TEST(Canonical, InvariantUnderRelabeling) {
  std::mt19937 rng(7);
  const Graph samples[] = {families::petersen(), families::wheel(6), families::complete_bipartite(3, 4),
                           families::path(9), families::cycle(11)};
  for (const Graph& g : samples) {
    const auto code = canonical_code(g);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<int> p(g.n());
      std::iota(p.begin(), p.end(), 0);
      std::shuffle(p.begin(), p.end(), rng);
      std::vector<Edge> e;
      for (const Edge& x : g.edges()) e.push_back(make_edge(p[x.u], p[x.v]));
      const Graph h(g.n(), e);
      ASSERT_EQ(canonical_code(h), code);
      ASSERT_EQ(canonical_graph(h), canonical_graph(g));
    }
  }
}

TEST(Canonical, SeparatesNonIsomorphicPairs) {
  // Same degree sequence: C6 versus two triangles.
  const Graph two = families::disjoint_union(families::cycle(3), families::cycle(3));
  EXPECT_NE(canonical_code(families::cycle(6)), canonical_code(two));
  EXPECT_THROW(canonical_code(Graph(12)), Error);
}

TEST(Ingest, ValidWords) {
  std::istringstream in("C~\nBw\n@\n");
  EXPECT_EQ(ingest_graph6_stream(in).size(), 3u);
}

TEST(Ingest, HeaderSkipped) {
  std::istringstream in(">>graph6<<\nC~\n\n");
  const auto g = ingest_graph6_stream(in);
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g[0], families::complete(4));
}

TEST(Ingest, StrictAbortsWithLineNumber) {
  std::istringstream in("C~\nC!!\nBw\n");
  try {
    ingest_graph6_stream(in);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MalformedGraph6);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(Ingest, LenientCollectsIssues) {
  std::istringstream in("C~\nC!!\nBw\n");
  std::vector<IngestIssue> issues;
  const auto g = ingest_graph6_stream(in, false, &issues);
  EXPECT_EQ(g.size(), 2u);
  ASSERT_EQ(issues.size(), 1u);
  EXPECT_EQ(issues[0].line, 2);
}
