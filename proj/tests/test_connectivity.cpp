#include <gtest/gtest.h>

#include "oracles.hpp"
#include "remmatch/connectivity.hpp"
#include "remmatch/enumerate.hpp"
#include "remmatch/error.hpp"
#include "remmatch/families.hpp"

using namespace remmatch;

TEST(Connectivity, NamedGraphs) {
  EXPECT_EQ(vertex_connectivity(families::complete(5)), 4);
  EXPECT_EQ(vertex_connectivity(families::cycle(6)), 2);
  EXPECT_EQ(vertex_connectivity(families::path(4)), 1);
  EXPECT_EQ(vertex_connectivity(families::petersen()), 3);
  EXPECT_EQ(oracle::connectivity(families::petersen()), 3);
  EXPECT_EQ(vertex_connectivity(Graph(1)), 0);
  EXPECT_EQ(vertex_connectivity(families::disjoint_union(families::cycle(3), families::cycle(3))), 0);
  EXPECT_EQ(vertex_connectivity(families::complete_bipartite(3, 5)), 3);
  EXPECT_THROW(vertex_connectivity(Graph(0)), Error);
}

TEST(Connectivity, KConnectedCertificates) {
  const auto k4 = families::complete(4);
  EXPECT_TRUE(is_k_connected(k4, 3).connected());
  const auto too_small = is_k_connected(k4, 4);
  EXPECT_EQ(too_small.verdict, ConnectivityCertificate::Verdict::TooFewVertices);

  const auto c6 = is_k_connected(families::cycle(6), 3);
  ASSERT_EQ(c6.verdict, ConnectivityCertificate::Verdict::SeparatingSet);
  ASSERT_EQ(c6.separator.size(), 2u);
  EXPECT_FALSE(families::cycle(6).adjacent(c6.separator.members()[0], c6.separator.members()[1]));
  EXPECT_FALSE(is_connected(delete_vertices(families::cycle(6), c6.separator).graph));

  const auto k35 = families::complete_bipartite(3, 5);
  EXPECT_TRUE(is_k_connected(k35, 3).connected());
  const auto cut = is_k_connected(k35, 4);
  ASSERT_EQ(cut.verdict, ConnectivityCertificate::Verdict::SeparatingSet);
  EXPECT_EQ(cut.separator, (VertexSet{0, 1, 2}));

  EXPECT_THROW(is_k_connected(k4, 0), Error);
}

TEST(Connectivity, LocalPairs) {
  const auto k5 = families::complete(5);
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) EXPECT_EQ(local_vertex_connectivity(k5, u, v), 4);
  EXPECT_EQ(local_vertex_connectivity(families::cycle(6), 0, 3), 2);
  const auto p = families::petersen();
  for (int u = 0; u < 10; ++u)
    for (int v = u + 1; v < 10; ++v) EXPECT_EQ(local_vertex_connectivity(p, u, v), 3) << u << "," << v;
  EXPECT_THROW(local_vertex_connectivity(p, 2, 2), Error);
}

TEST(Connectivity, BruteForceGuard) {
  EXPECT_EQ(brute_force_vertex_connectivity(families::petersen()), 3);
  EXPECT_THROW(brute_force_vertex_connectivity(families::complete(13)), Error);
}

// Flow answer, library brute force and the test-side subset scan agree, and
// every reported minimum cut really separates.
TEST(Connectivity, AgreesWithSubsetScanUpToSix) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected_graphs(n)) {
      const int kappa = vertex_connectivity(g);
      ASSERT_EQ(kappa, oracle::connectivity(g)) << write_graph6(g);
      ASSERT_EQ(kappa, brute_force_vertex_connectivity(g)) << write_graph6(g);
      const VertexCut cut = minimum_vertex_cut(g);
      ASSERT_EQ(cut.size, kappa);
      if (!cut.separator.empty()) {
        ASSERT_EQ(static_cast<int>(cut.separator.size()), kappa);
        ASSERT_FALSE(is_connected(delete_vertices(g, cut.separator).graph)) << write_graph6(g);
      }
    }
  }
}

TEST(Connectivity, DisconnectedGraphsScoreZero) {
  const Graph g = families::disjoint_union(families::complete(4), families::cycle(5));
  EXPECT_EQ(vertex_connectivity(g), 0);
  EXPECT_FALSE(k_connected(g, 1));
  const auto cert = is_k_connected(g, 2);
  EXPECT_EQ(cert.verdict, ConnectivityCertificate::Verdict::SeparatingSet);
  EXPECT_TRUE(cert.separator.empty());
}
