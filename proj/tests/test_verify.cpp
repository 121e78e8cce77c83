#include <gtest/gtest.h>

#include <fstream>

#include "remmatch/enumerate.hpp"
#include "remmatch/error.hpp"
#include "remmatch/families.hpp"
#include "remmatch/structure.hpp"
#include "remmatch/verify.hpp"

using namespace remmatch;

namespace {

TheoremParams params(int k, int n_max, std::optional<int> delta = std::nullopt) {
  TheoremParams p;
  p.k = k;
  p.n_max = n_max;
  p.delta = delta;
  return p;
}

const std::vector<Graph>& up_to_seven() {
  static const std::vector<Graph> graphs = enumerate_connected_range(1, 7);
  return graphs;
}

void expect_clean(const VerificationReport& r) {
  EXPECT_TRUE(r.arithmetic_holds());
  EXPECT_TRUE(r.counterexamples.empty()) << r.theorem_id;
  EXPECT_TRUE(r.finder_failures.empty()) << r.theorem_id;
  EXPECT_TRUE(r.undecided.empty()) << r.theorem_id;
  EXPECT_EQ(r.recheck_failures, 0u);
}

}  // namespace

TEST(Verify, TwoMatchingK2) {
  const auto r = verify_theorem("two-matching", params(2, 7), up_to_seven());
  expect_clean(r);
  EXPECT_GT(r.graphs_checked, 0u);
  EXPECT_EQ(r.exceptions_matched, 0u);
}

TEST(Verify, HalinK2) {
  const auto r = verify_theorem("halin", params(2, 7), up_to_seven());
  expect_clean(r);
  EXPECT_EQ(r.passes, r.graphs_checked);
}

TEST(Verify, CyclesAreTheOnlyTwoMatchingExceptions) {
  const auto r = verify_theorem("two-matching", params(1, 7), up_to_seven());
  expect_clean(r);
  EXPECT_EQ(r.exceptions_matched, 5u);  // C3 .. C7
  for (const auto& e : r.exception_instances) EXPECT_EQ(e.family, "cycle");
}

TEST(Verify, HalfDeltaExceptionsAreCompleteGraphs) {
  const auto r = verify_theorem("half-delta", params(2, 7), up_to_seven());
  expect_clean(r);
  ASSERT_EQ(r.exception_instances.size(), 2u);
  EXPECT_EQ(parse_graph6(r.exception_instances[0].graph6), families::complete(5));
  EXPECT_EQ(parse_graph6(r.exception_instances[1].graph6), families::complete(7));
}

TEST(Verify, RemainingSuitesClean) {
  expect_clean(verify_theorem("ckl", params(2, 7), up_to_seven()));
  expect_clean(verify_theorem("one-delta", params(1, 7, 3), up_to_seven()));
  expect_clean(verify_theorem("half-n-min", params(1, 7), up_to_seven()));
  expect_clean(verify_theorem("mader-audit", params(3, 7), up_to_seven()));
  expect_clean(verify_theorem("separating-set", params(2, 7), up_to_seven()));
  expect_clean(verify_theorem("two-near-delta", params(2, 7, 5), up_to_seven()));
}

TEST(Verify, ParallelRunMatchesSerial) {
  TheoremParams serial = params(2, 7);
  TheoremParams parallel = serial;
  parallel.jobs = 4;
  const auto a = verify_theorem("half-delta", serial, up_to_seven());
  const auto b = verify_theorem("half-delta", parallel, up_to_seven());
  EXPECT_EQ(a.graphs_checked, b.graphs_checked);
  EXPECT_EQ(a.passes, b.passes);
  ASSERT_EQ(a.exception_instances.size(), b.exception_instances.size());
  for (std::size_t i = 0; i < a.exception_instances.size(); ++i)
    EXPECT_EQ(a.exception_instances[i].graph6, b.exception_instances[i].graph6);
}

TEST(Verify, UnknownIds) {
  EXPECT_THROW(verify_theorem("no-such", params(1, 4), up_to_seven()), Error);
  EXPECT_THROW(hunt_conjecture("con:none", params(1, 4), up_to_seven()), Error);
}

// A deliberately wrong statement must be caught: cycles are 1-connected with
// minimum degree 2, and "con:matching" at k = 1 asks them for a 2-matching.
TEST(Hunt, LiteralConjectureFlagsCycles) {
  const auto r = hunt_conjecture("con:matching", params(1, 6), up_to_seven());
  EXPECT_TRUE(r.arithmetic_holds());
  // C3 = K3 falls under the complete-graph exclusion, leaving C4, C5, C6.
  ASSERT_EQ(r.counterexamples.size(), 3u);
  for (const auto& w : r.counterexamples) EXPECT_EQ(classify_exception(parse_graph6(w)).name(), "cycle");
}

TEST(Hunt, HalfNMinK1) {
  const auto r = hunt_conjecture("con:half-n-min", params(1, 7), up_to_seven());
  expect_clean(r);
}

TEST(FBounds, Clauses) {
  auto b = f_paper_bounds(1, 2);
  EXPECT_EQ(b.lower, 1);
  EXPECT_EQ(b.upper, 1);
  b = f_paper_bounds(1, 3);
  EXPECT_EQ(b.lower, 3);
  EXPECT_EQ(b.upper, 3);
  b = f_paper_bounds(2, 3);
  EXPECT_EQ(b.lower, 2);
  EXPECT_EQ(b.upper, 2);
  b = f_paper_bounds(2, 5);
  EXPECT_EQ(b.lower, 3);
  EXPECT_EQ(b.upper, 5);
  b = f_paper_bounds(3, 4);
  EXPECT_EQ(b.lower, 2);
  EXPECT_EQ(b.upper, 3);
  b = f_paper_bounds(4, 6);
  EXPECT_FALSE(b.lower);
  EXPECT_EQ(b.upper, 6);
  EXPECT_THROW(f_paper_bounds(3, 3), Error);
}

TEST(EmpiricalF, SmallTables) {
  const auto graphs = enumerate_connected_range(1, 8);
  const auto t23 = empirical_f(2, 3, 8, graphs);
  EXPECT_EQ(t23.lower_observed, 2);
  EXPECT_TRUE(t23.consistent());
  bool wheel = false;
  for (const auto& w : t23.witnesses)
    wheel = wheel || canonical_code(parse_graph6(w)) == canonical_code(families::wheel(parse_graph6(w).n() - 1));
  EXPECT_TRUE(wheel);

  const auto t13 = empirical_f(1, 3, 8, graphs);
  EXPECT_EQ(t13.lower_observed, 3);
  bool k3 = false;
  for (const auto& w : t13.witnesses) {
    const Graph g = parse_graph6(w);
    k3 = k3 || canonical_code(g) == canonical_code(families::complete_bipartite(3, g.n() - 3));
  }
  EXPECT_TRUE(k3);

  const auto t12 = empirical_f(1, 2, 6, graphs);
  EXPECT_EQ(t12.lower_observed, 1);
  EXPECT_THROW(empirical_f(2, 3, 5, graphs), Error);
  EXPECT_THROW(empirical_f(3, 7, 14, graphs), Error);
}

TEST(EmpiricalF, IngestedCorpus) {
  std::ifstream file(std::string(REMMATCH_TEST_DATA) + "/n10_mindeg5.g6");
  ASSERT_TRUE(file);
  const auto graphs = ingest_graph6_stream(file);
  const auto t = empirical_f(2, 5, 10, graphs);
  ASSERT_TRUE(t.lower_observed);
  EXPECT_GE(*t.lower_observed, 2);
  EXPECT_LE(*t.lower_observed, 5);
  EXPECT_TRUE(t.consistent());
}

TEST(SeparatorScan, MatchesDefinition) {
  EXPECT_TRUE(separator_scan_k_connected(families::petersen(), 3));
  EXPECT_FALSE(separator_scan_k_connected(families::petersen(), 4));
  EXPECT_FALSE(separator_scan_k_connected(families::complete(4), 4));
}
