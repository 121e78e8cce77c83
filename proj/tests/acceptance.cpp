// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "remmatch/cli.hpp"
#include "remmatch/connectivity.hpp"
#include "remmatch/enumerate.hpp"
#include "remmatch/error.hpp"
#include "remmatch/families.hpp"
#include "remmatch/finders.hpp"
#include "remmatch/matching.hpp"
#include "remmatch/oracle.hpp"
#include "remmatch/structure.hpp"
#include "remmatch/verify.hpp"

using namespace remmatch;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (ok) detail << why;
    ok = false;
  }
};

int g_jobs = 1;
std::uint64_t g_rechecked = 0;
std::uint64_t g_recheck_failures = 0;

const std::vector<Graph>& up_to(int n) {
  static std::map<int, std::vector<Graph>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerate_connected_range(1, n)).first;
  return it->second;
}

std::set<std::uint64_t> codes_of(const std::vector<ExceptionRecord>& records) {
  std::set<std::uint64_t> out;
  for (const auto& e : records) out.insert(canonical_code(parse_graph6(e.graph6)));
  return out;
}

TheoremParams params(int k, int n_min, int n_max, std::optional<int> delta = std::nullopt) {
  TheoremParams p;
  p.k = k;
  p.n_min = n_min;
  p.n_max = n_max;
  p.delta = delta;
  p.jobs = g_jobs;
  return p;
}

VerificationReport run_suite(const std::string& id, const TheoremParams& p, Outcome& o) {
  const auto r = verify_theorem(id, p, up_to(p.n_max));
  g_rechecked += r.matchings_rechecked;
  g_recheck_failures += r.recheck_failures;
  std::ostringstream tag;
  tag << id << " k=" << p.k;
  if (!r.arithmetic_holds()) o.fail(tag.str() + ": report arithmetic broken");
  if (!r.counterexamples.empty()) o.fail(tag.str() + ": counterexample " + r.counterexamples.front());
  if (!r.finder_failures.empty()) o.fail(tag.str() + ": finder failure " + r.finder_failures.front().graph6);
  if (!r.undecided.empty()) o.fail(tag.str() + ": undecided " + r.undecided.front());
  if (r.graphs_checked == 0) o.fail(tag.str() + ": no graph met the hypotheses");
  return r;
}

void expect_exceptions(const VerificationReport& r, const std::vector<Graph>& expected, Outcome& o) {
  std::set<std::uint64_t> want;
  for (const Graph& g : expected) want.insert(canonical_code(g));
  if (codes_of(r.exception_instances) != want || r.exceptions_matched != expected.size()) {
    std::ostringstream s;
    s << r.theorem_id << " k=" << r.k << ": " << r.exceptions_matched << " exceptions, expected "
      << expected.size();
    o.fail(s.str());
  }
}

std::vector<Graph> cycles(int from, int to) {
  std::vector<Graph> out;
  for (int n = from; n <= to; ++n) out.push_back(families::cycle(n));
  return out;
}

Outcome connectivity_equivalence() {
  Outcome o;
  std::size_t count = 0;
  for (const Graph& g : up_to(7)) {
    ++count;
    if (vertex_connectivity(g) != brute_force_vertex_connectivity(g)) o.fail("mismatch on " + write_graph6(g));
  }
  o.detail << (o.ok ? "" : "; ") << count << " graphs";
  return o;
}

Outcome oracle_double_implementation() {
  Outcome o;
  std::size_t compared = 0;
  for (const Graph& g : up_to(6))
    for (int k = 1; k <= 3; ++k) {
      if (!k_connected(g, k)) continue;
      ++compared;
      const OracleResult r = max_removable_matching(g, k);
      if (!r.exhaustive || r.r != oracle::max_removable_matching(g, k))
        o.fail("k=" + std::to_string(k) + " on " + write_graph6(g));
    }
  o.detail << (o.ok ? "" : "; ") << compared << " (graph, k) pairs";
  return o;
}

Outcome exceptional_values() {
  Outcome o;
  auto expect_r = [&](const Graph& g, int k, int want, const std::string& name) {
    const OracleResult r = max_removable_matching(g, k);
    if (!r.exhaustive || r.r != want)
      o.fail(name + ": r_" + std::to_string(k) + " = " + std::to_string(r.r) + ", expected " + std::to_string(want));
  };
  for (int n = 3; n <= 9; ++n) expect_r(families::cycle(n), 1, 1, "C" + std::to_string(n));
  expect_r(families::complete(5), 2, 2, "K5");
  expect_r(families::complete(7), 3, 3, "K7");
  if (max_matching_size(families::complete_bipartite(3, 5)) != 3) o.fail("alpha'(K_{3,5}) != 3");
  if (max_matching_size(families::complete_bipartite(4, 5)) != 4) o.fail("alpha'(K_{4,5}) != 4");
  if (o.ok) o.detail << "cycles C3..C9, K5, K7, K_{3,5}, K_{4,5}";
  return o;
}

Outcome theorem_suites() {
  Outcome o;
  const std::vector<Graph> none;
  for (int k = 1; k <= 3; ++k) run_suite("halin", params(k, 1, 8), o);
  for (int k = 1; k <= 2; ++k) {
    const auto r = run_suite("ckl", params(k, 1, 8), o);
    expect_exceptions(r, none, o);
  }
  expect_exceptions(run_suite("two-matching", params(1, 1, 8), o), cycles(3, 8), o);
  expect_exceptions(run_suite("two-matching", params(2, 1, 8), o), none, o);
  expect_exceptions(run_suite("two-matching", params(3, 1, 8), o), none, o);

  std::vector<Graph> half1 = cycles(3, 8);
  half1.push_back(families::complete(5));
  half1.push_back(families::complete(7));
  expect_exceptions(run_suite("half-delta", params(1, 1, 8), o), half1, o);
  expect_exceptions(run_suite("half-delta", params(2, 1, 8), o),
                    {families::complete(5), families::complete(7)}, o);
  expect_exceptions(run_suite("half-delta", params(3, 1, 8), o), {families::complete(7)}, o);

  expect_exceptions(run_suite("one-delta", params(1, 6, 8, 3), o), none, o);
  expect_exceptions(run_suite("half-n-min", params(1, 1, 8), o), none, o);
  expect_exceptions(run_suite("two-near-delta", params(2, 6, 8, 5), o), none, o);
  if (o.ok) o.detail << "10 suites over n <= 8";
  return o;
}

Outcome mader_audit() {
  Outcome o;
  std::uint64_t checked = 0;
  for (int k = 2; k <= 3; ++k) {
    const auto r = run_suite("mader-audit", params(k, 1, 7), o);
    checked += r.graphs_checked;
  }
  o.detail << (o.ok ? "" : "; ") << checked << " cores audited";
  return o;
}

Outcome f_table() {
  Outcome o;
  auto check = [&](const EmpiricalFTable& t, int lo, int hi) {
    std::ostringstream tag;
    tag << "f(" << t.k << "," << t.delta << ")";
    if (!t.lower_observed) return o.fail(tag.str() + ": no value");
    if (*t.lower_observed < lo || *t.lower_observed > hi)
      o.fail(tag.str() + " = " + std::to_string(*t.lower_observed));
    if (!t.undecided.empty()) o.fail(tag.str() + ": undecided " + t.undecided.front());
    if (!t.consistent()) o.fail(tag.str() + ": outside the stated bounds");
    o.detail << tag.str() << "=" << *t.lower_observed << " ";
  };
  check(empirical_f(1, 2, 8, up_to(8), SearchBudget{}, g_jobs), 1, 1);
  check(empirical_f(1, 3, 8, up_to(8), SearchBudget{}, g_jobs), 3, 3);
  const auto t23 = empirical_f(2, 3, 8, up_to(8), SearchBudget{}, g_jobs);
  check(t23, 2, 2);
  bool wheel = false;
  for (const auto& w : t23.witnesses) {
    const Graph g = parse_graph6(w);
    wheel = wheel || canonical_code(g) == canonical_code(families::wheel(g.n() - 1));
  }
  if (!wheel) o.fail("no wheel among the f(2,3) witnesses");

  std::ifstream corpus(std::string(REMMATCH_TEST_DATA) + "/n10_mindeg5.g6");
  if (!corpus) {
    o.fail("corpus missing");
    return o;
  }
  check(empirical_f(2, 5, 10, ingest_graph6_stream(corpus), SearchBudget{}, g_jobs), 2, 5);
  return o;
}

// Runs every finder whose hypotheses the graph meets and compares each
// returned matching with the oracle.
Outcome finder_certification() {
  Outcome o;
  if (g_recheck_failures != 0) o.fail(std::to_string(g_recheck_failures) + " suite matchings failed the recheck");
  if (g_rechecked == 0) o.fail("suites returned no matchings to recheck");

  const auto& pool = up_to(8);
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  using Finder = std::function<FinderOutcome(const Graph&, int)>;
  const std::vector<Finder> finders = {
      [](const Graph& g, int k) { return find_removable_2matching(g, k); },
      [](const Graph& g, int k) { return find_half_delta_matching(g, k); },
      [](const Graph& g, int k) { return find_matching_high_k(g, k); },
      [](const Graph& g, int) { return find_one_removable_delta(g, min_degree(g)); },
      [](const Graph& g, int) { return find_one_removable_minhalf(g); },
      [](const Graph& g, int) { return find_two_removable_near_delta(g); },
  };
  // k used for the certificate of each finder above; 0 means "the sampled k".
  const std::vector<int> certified_k = {0, 0, 0, 1, 1, 2};

  int sampled = 0, matchings = 0;
  while (sampled < 200) {
    const Graph& g = pool[pick(rng)];
    const int kappa = vertex_connectivity(g);
    if (kappa < 1 || g.m() == 0) continue;
    ++sampled;
    const int k = 1 + static_cast<int>(rng() % std::min(kappa, 3));
    for (std::size_t f = 0; f < finders.size(); ++f) {
      FinderOutcome out;
      try {
        out = finders[f](g, k);
      } catch (const Error&) {
        continue;  // hypotheses not met
      }
      if (!out.has_matching()) continue;
      ++matchings;
      const int ck = certified_k[f] ? certified_k[f] : k;
      const auto edges = out.matching.edges();
      const Graph rest = delete_edges(g, out.matching);
      if (!separator_scan_k_connected(rest, ck) || !oracle::k_connected(rest, ck))
        o.fail("uncertified matching on " + write_graph6(g));
      const OracleResult r = max_removable_matching(g, ck);
      if (static_cast<int>(edges.size()) > r.r) o.fail("finder beat the oracle on " + write_graph6(g));
    }
  }
  o.detail << (o.ok ? "" : "; ") << g_rechecked << " suite matchings, " << sampled << " sampled graphs, "
           << matchings << " sample matchings";
  return o;
}

Outcome hunts() {
  Outcome o;
  const auto quiet = hunt_conjecture("con:half-n-min", params(1, 1, 8), up_to(8));
  if (!quiet.arithmetic_holds()) o.fail("con:half-n-min arithmetic broken");
  if (!quiet.counterexamples.empty()) o.fail("con:half-n-min counterexample " + quiet.counterexamples.front());
  if (!quiet.finder_failures.empty() || !quiet.undecided.empty()) o.fail("con:half-n-min not fully decided");

  const auto start = std::chrono::steady_clock::now();
  const auto open = hunt_conjecture("con:matching", params(3, 1, 8, 4), up_to(8));
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!open.arithmetic_holds()) o.fail("con:matching arithmetic broken");
  for (const auto& c : open.counterexample_details)
    if (!c.oracle_r || *c.oracle_r >= c.target) o.fail("flagged graph not revalidated: " + c.graph6);

  // The CLI must map the same runs to the documented exit codes.
  auto exit_of = [](std::vector<std::string> args) {
    std::istringstream in;
    std::ostringstream out, err;
    return run_cli(args, in, out, err);
  };
  const int quiet_code = exit_of({"hunt", "--conjecture", "con:half-n-min", "--k", "1", "--n", "8", "--no-timing"});
  if (quiet_code != kExitOk) o.fail("con:half-n-min exit " + std::to_string(quiet_code));
  const int open_code =
      exit_of({"hunt", "--conjecture", "con:matching", "--k", "3", "--delta", "4", "--n", "8", "--no-timing"});
  const int want = !open.counterexamples.empty() || !open.finder_failures.empty() ? kExitCandidate
                   : !open.undecided.empty()                                      ? kExitBudget
                                                                                  : kExitOk;
  if (open_code != want) o.fail("con:matching exit " + std::to_string(open_code));

  o.detail << (o.ok ? "" : "; ") << "con:half-n-min checked " << quiet.graphs_checked << ", con:matching k=3 d=4 checked "
           << open.graphs_checked << " flagged " << open.counterexamples.size() << " in " << seconds << " s";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance gate"};
  app.add_option("--jobs", g_jobs, "worker threads")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"connectivity oracle equivalence (n <= 7)", connectivity_equivalence},
      {"oracle double implementation (n <= 6, k = 1..3)", oracle_double_implementation},
      {"exceptional values", exceptional_values},
      {"theorem suites (n <= 8)", theorem_suites},
      {"structural audit of minimally k-connected cores (n <= 7)", mader_audit},
      {"empirical f table", f_table},
      {"finder certification", finder_certification},
      {"hunt termination and exit codes", hunts},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("threw: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.ok) ++failures;
    std::cout << (o.ok ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << " (" << o.detail.str()
              << ", " << secs << " s)" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
