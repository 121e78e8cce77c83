#include "remmatch/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <thread>

#include "remmatch/connectivity.hpp"
#include "remmatch/error.hpp"
#include "remmatch/finders.hpp"
#include "remmatch/oracle.hpp"
#include "remmatch/structure.hpp"

namespace remmatch {

std::string to_string(GraphVerdict::Kind kind) {
  switch (kind) {
    case GraphVerdict::Kind::Skipped: return "skipped";
    case GraphVerdict::Kind::Pass: return "pass";
    case GraphVerdict::Kind::Exception: return "exception";
    case GraphVerdict::Kind::Counterexample: return "counterexample";
    case GraphVerdict::Kind::FinderFailure: return "finder_failure";
    case GraphVerdict::Kind::Undecided: return "undecided";
  }
  return "unknown";
}

bool separator_scan_k_connected(const Graph& g, int k) {
  const int n = g.n();
  if (n < k + 1) return false;
  if (!is_connected(g)) return false;
  // Every subset of fewer than k vertices, smallest first.
  const Mask all = g.vertex_mask();
  std::function<bool(int, int, Mask)> scan = [&](int from, int left, Mask removed) {
    if (!is_connected_within(g, all & ~removed)) return false;
    if (left == 0) return true;
    for (int v = from; v < n; ++v)
      if (!scan(v + 1, left - 1, removed | bit(v))) return false;
    return true;
  };
  return scan(0, k - 1, 0);
}

namespace {

using Kind = GraphVerdict::Kind;

struct Suite {
  std::string summary;
  std::function<bool(const Graph&, const TheoremParams&)> applies;
  std::function<GraphVerdict(const Graph&, const TheoremParams&)> run;
};

GraphVerdict verdict(Kind kind, int target, std::string note = {}) {
  GraphVerdict v;
  v.kind = kind;
  v.target = target;
  v.note = std::move(note);
  return v;
}

// A NotFound from a finder is only reported after the exhaustive oracle
// agrees that no matching of the target size exists.
GraphVerdict revalidate(const Graph& g, int k, int target, const TheoremParams& p, std::string route) {
  GraphVerdict v = verdict(Kind::Undecided, target);
  v.route = std::move(route);
  const OracleResult o = max_removable_matching(g, k, p.budget, 64);
  v.oracle_r = o.r;
  v.oracle_exhaustive = o.exhaustive;
  if (o.r >= target) {
    v.kind = Kind::FinderFailure;
    v.note = "oracle found a removable matching of size " + std::to_string(o.r);
    v.matching = o.witness.edges();
  } else if (o.exhaustive) {
    v.kind = Kind::Counterexample;
    v.note = "largest removable matching has " + std::to_string(o.r) + " edges";
  } else {
    v.note = "oracle budget exhausted at r >= " + std::to_string(o.r);
  }
  return v;
}

GraphVerdict from_outcome(const Graph& g, int k, const FinderOutcome& out, bool exception_expected,
                          const TheoremParams& p) {
  const int target = out.requested_size;
  switch (out.status) {
    case FinderOutcome::Status::Matching: {
      GraphVerdict v = verdict(Kind::Pass, target);
      v.route = out.route;
      v.matching = out.matching.edges();
      v.found = static_cast<int>(v.matching.size());
      v.note = "rechecked";
      if (v.found != target || !is_matching_set(g, v.matching) ||
          !separator_scan_k_connected(without_edges(g, v.matching), k)) {
        v.kind = Kind::FinderFailure;
        v.note = "rechecked: returned matching is not k-removable";
      }
      return v;
    }
    case FinderOutcome::Status::Exception: {
      GraphVerdict v = verdict(exception_expected ? Kind::Exception : Kind::FinderFailure, target);
      v.exception = out.exception.name();
      v.route = out.route;
      if (!exception_expected) v.note = "exception reported outside the stated clause";
      return v;
    }
    case FinderOutcome::Status::NotFound:
      return revalidate(g, k, target, p, out.route);
    case FinderOutcome::Status::BudgetExhausted:
      break;
  }
  GraphVerdict v = verdict(Kind::Undecided, target, "finder budget exhausted");
  v.route = out.route;
  return v;
}

// Wraps a finder call so a precondition error on a graph that passed the
// hypothesis filter is recorded instead of aborting the run.
GraphVerdict guarded(int target, const std::function<GraphVerdict()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    return verdict(Kind::FinderFailure, target, std::string("finder raised ") + e.what());
  }
}

bool half_delta_exception(const Graph& g, int k) {
  const int d = min_degree(g);
  if (k == 1 && d == 2 && is_cycle_graph(g)) return true;
  return d % 2 == 0 && d >= 4 && is_complete_graph(g) && g.n() == d + 1;
}

int near_delta_target(int d) { return d % 2 == 0 ? d - 2 : d - 3; }

int half_n_min_target(const Graph& g) { return std::min(g.n() / 2, min_degree(g)); }

bool degree_filter(const Graph& g, const TheoremParams& p) {
  return !p.delta || min_degree(g) >= *p.delta;
}

// Unique vertex of smallest degree whose runner-up degree is above 2.
std::optional<int> lone_low_vertex(const Graph& g) {
  if (g.n() < 3) return std::nullopt;
  std::vector<std::pair<int, int>> by_degree;
  for (int v = 0; v < g.n(); ++v) by_degree.emplace_back(g.degree(v), v);
  std::sort(by_degree.begin(), by_degree.end());
  if (by_degree[0].first < by_degree[1].first && by_degree[1].first >= 3) return by_degree[0].second;
  return std::nullopt;
}

bool brute_minimally_k_connected(const Graph& g, int k) {
  if (!separator_scan_k_connected(g, k)) return false;
  for (const Edge& e : g.edges()) {
    const Edge one[] = {e};
    if (separator_scan_k_connected(without_edges(g, one), k)) return false;
  }
  return true;
}

const std::map<std::string, Suite>& theorem_suites() {
  static const std::map<std::string, Suite> suites = [] {
    std::map<std::string, Suite> s;

    s["halin"] = {
        "k-connected, min degree >= k+1: some edge is k-removable",
        [](const Graph& g, const TheoremParams& p) {
          return min_degree(g) >= p.k + 1 && k_connected(g, p.k);
        },
        [](const Graph& g, const TheoremParams& p) {
          return guarded(1, [&] {
            if (auto e = find_removable_edge(g, p.k)) {
              const Edge one[] = {*e};
              GraphVerdict v = verdict(Kind::Pass, 1, "rechecked");
              v.found = 1;
              v.matching = {*e};
              v.route = "edge-scan";
              if (!separator_scan_k_connected(without_edges(g, one), p.k)) {
                v.kind = Kind::FinderFailure;
                v.note = "rechecked: edge is not removable";
              }
              return v;
            }
            for (const Edge& e : g.edges()) {
              const Edge one[] = {e};
              if (separator_scan_k_connected(without_edges(g, one), p.k))
                return verdict(Kind::FinderFailure, 1, "separator scan found a removable edge");
            }
            return verdict(Kind::Counterexample, 1, "no edge is k-removable");
          });
        }};

    s["ckl"] = {
        "k-connected, min degree >= floor(3k/2): some vertex is k-removable",
        [](const Graph& g, const TheoremParams& p) {
          return g.n() >= p.k + 2 && min_degree(g) >= (3 * p.k) / 2 && k_connected(g, p.k);
        },
        [](const Graph& g, const TheoremParams& p) {
          return guarded(0, [&] {
            auto without = [&](int v) { return induced_mask(g, g.vertex_mask() & ~bit(v)).graph; };
            if (auto x = find_removable_vertex(g, p.k)) {
              GraphVerdict v = verdict(Kind::Pass, 0, "rechecked");
              v.route = "vertex-scan";
              v.found = *x;
              if (!separator_scan_k_connected(without(*x), p.k)) {
                v.kind = Kind::FinderFailure;
                v.note = "rechecked: vertex is not removable";
              }
              return v;
            }
            for (int x = 0; x < g.n(); ++x)
              if (separator_scan_k_connected(without(x), p.k))
                return verdict(Kind::FinderFailure, 0, "separator scan found a removable vertex");
            return verdict(Kind::Counterexample, 0, "no vertex is k-removable");
          });
        }};

    s["two-matching"] = {
        "k-connected, min degree >= k+1: a k-removable 2-matching unless k = 1 and G is a cycle",
        [](const Graph& g, const TheoremParams& p) {
          return min_degree(g) >= p.k + 1 && k_connected(g, p.k);
        },
        [](const Graph& g, const TheoremParams& p) {
          return guarded(2, [&] {
            const bool expected = p.k == 1 && is_cycle_graph(g);
            return from_outcome(g, p.k, find_removable_2matching(g, p.k, p.budget), expected, p);
          });
        }};

    s["half-delta"] = {
        "k in {1,2,3}: a k-removable ceil((delta+1)/2)-matching, with the cycle and K_{delta+1} exceptions",
        [](const Graph& g, const TheoremParams& p) {
          if (p.k < 1 || p.k > 3) return false;
          const int d = min_degree(g);
          if (d < (p.k == 3 ? 5 : p.k + 1)) return false;
          return k_connected(g, p.k);
        },
        [](const Graph& g, const TheoremParams& p) {
          return guarded(half_delta_target(min_degree(g)), [&] {
            return from_outcome(g, p.k, find_half_delta_matching(g, p.k, p.budget),
                                half_delta_exception(g, p.k), p);
          });
        }};

    s["high-k"] = {
        "k >= 4, min degree >= 3k-1: a k-removable ceil((delta+1)/2)-matching unless G = K_{delta+1}, delta even",
        [](const Graph& g, const TheoremParams& p) {
          return p.k >= 4 && min_degree(g) >= 3 * p.k - 1 && k_connected(g, p.k);
        },
        [](const Graph& g, const TheoremParams& p) {
          return guarded(half_delta_target(min_degree(g)), [&] {
            const int d = min_degree(g);
            const bool expected = d % 2 == 0 && is_complete_graph(g) && g.n() == d + 1;
            return from_outcome(g, p.k, find_matching_high_k(g, p.k, p.budget), expected, p);
          });
        }};

    s["one-delta"] = {
        "connected, n >= 2 delta, min degree >= delta >= 3: a 1-removable delta-matching",
        [](const Graph& g, const TheoremParams& p) {
          const int d = p.delta.value_or(min_degree(g));
          return d >= 3 && min_degree(g) >= d && g.n() >= 2 * d && is_connected(g);
        },
        [](const Graph& g, const TheoremParams& p) {
          const int d = p.delta.value_or(min_degree(g));
          return guarded(d, [&] {
            return from_outcome(g, 1, find_one_removable_delta(g, d, p.budget), false, p);
          });
        }};

    s["half-n-min"] = {
        "connected, min degree >= 3: a 1-removable min(floor(n/2), delta)-matching",
        [](const Graph& g, const TheoremParams& p) {
          return min_degree(g) >= 3 && degree_filter(g, p) && is_connected(g);
        },
        [](const Graph& g, const TheoremParams& p) {
          return guarded(half_n_min_target(g), [&] {
            return from_outcome(g, 1, find_one_removable_minhalf(g, p.budget), false, p);
          });
        }};

    s["two-near-delta"] = {
        "2-connected, n >= 2(delta-2), min degree >= delta >= 5: a 2-removable (delta-3)-matching, "
        "(delta-2) when delta is even",
        [](const Graph& g, const TheoremParams& p) {
          const int d = p.delta.value_or(min_degree(g));
          return d >= 5 && min_degree(g) >= d && g.n() >= 2 * (d - 2) && k_connected(g, 2);
        },
        [](const Graph& g, const TheoremParams& p) {
          const int d = p.delta.value_or(min_degree(g));
          return guarded(near_delta_target(d), [&] {
            return from_outcome(g, 2, find_two_removable_near_delta(g, d, p.budget), false, p);
          });
        }};

    s["mader-audit"] = {
        "the minimally k-connected core of a k-connected graph satisfies the degree, forest, count "
        "and size clauses",
        [](const Graph& g, const TheoremParams& p) { return p.k >= 1 && k_connected(g, p.k); },
        [](const Graph& g, const TheoremParams& p) {
          const ReductionResult reduced = minimally_k_connected_reduction(g, p.k, p.seed);
          GraphVerdict v = verdict(Kind::Pass, 0);
          v.route = "reduction";
          v.found = static_cast<int>(reduced.removed.size());
          try {
            mader_property_audit(reduced.core, p.k);
          } catch (const Error& e) {
            if (!brute_minimally_k_connected(reduced.core, p.k)) {
              v.kind = Kind::FinderFailure;
              v.note = "reduction core is not minimally k-connected";
            } else {
              v.kind = Kind::Counterexample;
              v.note = std::string("audit failed: ") + e.what();
            }
          }
          return v;
        }};

    s["separating-set"] = {
        "2-connected with one vertex x of degree below all others (all >= 3): some neighbor y "
        "leaves G - {x, y} connected",
        [](const Graph& g, const TheoremParams& p) {
          return degree_filter(g, p) && lone_low_vertex(g) && k_connected(g, 2);
        },
        [](const Graph& g, const TheoremParams&) {
          return guarded(0, [&] {
            const int x = *lone_low_vertex(g);
            auto fine = [&](int y) {
              return g.adjacent(x, y) && is_connected_within(g, g.vertex_mask() & ~bit(x) & ~bit(y));
            };
            GraphVerdict v = verdict(Kind::Pass, 0, "rechecked");
            v.route = "neighbor-scan";
            if (auto y = noncut_neighbor(g, x)) {
              v.found = *y;
              if (!fine(*y)) {
                v.kind = Kind::FinderFailure;
                v.note = "rechecked: {x, y} separates";
              }
              return v;
            }
            for (int y = 0; y < g.n(); ++y)
              if (y != x && fine(y)) return verdict(Kind::FinderFailure, 0, "scan found a neighbor");
            return verdict(Kind::Counterexample, 0, "every neighbor of x pairs into a separating set");
          });
        }};
    return s;
  }();
  return suites;
}

const std::map<std::string, Suite>& conjecture_suites() {
  static const std::map<std::string, Suite> suites = [] {
    std::map<std::string, Suite> s;

    s["con:matching"] = {
        "k-connected, min degree >= k+1: a k-removable ceil((delta+1)/2)-matching unless G = "
        "K_{delta+1} with delta even",
        [](const Graph& g, const TheoremParams& p) {
          return min_degree(g) >= p.k + 1 && degree_filter(g, p) && k_connected(g, p.k);
        },
        [](const Graph& g, const TheoremParams& p) {
          const int d = min_degree(g);
          const int target = half_delta_target(d);
          return guarded(target, [&] {
            if (d % 2 == 0 && is_complete_graph(g) && g.n() == d + 1) {
              GraphVerdict v = verdict(Kind::Exception, target);
              v.exception = ExceptionClass{ExceptionClass::Tag::CompleteOfOrder, g.n(), 0}.name();
              return v;
            }
            return from_outcome(g, p.k, bounded_exact_search(g, p.k, target, p.budget), false, p);
          });
        }};

    s["con:half-n-min"] = {
        "k-connected, min degree >= k+2: a k-removable min(floor(n/2), delta)-matching",
        [](const Graph& g, const TheoremParams& p) {
          return min_degree(g) >= p.k + 2 && degree_filter(g, p) && k_connected(g, p.k);
        },
        [](const Graph& g, const TheoremParams& p) {
          return guarded(half_n_min_target(g), [&] {
            const FinderOutcome out = p.k == 1
                                          ? find_one_removable_minhalf(g, p.budget)
                                          : bounded_exact_search(g, p.k, half_n_min_target(g), p.budget);
            return from_outcome(g, p.k, out, false, p);
          });
        }};

    s["pro:matching"] = {
        "k-connected, n >= 2 delta, min degree >= delta: r_k(G) is at least the stated lower bound on "
        "f(k, delta)",
        [](const Graph& g, const TheoremParams& p) {
          const int d = p.delta.value_or(p.k + 1);
          return d > p.k && min_degree(g) >= d && g.n() >= 2 * d && k_connected(g, p.k);
        },
        [](const Graph& g, const TheoremParams& p) {
          const int d = p.delta.value_or(p.k + 1);
          const PaperBounds bounds = f_paper_bounds(p.k, d);
          const int target = bounds.lower.value_or(0);
          const OracleResult o = max_removable_matching(g, p.k, p.budget, 64);
          GraphVerdict v = verdict(Kind::Pass, target);
          v.route = "oracle";
          v.oracle_r = o.r;
          v.oracle_exhaustive = o.exhaustive;
          v.found = o.r;
          v.matching = o.witness.edges();
          if (o.r < target) {
            v.kind = o.exhaustive ? Kind::Counterexample : Kind::Undecided;
            v.note = "r = " + std::to_string(o.r) + " below the lower bound";
          }
          return v;
        }};
    return s;
  }();
  return suites;
}

template <typename Fn>
void fan_out(std::size_t count, int jobs, Fn&& work) {
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) work(i);
    });
  for (auto& t : pool) t.join();
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

VerificationReport run_suite(const std::string& id, bool conjecture, const Suite& suite,
                             const TheoremParams& p, const std::vector<Graph>& source) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.theorem_id = id;
  report.conjecture = conjecture;
  report.k = p.k;
  report.delta = p.delta;
  report.n_min = p.n_min;
  report.n_max = p.n_max;

  std::vector<const Graph*> family;
  for (const Graph& g : source)
    if (g.n() >= p.n_min && g.n() <= p.n_max) family.push_back(&g);
  report.graphs_considered = family.size();

  std::vector<GraphVerdict> verdicts(family.size());
  fan_out(family.size(), p.jobs, [&](std::size_t i) {
    const Graph& g = *family[i];
    if (suite.applies(g, p)) verdicts[i] = suite.run(g, p);
  });

  for (std::size_t i = 0; i < family.size(); ++i) {
    const GraphVerdict& v = verdicts[i];
    if (v.kind == Kind::Skipped) continue;
    const std::string word = write_graph6(*family[i]);
    if (v.note.rfind("rechecked", 0) == 0) {
      ++report.matchings_rechecked;
      if (v.kind == Kind::FinderFailure) ++report.recheck_failures;
    }
    switch (v.kind) {
      case Kind::Pass:
        ++report.graphs_checked;
        ++report.passes;
        break;
      case Kind::Exception:
        ++report.graphs_checked;
        ++report.exceptions_matched;
        report.exception_instances.push_back({word, v.exception});
        break;
      case Kind::Counterexample:
        ++report.graphs_checked;
        report.counterexamples.push_back(word);
        report.counterexample_details.push_back({word, v.target, v.oracle_r, v.note});
        break;
      case Kind::FinderFailure:
        report.finder_failures.push_back({word, v.target, v.oracle_r, v.note});
        break;
      case Kind::Undecided:
        report.undecided.push_back(word);
        break;
      case Kind::Skipped:
        break;
    }
  }
  auto by_word = [](const auto& a, const auto& b) { return a.graph6 < b.graph6; };
  std::sort(report.counterexamples.begin(), report.counterexamples.end());
  std::sort(report.counterexample_details.begin(), report.counterexample_details.end(), by_word);
  std::sort(report.exception_instances.begin(), report.exception_instances.end(), by_word);
  std::sort(report.finder_failures.begin(), report.finder_failures.end(), by_word);
  std::sort(report.undecided.begin(), report.undecided.end());
  report.wall_time_ms = elapsed_ms(start);
  return report;
}

}  // namespace

std::vector<SuiteInfo> registered_theorems() {
  std::vector<SuiteInfo> out;
  for (const auto& [id, suite] : theorem_suites()) out.push_back({id, suite.summary});
  return out;
}

std::vector<SuiteInfo> registered_conjectures() {
  std::vector<SuiteInfo> out;
  for (const auto& [id, suite] : conjecture_suites()) out.push_back({id, suite.summary});
  return out;
}

GraphVerdict check_graph(const std::string& suite_id, const Graph& g, const TheoremParams& params) {
  const Suite* suite = nullptr;
  if (auto it = theorem_suites().find(suite_id); it != theorem_suites().end()) suite = &it->second;
  if (auto it = conjecture_suites().find(suite_id); it != conjecture_suites().end()) suite = &it->second;
  if (!suite) throw Error(ErrorCode::UnknownTheorem, "unknown suite '" + suite_id + "'");
  if (!suite->applies(g, params)) return {};
  return suite->run(g, params);
}

VerificationReport verify_theorem(const std::string& theorem_id, const TheoremParams& params,
                                  const std::vector<Graph>& source) {
  const auto& suites = theorem_suites();
  auto it = suites.find(theorem_id);
  if (it == suites.end()) throw Error(ErrorCode::UnknownTheorem, "unknown theorem '" + theorem_id + "'");
  return run_suite(theorem_id, false, it->second, params, source);
}

VerificationReport hunt_conjecture(const std::string& conjecture_id, const TheoremParams& params,
                                   const std::vector<Graph>& source) {
  const auto& suites = conjecture_suites();
  auto it = suites.find(conjecture_id);
  if (it == suites.end())
    throw Error(ErrorCode::UnknownConjecture, "unknown conjecture '" + conjecture_id + "'");
  return run_suite(conjecture_id, true, it->second, params, source);
}

PaperBounds f_paper_bounds(int k, int delta) {
  if (k < 1 || delta <= k) throw Error(ErrorCode::InvalidArgument, "need delta > k >= 1");
  PaperBounds b;
  b.upper = delta;
  auto lower = [&](int value) { b.lower = b.lower ? std::max(*b.lower, value) : value; };
  auto upper = [&](int value) { b.upper = std::min(b.upper, value); };
  if (k == 1) {
    // The k = 1 clause is exact; the general half-delta clause would claim 2
    // at delta = 2, where cycles only allow 1.
    b.clauses.push_back("ii");
    lower(delta == 2 ? 1 : delta);
    upper(delta == 2 ? 1 : delta);
    return b;
  }
  if (delta >= 3 * k - 1) {
    b.clauses.push_back("i");
    lower((delta + 2) / 2);
  }
  if (k == 2) {
    b.clauses.push_back("iii");
    lower(2 * ((delta - 2) / 2));
  }
  if (delta == k + 1) {
    b.clauses.push_back("iv");
    lower(2);
    upper(k);
  }
  return b;
}

bool EmpiricalFTable::consistent() const {
  if (!lower_observed) return true;
  if (paper_bounds.lower && *lower_observed < *paper_bounds.lower) return false;
  return *lower_observed <= paper_bounds.upper;
}

EmpiricalFTable empirical_f(int k, int delta, int n_max, const std::vector<Graph>& source,
                            const SearchBudget& budget, int jobs) {
  if (k < 1 || delta <= k) throw Error(ErrorCode::InvalidArgument, "need delta > k >= 1");
  if (n_max < 2 * delta) throw Error(ErrorCode::InvalidArgument, "n_max must be at least 2 delta");
  const auto start = std::chrono::steady_clock::now();
  EmpiricalFTable table;
  table.k = k;
  table.delta = delta;
  table.n_min = 2 * delta;
  table.n_max = n_max;
  table.paper_bounds = f_paper_bounds(k, delta);

  std::vector<const Graph*> family;
  for (const Graph& g : source)
    if (g.n() >= 2 * delta && g.n() <= n_max && min_degree(g) >= delta && k_connected(g, k))
      family.push_back(&g);
  if (family.empty()) throw Error(ErrorCode::EmptyFamily, "no graph satisfies the family filter");

  std::vector<OracleResult> results(family.size());
  fan_out(family.size(), jobs, [&](std::size_t i) {
    results[i] = max_removable_matching(*family[i], k, budget, 64);
  });

  for (std::size_t i = 0; i < family.size(); ++i) {
    const std::string word = write_graph6(*family[i]);
    if (!results[i].exhaustive) {
      table.undecided.push_back(word);
      continue;
    }
    ++table.graphs_checked;
    const int r = results[i].r;
    if (!table.lower_observed || r < *table.lower_observed) {
      table.lower_observed = r;
      table.witnesses.clear();
    }
    if (r == *table.lower_observed) table.witnesses.push_back(word);
  }
  std::sort(table.witnesses.begin(), table.witnesses.end());
  std::sort(table.undecided.begin(), table.undecided.end());
  table.wall_time_ms = elapsed_ms(start);
  return table;
}

}  // namespace remmatch
