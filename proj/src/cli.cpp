#include "remmatch/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "remmatch/connectivity.hpp"
#include "remmatch/enumerate.hpp"
#include "remmatch/error.hpp"
#include "remmatch/finders.hpp"
#include "remmatch/oracle.hpp"
#include "remmatch/structure.hpp"
#include "remmatch/verify.hpp"

namespace remmatch {
namespace {

using nlohmann::ordered_json;

struct Options {
  std::vector<std::string> graphs;
  std::string input;
  bool lenient = false;
  bool no_timing = false;
  int k = 1;
  std::optional<int> delta;
  std::optional<int> size;
  int n_min = 1;
  std::optional<int> n_max;
  int jobs = 1;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> node_limit;
  std::optional<std::int64_t> time_limit_ms;
  int max_order = kOracleDefaultMaxOrder;
  std::string policy;
  std::string theorem;
  std::string conjecture;
  std::string side_file;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedGraph6:
    case ErrorCode::UnknownTheorem:
    case ErrorCode::UnknownConjecture:
    case ErrorCode::InvalidArgument:
      return kExitUsage;
    default:
      return kExitPrecondition;
  }
}

void write_error(std::ostream& err, const std::string& code, const std::string& message, int exit_code) {
  ordered_json doc;
  doc["command"] = "error";
  doc["error"] = code;
  doc["message"] = message;
  doc["exit_code"] = exit_code;
  err << doc.dump() << '\n';
}

ordered_json edge_list(const std::vector<Edge>& edges) {
  ordered_json out = ordered_json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

template <typename T>
ordered_json optional_value(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

SearchBudget budget_of(const Options& o) {
  SearchBudget b = SearchBudget::from_env();
  if (o.node_limit) b.node_limit = *o.node_limit;
  if (o.time_limit_ms) b.time_limit = std::chrono::milliseconds(*o.time_limit_ms);
  return b;
}

std::vector<Graph> read_graphs(const Options& o, std::istream& in, bool stdin_fallback) {
  std::vector<Graph> out;
  for (const auto& word : o.graphs) out.push_back(parse_graph6(word));
  auto ingest = [&](std::istream& s) {
    auto part = ingest_graph6_stream(s, !o.lenient);
    out.insert(out.end(), part.begin(), part.end());
  };
  if (o.input == "-") {
    ingest(in);
  } else if (!o.input.empty()) {
    std::ifstream file(o.input);
    if (!file) throw Error(ErrorCode::InvalidArgument, "cannot open " + o.input);
    ingest(file);
  } else if (out.empty() && stdin_fallback) {
    ingest(in);
  }
  return out;
}

bool ingesting(const Options& o) { return !o.input.empty() || !o.graphs.empty(); }

// Enumeration defaults to n <= 7; ingested families are unbounded unless
// --n is given.
int n_max_of(const Options& o) {
  return o.n_max.value_or(ingesting(o) ? kMaxVertices : 7);
}

// Family source for verify, hunt and fkd: ingested graphs when an input is
// named, otherwise the built-in enumeration.
std::vector<Graph> family_source(const Options& o, std::istream& in, int n_max) {
  if (ingesting(o)) return read_graphs(o, in, false);
  return enumerate_connected_range(o.n_min, n_max);
}

int cmd_analyze(const Options& o, std::istream& in, std::ostream& out) {
  ordered_json doc;
  doc["command"] = "analyze";
  doc["graphs"] = ordered_json::array();
  for (const Graph& g : read_graphs(o, in, true)) {
    ordered_json rec;
    rec["graph6"] = write_graph6(g);
    rec["n"] = g.n();
    rec["m"] = g.m();
    rec["delta"] = g.n() > 0 ? ordered_json(min_degree(g)) : ordered_json(nullptr);
    rec["kappa"] = g.n() > 0 ? ordered_json(vertex_connectivity(g)) : ordered_json(nullptr);
    rec["exception_class"] = classify_exception(g).name();
    doc["graphs"].push_back(rec);
  }
  out << doc.dump() << '\n';
  return kExitOk;
}

FinderOutcome dispatch_find(const Options& o, const Graph& g, const SearchBudget& budget) {
  const std::string& p = o.policy;
  if (p == "two") return find_removable_2matching(g, o.k, budget);
  if (p == "half-delta") return find_half_delta_matching(g, o.k, budget);
  if (p == "high-k") return find_matching_high_k(g, o.k, budget);
  if (p == "one-delta") return find_one_removable_delta(g, o.delta.value_or(min_degree(g)), budget);
  if (p == "half-n-min") return find_one_removable_minhalf(g, budget);
  if (p == "two-near-delta") return find_two_removable_near_delta(g, o.delta, budget);
  if (!o.size) throw Error(ErrorCode::InvalidArgument, "policy 'exact' needs --size");
  return bounded_exact_search(g, o.k, *o.size, budget);
}

// The connectivity the policy certifies, which is not always --k.
int certified_k(const Options& o) {
  if (o.policy == "one-delta" || o.policy == "half-n-min") return 1;
  if (o.policy == "two-near-delta") return 2;
  return o.k;
}

int cmd_find(const Options& o, std::istream& in, std::ostream& out) {
  const SearchBudget budget = budget_of(o);
  int code = kExitOk;
  for (const Graph& g : read_graphs(o, in, true)) {
    const FinderOutcome r = dispatch_find(o, g, budget);
    const int k = certified_k(o);
    ordered_json doc;
    doc["command"] = "find";
    doc["graph6"] = write_graph6(g);
    doc["k"] = k;
    doc["policy"] = o.policy;
    doc["status"] = to_string(r.status);
    doc["requested_size"] = r.requested_size;
    doc["route"] = r.route;
    doc["search_nodes"] = r.search_nodes;
    if (r.status == FinderOutcome::Status::Exception) {
      doc["exception"] = r.exception.name();
    } else {
      doc["exception"] = nullptr;
    }
    if (r.has_matching()) {
      doc["size"] = r.matching.size();
      doc["matching"] = edge_list(r.matching.edges());
      const auto cert = is_k_connected(delete_edges(g, r.matching), k);
      doc["certificate"] = {{"verdict", cert.connected() ? "connected" : "separating_set"},
                            {"k_tested", cert.k_tested}};
    } else {
      doc["size"] = 0;
      doc["matching"] = ordered_json::array();
      doc["certificate"] = nullptr;
    }
    out << doc.dump() << '\n';
    if (r.status == FinderOutcome::Status::NotFound) code = std::max<int>(code, kExitCandidate);
    if (r.status == FinderOutcome::Status::BudgetExhausted) code = std::max<int>(code, kExitBudget);
  }
  return code;
}

int cmd_oracle(const Options& o, std::istream& in, std::ostream& out) {
  const SearchBudget budget = budget_of(o);
  int code = kExitOk;
  for (const Graph& g : read_graphs(o, in, true)) {
    const OracleResult r = max_removable_matching(g, o.k, budget, o.max_order);
    ordered_json doc;
    doc["command"] = "oracle";
    doc["graph6"] = write_graph6(g);
    doc["k"] = o.k;
    doc["r"] = r.r;
    doc["exhaustive"] = r.exhaustive;
    doc["witness"] = edge_list(r.witness.edges());
    doc["nodes"] = r.nodes;
    out << doc.dump() << '\n';
    if (!r.exhaustive) code = kExitBudget;
  }
  return code;
}

ordered_json record_json(const CounterexampleRecord& r) {
  ordered_json j;
  j["graph6"] = r.graph6;
  j["target"] = r.target;
  j["oracle_r"] = optional_value(r.oracle_r);
  j["note"] = r.note;
  return j;
}

ordered_json report_json(const std::string& command, const VerificationReport& r, bool timing) {
  ordered_json doc;
  doc["command"] = command;
  doc["theorem_id"] = r.theorem_id;
  doc["conjecture"] = r.conjecture;
  doc["k"] = r.k;
  doc["delta"] = optional_value(r.delta);
  doc["n_range"] = {r.n_min, r.n_max};
  doc["graphs_considered"] = r.graphs_considered;
  doc["graphs_checked"] = r.graphs_checked;
  doc["passes"] = r.passes;
  doc["exceptions_matched"] = r.exceptions_matched;
  doc["counterexamples"] = r.counterexamples;
  doc["counterexample_details"] = ordered_json::array();
  for (const auto& c : r.counterexample_details) doc["counterexample_details"].push_back(record_json(c));
  doc["exception_instances"] = ordered_json::array();
  for (const auto& e : r.exception_instances)
    doc["exception_instances"].push_back({{"graph6", e.graph6}, {"family", e.family}});
  doc["undecided"] = r.undecided;
  doc["finder_failures"] = ordered_json::array();
  for (const auto& f : r.finder_failures) doc["finder_failures"].push_back(record_json(f));
  doc["matchings_rechecked"] = r.matchings_rechecked;
  doc["recheck_failures"] = r.recheck_failures;
  doc["arithmetic_holds"] = r.arithmetic_holds();
  if (timing) doc["wall_time_ms"] = r.wall_time_ms;
  return doc;
}

void write_side_file(const std::string& path, const std::vector<std::string>& words) {
  if (path.empty()) return;
  std::ofstream file(path);
  if (!file) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  for (const auto& w : words) file << w << '\n';
}

TheoremParams params_of(const Options& o) {
  TheoremParams p;
  p.k = o.k;
  p.delta = o.delta;
  p.n_min = o.n_min;
  p.n_max = n_max_of(o);
  p.jobs = o.jobs;
  p.seed = o.seed;
  p.budget = budget_of(o);
  return p;
}

int report_exit(const VerificationReport& r) {
  if (!r.counterexamples.empty() || !r.finder_failures.empty()) return kExitCandidate;
  if (!r.undecided.empty()) return kExitBudget;
  return kExitOk;
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out, bool hunt) {
  const TheoremParams p = params_of(o);
  const std::vector<Graph> source = family_source(o, in, n_max_of(o));
  const VerificationReport r =
      hunt ? hunt_conjecture(o.conjecture, p, source) : verify_theorem(o.theorem, p, source);
  std::vector<std::string> side = r.counterexamples;
  for (const auto& f : r.finder_failures) side.push_back(f.graph6);
  write_side_file(o.side_file, side);
  out << report_json(hunt ? "hunt" : "verify", r, !o.no_timing).dump() << '\n';
  return report_exit(r);
}

int cmd_fkd(const Options& o, std::istream& in, std::ostream& out) {
  if (!o.delta) throw Error(ErrorCode::InvalidArgument, "fkd needs --delta");
  const int n_max = n_max_of(o);
  Options family = o;
  family.n_min = 2 * *o.delta;
  const std::vector<Graph> source =
      family_source(family, in, ingesting(o) ? n_max : std::min(n_max, kMaxEnumerationOrder));
  const EmpiricalFTable t = empirical_f(o.k, *o.delta, n_max, source, budget_of(o), o.jobs);
  write_side_file(o.side_file, t.witnesses);
  ordered_json doc;
  doc["command"] = "fkd";
  doc["k"] = t.k;
  doc["delta"] = t.delta;
  doc["n_range"] = {t.n_min, t.n_max};
  doc["graphs_checked"] = t.graphs_checked;
  doc["lower_observed"] = optional_value(t.lower_observed);
  doc["witnesses"] = t.witnesses;
  doc["paper_bounds"] = {{"lower", optional_value(t.paper_bounds.lower)},
                         {"upper", t.paper_bounds.upper},
                         {"clauses", t.paper_bounds.clauses}};
  doc["consistent"] = t.consistent();
  doc["undecided"] = t.undecided;
  if (!o.no_timing) doc["wall_time_ms"] = t.wall_time_ms;
  out << doc.dump() << '\n';
  if (!t.consistent()) return kExitCandidate;
  return t.undecided.empty() ? kExitOk : kExitBudget;
}

void add_input_options(CLI::App* cmd, Options& o) {
  cmd->add_option("-g,--graph", o.graphs, "graph6 word (repeatable)");
  cmd->add_option("-i,--input", o.input, "graph6 file, one word per line; '-' reads stdin");
  cmd->add_flag("--lenient", o.lenient, "skip malformed lines instead of aborting");
}

void add_budget_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--node-limit", o.node_limit, "search node budget (env REMMATCH_NODE_LIMIT)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--time-limit-ms", o.time_limit_ms, "search time budget (env REMMATCH_TIME_LIMIT_MS)")
      ->check(CLI::PositiveNumber);
}

void add_family_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--k", o.k, "connectivity k")->check(CLI::PositiveNumber);
  cmd->add_option("--delta", o.delta, "minimum degree filter / degree parameter")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--n,--n-max", o.n_max, "largest order")->check(CLI::PositiveNumber);
  cmd->add_option("--n-min", o.n_min, "smallest order")->check(CLI::PositiveNumber);
  cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", o.seed, "shuffle seed for the minimally-k-connected reduction");
  cmd->add_option("--side-file", o.side_file, "write flagged graph6 words here");
  cmd->add_flag("--no-timing", o.no_timing, "omit wall_time_ms");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Removable matchings in k-connected graphs", "remmatch"};
  app.require_subcommand(1);
  Options o;

  auto* analyze = app.add_subcommand("analyze", "n, m, delta, kappa and family of each graph");
  add_input_options(analyze, o);

  auto* find = app.add_subcommand("find", "run a matching finder");
  add_input_options(find, o);
  add_budget_options(find, o);
  find->add_option("--k", o.k, "connectivity k")->check(CLI::PositiveNumber);
  find->add_option("--delta", o.delta, "degree parameter for one-delta / two-near-delta")
      ->check(CLI::PositiveNumber);
  find->add_option("--size", o.size, "matching size for the exact policy")->check(CLI::PositiveNumber);
  find->add_option("--policy", o.policy, "size policy")
      ->required()
      ->check(CLI::IsMember({"two", "half-delta", "high-k", "one-delta", "half-n-min", "two-near-delta",
                             "exact"}));

  auto* oracle = app.add_subcommand("oracle", "largest k-removable matching by exhaustive search");
  add_input_options(oracle, o);
  add_budget_options(oracle, o);
  oracle->add_option("--k", o.k, "connectivity k")->required()->check(CLI::PositiveNumber);
  oracle->add_option("--max-order", o.max_order, "refuse larger graphs")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "check a theorem over a graph family");
  add_input_options(verify, o);
  add_budget_options(verify, o);
  add_family_options(verify, o);
  verify->add_option("--theorem", o.theorem, "theorem id")->required();

  auto* hunt = app.add_subcommand("hunt", "search for counterexamples to an open statement");
  add_input_options(hunt, o);
  add_budget_options(hunt, o);
  add_family_options(hunt, o);
  hunt->add_option("--conjecture", o.conjecture, "conjecture id")->required();

  auto* fkd = app.add_subcommand("fkd", "empirical f(k, delta) table row");
  add_input_options(fkd, o);
  add_budget_options(fkd, o);
  add_family_options(fkd, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    write_error(err, "UsageError", e.what(), kExitUsage);
    return kExitUsage;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(o, in, out);
    if (find->parsed()) return cmd_find(o, in, out);
    if (oracle->parsed()) return cmd_oracle(o, in, out);
    if (verify->parsed()) return cmd_verify(o, in, out, false);
    if (hunt->parsed()) return cmd_verify(o, in, out, true);
    if (fkd->parsed()) return cmd_fkd(o, in, out);
  } catch (const Error& e) {
    const int code = exit_code_for(e.code());
    write_error(err, std::string(to_string(e.code())), e.what(), code);
    return code;
  } catch (const std::exception& e) {
    write_error(err, "InternalError", e.what(), kExitPrecondition);
    return kExitPrecondition;
  }
  return kExitUsage;
}

}  // namespace remmatch
