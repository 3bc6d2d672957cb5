#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "analysis.hpp"
#include "kecore/corpus.hpp"
#include "kecore/edge_list.hpp"
#include "kecore/errors.hpp"
#include "kecore/theorem_lab.hpp"

namespace kecore::cli {

using nlohmann::json;

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

struct BudgetFlags {
  Budget budget;

  void attach(CLI::App* cmd) {
    cmd->add_option("--max-enum-n", budget.max_enum_n,
                    "Largest n for MIS / maximum matching enumeration")
        ->capture_default_str();
    cmd->add_option("--max-subset-n", budget.max_subset_n,
                    "Largest n for 2^n subset sweeps")
        ->capture_default_str();
    cmd->add_option("--matching-limit", budget.matching_limit,
                    "Most maximum matchings enumerated per graph")
        ->capture_default_str();
    cmd->add_option("--max-branch-n", budget.max_branch_n,
                    "Largest general component for branch and bound")
        ->capture_default_str();
    cmd->add_option("--max-dedupe-n", budget.max_dedupe_n,
                    "Largest n for isomorphism dedupe of general graphs")
        ->capture_default_str();
  }
};

void add_format(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

std::string graph_id_for(const std::string& path) {
  return std::filesystem::path(path).filename().string();
}

// ------------------------------------------------------------- analyze

struct AnalyzeArgs {
  std::string file;
  std::string format = "text";
  BudgetFlags flags;
};

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
  const Graph g = read_edge_list_file(a.file);
  const auto report = analyze(g, graph_id_for(a.file), a.flags.budget);
  if (a.format == "json") {
    print_json(out, report);
  } else {
    out << render_analysis(report);
  }
  return exit_ok;
}

// -------------------------------------------------------------- verify

struct VerifyArgs {
  std::vector<std::string> theorems;
  std::string graph;
  std::string family;
  std::size_t min_n = 0;
  std::size_t max_n = 0;
  bool labelled = false;
  std::size_t random = 0;
  std::size_t size = 0;
  std::uint64_t seed = 0;
  std::string random_family = "connected";
  bool fail_fast = false;
  unsigned workers = 0;
  bool ignore_hypotheses = false;
  std::string format = "text";
  BudgetFlags flags;
};

std::vector<TheoremId> theorem_list(const std::vector<std::string>& names) {
  std::vector<TheoremId> ids;
  for (const auto& name : names) {
    if (name == "all" || name == "ALL") {
      for (auto id : all_theorems()) ids.push_back(id);
    } else {
      ids.push_back(parse_theorem_id(name));
    }
  }
  std::vector<TheoremId> unique;
  for (auto id : ids) {
    if (std::find(unique.begin(), unique.end(), id) == unique.end()) unique.push_back(id);
  }
  if (unique.empty()) throw UsageError("no theorem selected");
  return unique;
}

std::string report_line(const TheoremReport& r) {
  std::string status;
  if (!r.applicable && !r.evaluated) {
    status = "not applicable";
  } else if (r.holds) {
    status = r.applicable ? "holds" : "holds (hypotheses ignored)";
  } else {
    status = r.applicable ? "FAILS" : "FAILS (hypotheses ignored)";
  }
  return std::string(to_string(r.theorem)) + " " + r.graph_id + ": " + status;
}

void render_summary(std::ostream& out, const SweepSummary& s) {
  out << "family: " << s.family << "\n";
  out << "graphs_tested: " << s.graphs_tested << "\n";
  for (const auto& t : s.tallies) {
    out << to_string(t.theorem) << ": applicable " << t.applicable << ", held " << t.held
        << ", failed " << t.failed << "\n";
  }
  if (s.truncated) out << "truncated: " << s.truncation_reason << "\n";
  out << "failures: " << s.failures.size() << "\n";
  for (const auto& f : s.failures) {
    out << "FAIL " << to_string(f.report.theorem) << " on " << f.graph_id << "\n";
    out << "  counterexample: " << f.report.counterexample.dump() << "\n";
    std::istringstream lines(f.graph);
    for (std::string line; std::getline(lines, line);) out << "  | " << line << "\n";
  }
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const int sources = (!a.graph.empty()) + (!a.family.empty()) + (a.random > 0);
  if (sources != 1) {
    throw UsageError("choose exactly one of --graph, --family, --random");
  }
  const auto ids = theorem_list(a.theorems);
  SweepOptions options;
  options.check.budget = a.flags.budget;
  options.check.ignore_hypotheses = a.ignore_hypotheses;
  options.workers = a.workers;
  options.fail_fast = a.fail_fast;

  SweepSummary summary;
  std::vector<TheoremReport> reports;
  if (!a.graph.empty()) {
    const std::vector<NamedGraph> one{{graph_id_for(a.graph), read_edge_list_file(a.graph)}};
    summary = sweep("graph " + one[0].id, one, ids, options);
    if (!summary.truncated) reports = check_all(ids, one[0].graph, one[0].id, options.check);
  } else {
    FamilySpec family;
    if (!a.family.empty()) {
      family.kind = parse_family_kind(a.family);
      if (family.kind == FamilyKind::random_connected ||
          family.kind == FamilyKind::random_unicyclic) {
        throw UsageError("random families are selected with --random");
      }
      if (family.kind != FamilyKind::fixtures && a.max_n == 0) {
        throw UsageError("--family needs --max-n");
      }
      family.max_n = a.max_n;
      family.min_n = std::max<std::size_t>(a.min_n, 1);
      family.dedupe = !a.labelled;
    } else {
      if (a.size == 0) throw UsageError("--random needs --size");
      family.kind = a.random_family == "unicyclic" ? FamilyKind::random_unicyclic
                                                   : FamilyKind::random_connected;
      family.count = a.random;
      family.max_n = a.size;
      family.min_n = std::max<std::size_t>(a.min_n, 1);
      family.seed = a.seed;
    }
    summary = sweep(family, ids, options);
  }

  if (a.format == "json") {
    auto j = summary.to_json();
    if (!a.graph.empty()) {
      j["reports"] = json::array();
      for (const auto& r : reports) j["reports"].push_back(r.to_json());
    }
    print_json(out, j);
  } else {
    for (const auto& r : reports) out << report_line(r) << "\n";
    render_summary(out, summary);
  }
  if (!summary.failures.empty()) return exit_counterexample;
  if (summary.truncated) return exit_budget;
  return exit_ok;
}

// -------------------------------------------------------------- search

struct SearchArgs {
  int problem = 0;
  std::size_t max_n = 0;
  std::size_t min_n = 0;
  std::string family = "unicyclic";
  bool labelled = false;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::size_t exemplars = 3;
  std::string format = "text";
  BudgetFlags flags;
};

void render_entries(std::ostream& out, const json& cls) {
  for (const auto& e : cls["exemplars"]) {
    out << "  " << e["graph_id"].get<std::string>() << " n=" << e["n"] << " core="
        << e["core"].dump() << " ker=" << e["ker"].dump() << "\n";
    std::istringstream lines(e["graph"].get<std::string>());
    for (std::string line; std::getline(lines, line);) out << "    | " << line << "\n";
  }
}

int cmd_search(const SearchArgs& a, std::ostream& out) {
  if (a.max_n == 0) throw UsageError("--max-n is required");
  if (a.problem == 1) {
    const auto report = search_problem1(a.max_n, a.flags.budget);
    const auto j = report.to_json(a.exemplars);
    if (a.format == "json") {
      print_json(out, j);
      return exit_ok;
    }
    out << "problem: 1\n";
    out << "max_n: " << report.max_n << "\n";
    out << "graphs_examined: " << report.graphs_examined << "\n";
    for (const char* key : {"core_equals_ker", "core_differs_from_ker"}) {
      out << key << ": " << j[key]["count"] << " by order " << j[key]["by_order"].dump()
          << "\n";
      render_entries(out, j[key]);
    }
    return exit_ok;
  }

  FamilySpec family;
  family.kind = parse_family_kind(a.family);
  family.max_n = a.max_n;
  family.min_n = std::max<std::size_t>(a.min_n, 1);
  family.dedupe = !a.labelled;
  family.seed = a.seed;
  family.count = a.count;
  if ((family.kind == FamilyKind::random_connected ||
       family.kind == FamilyKind::random_unicyclic) &&
      a.count == 0) {
    throw UsageError("random families need --count");
  }
  const auto report = search_problem2(family, a.flags.budget, a.exemplars);
  if (a.format == "json") {
    print_json(out, report.to_json());
    return exit_ok;
  }
  out << "problem: 2\n";
  out << "family: " << report.family << "\n";
  out << "graphs_examined: " << report.graphs_examined << "\n";
  for (const auto& b : report.buckets) {
    out << "defect " << b.defect << ": " << b.count << "\n";
    for (const auto& g : b.exemplars) {
      out << "  " << g.id << " n=" << g.graph.order() << "\n";
      std::istringstream lines(serialize(g.graph));
      for (std::string line; std::getline(lines, line);) out << "    | " << line << "\n";
    }
  }
  return exit_ok;
}

// ------------------------------------------------------------ generate

struct GenerateArgs {
  std::string fixture;
  std::string family;
  int k = 0;
  bool random_unicyclic = false;
  std::size_t n = 0;
  std::uint64_t seed = 0;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  const int selectors = (!a.fixture.empty()) + (!a.family.empty()) + a.random_unicyclic;
  if (selectors != 1) {
    throw UsageError("choose exactly one of --fixture, --family, --random-unicyclic");
  }
  Graph g = [&] {
    if (!a.fixture.empty()) return fixture(a.fixture);
    if (!a.family.empty()) {
      if (a.family != "g2k1") throw UsageError("only --family g2k1 can be generated");
      if (a.k < 1) throw UsageError("--family g2k1 needs --k >= 1");
      return family_g2k1(a.k);
    }
    if (a.n < 3) throw UsageError("--random-unicyclic needs --n >= 3");
    return random_unicyclic(a.n, a.seed);
  }();
  out << serialize(g);
  return exit_ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Independence-structure invariants and theorem checks for small graphs",
               "kecore"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "kecore 0.1.0");

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "Report every invariant of one graph");
  analyze_cmd->add_option("file", analyze_args.file, "Edge-list file")->required();
  add_format(analyze_cmd, analyze_args.format);
  analyze_args.flags.attach(analyze_cmd);

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Check theorems on a graph or a family");
  verify_cmd->add_option("--theorem", verify_args.theorems, "Theorem ids or 'all'")
      ->delimiter(',')
      ->required();
  verify_cmd->add_option("--graph", verify_args.graph, "Edge-list file");
  verify_cmd->add_option("--family", verify_args.family,
                         "fixtures, trees, unicyclic, connected or g2k1");
  verify_cmd->add_option("--min-n", verify_args.min_n, "Smallest order");
  verify_cmd->add_option("--max-n", verify_args.max_n, "Largest order");
  verify_cmd->add_flag("--labelled", verify_args.labelled,
                       "Every labelled graph instead of one per isomorphism class");
  verify_cmd->add_option("--random", verify_args.random, "Number of random graphs");
  verify_cmd->add_option("--size", verify_args.size, "Largest order of random graphs");
  verify_cmd->add_option("--seed", verify_args.seed, "Seed for random graphs");
  verify_cmd->add_option("--random-family", verify_args.random_family)
      ->check(CLI::IsMember({"connected", "unicyclic"}))
      ->capture_default_str();
  verify_cmd->add_flag("--fail-fast", verify_args.fail_fast, "Stop at the first counterexample");
  verify_cmd->add_option("--workers", verify_args.workers,
                         "Worker threads (0 = available parallelism)")
      ->capture_default_str();
  verify_cmd->add_flag("--ignore-hypotheses", verify_args.ignore_hypotheses,
                       "Evaluate conclusions even where hypotheses fail");
  add_format(verify_cmd, verify_args.format);
  verify_args.flags.attach(verify_cmd);

  SearchArgs search_args;
  auto* search_cmd = app.add_subcommand("search", "Explore the open problems");
  search_cmd->add_option("--problem", search_args.problem, "1 or 2")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  search_cmd->add_option("--max-n", search_args.max_n, "Largest order")->required();
  search_cmd->add_option("--min-n", search_args.min_n, "Smallest order");
  search_cmd->add_option("--family", search_args.family, "Family for problem 2")
      ->capture_default_str();
  search_cmd->add_flag("--labelled", search_args.labelled);
  search_cmd->add_option("--count", search_args.count, "Random family size");
  search_cmd->add_option("--seed", search_args.seed, "Random family seed");
  search_cmd->add_option("--exemplars", search_args.exemplars, "Exemplars per class")
      ->capture_default_str();
  add_format(search_cmd, search_args.format);
  search_args.flags.attach(search_cmd);

  GenerateArgs generate_args;
  auto* generate_cmd = app.add_subcommand("generate", "Print a graph as an edge list");
  generate_cmd->add_option("--fixture", generate_args.fixture, "Fixture name");
  generate_cmd->add_option("--family", generate_args.family, "g2k1");
  generate_cmd->add_option("--k", generate_args.k, "Family parameter");
  generate_cmd->add_flag("--random-unicyclic", generate_args.random_unicyclic);
  generate_cmd->add_option("--n", generate_args.n, "Order");
  generate_cmd->add_option("--seed", generate_args.seed, "Seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << "\n";
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "kecore: " << e.what() << "\n";
    return exit_usage;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(analyze_args, out);
    if (verify_cmd->parsed()) return cmd_verify(verify_args, out);
    if (search_cmd->parsed()) return cmd_search(search_args, out);
    if (generate_cmd->parsed()) return cmd_generate(generate_args, out);
  } catch (const BudgetExceeded& e) {
    err << "kecore: budget exceeded: " << e.what() << "\n";
    return exit_budget;
  } catch (const Error& e) {
    err << "kecore: error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace kecore::cli
