#include "kecore/theorem_lab.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cctype>
#include <map>
#include <optional>
#include <thread>

#include "kecore/canonical.hpp"
#include "kecore/critical.hpp"
#include "kecore/edge_list.hpp"
#include "kecore/errors.hpp"
#include "kecore/independence.hpp"
#include "kecore/matching.hpp"
#include "kecore/unicyclic.hpp"

namespace kecore {

using nlohmann::json;

namespace {

constexpr std::array kAll{
    TheoremId::lem1a, TheoremId::lem1b, TheoremId::lem2,  TheoremId::th11,
    TheoremId::th1,   TheoremId::th2a,  TheoremId::th2b,  TheoremId::th3,
    TheoremId::th4a,  TheoremId::th4b,  TheoremId::th12,  TheoremId::main,
    TheoremId::kercore, TheoremId::zhang,
};

json matching_json(const Matching& m) { return m.labels(); }

// Lazily computed invariants of one graph, shared between checkers.
class Facts {
 public:
  Facts(const Graph& g, const Budget& budget) : g_(g), budget_(budget) {}

  const Graph& graph() const { return g_; }
  const Budget& budget() const { return budget_; }

  const ShapeClass& shape() {
    if (!shape_) shape_ = classify_shape(g_);
    return *shape_;
  }
  bool unicyclic() { return shape().kind == ShapeKind::unicyclic; }
  std::size_t alpha() {
    if (!alpha_) alpha_ = kecore::alpha(g_, budget_);
    return *alpha_;
  }
  std::size_t mu() {
    if (!mu_) mu_ = kecore::mu(g_);
    return *mu_;
  }
  bool ke() { return alpha() + mu() == g_.order(); }
  const VertexSet& core() {
    if (!core_) core_ = kecore::core(g_, budget_);
    return *core_;
  }
  const VertexSet& corona() {
    if (!corona_) corona_ = kecore::corona(g_, budget_);
    return *corona_;
  }
  const MisFamily& mis() {
    if (!mis_) mis_ = enumerate_mis(g_, budget_);
    return *mis_;
  }
  const CriticalReport& critical() {
    if (!critical_) critical_ = critical_difference_bruteforce(g_, budget_);
    return *critical_;
  }
  const UnicyclicDecomposition& decomposition() {
    if (!decomposition_) decomposition_ = decompose(g_);
    return *decomposition_;
  }

 private:
  const Graph& g_;
  Budget budget_;
  std::optional<ShapeClass> shape_;
  std::optional<std::size_t> alpha_;
  std::optional<std::size_t> mu_;
  std::optional<VertexSet> core_;
  std::optional<VertexSet> corona_;
  std::optional<MisFamily> mis_;
  std::optional<CriticalReport> critical_;
  std::optional<UnicyclicDecomposition> decomposition_;
};

struct Outcome {
  bool holds = true;
  json witness = json::object();
  json counterexample = nullptr;
};

Outcome check_lem1a(Facts& f) {
  const auto closed = neighborhood(f.graph(), f.decomposition().cycle_set, true);
  const auto meet = f.core() & closed;
  Outcome out;
  out.witness = {{"core", to_json(f.core())}, {"closed_cycle_neighborhood", to_json(closed)}};
  if (!meet.empty()) {
    out.holds = false;
    out.counterexample = {{"intersection", to_json(meet)}};
  }
  return out;
}

Outcome check_lem1b(Facts& f) {
  const auto from = neighborhood(f.graph(), f.core());
  auto m = saturating_matching(f.graph(), from, f.core());
  Outcome out;
  if (m) {
    out.witness = {{"from", to_json(from)}, {"into", to_json(f.core())},
                   {"matching", matching_json(*m)}};
  } else {
    out.holds = false;
    out.counterexample = {{"from", to_json(from)}, {"into", to_json(f.core())}};
  }
  return out;
}

Outcome check_lem2(Facts& f) {
  const auto& g = f.graph();
  const auto n = g.order();
  const auto sum = f.alpha() + f.mu();
  const auto& cycle = f.decomposition().cycle;
  json non_critical = nullptr;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Edge e(cycle[i], cycle[(i + 1) % cycle.size()]);
    if (!is_alpha_critical_edge(g, e, f.budget())) {
      non_critical = json::array({g.label(e.u), g.label(e.v)});
      break;
    }
  }
  const bool all_critical = non_critical.is_null();
  const bool bounds = sum + 1 >= n && sum <= n;
  const bool iff = (sum + 1 == n) == all_critical;
  Outcome out;
  out.witness = {{"alpha", f.alpha()},
                 {"mu", f.mu()},
                 {"n", n},
                 {"cycle_edges_alpha_critical", all_critical},
                 {"non_critical_cycle_edge", non_critical}};
  if (!bounds || !iff) {
    out.holds = false;
    out.counterexample = {{"bounds_hold", bounds}, {"iff_holds", iff}};
  }
  return out;
}

Outcome check_th11(Facts& f) {
  const auto& g = f.graph();
  Outcome out;
  json pairs = json::array();
  for (const auto& s : f.mis().sets) {
    const auto from = s - f.core();
    const auto into = f.corona() - s;
    auto m = saturating_matching(g, from, into);
    if (!m) {
      out.holds = false;
      out.counterexample = {{"S", to_json(s)}, {"from", to_json(from)}, {"into", to_json(into)}};
      break;
    }
    pairs.push_back({{"S", to_json(s)}, {"matching", matching_json(*m)}});
  }
  out.witness = {{"core", to_json(f.core())},
                 {"corona", to_json(f.corona())},
                 {"matchings", std::move(pairs)}};
  return out;
}

Outcome check_th1(Facts& f) {
  const auto& g = f.graph();
  const auto& core_set = f.core();
  const auto neighbours = neighborhood(g, core_set);
  const auto all = enumerate_maximum_matchings(g, f.budget().matching_limit, f.budget());
  Outcome out;
  for (const auto& m : all) {
    for (Vertex v : neighbours) {
      const auto partner = m.mate(v);
      if (!partner || !core_set.contains(*partner)) {
        out.holds = false;
        out.counterexample = {{"matching", matching_json(m)}, {"vertex", g.label(v)}};
        break;
      }
    }
    if (!out.holds) break;
  }
  out.witness = {{"neighborhood_of_core", to_json(neighbours)},
                 {"core", to_json(core_set)},
                 {"maximum_matchings_checked", all.size()}};
  return out;
}

Outcome check_th2a(Facts& f) {
  const auto& report = f.critical();
  const auto& k = report.ker;
  const bool independent = is_independent(f.graph(), k);
  const int d = difference(f.graph(), k);
  const bool critical = independent && d == report.critical_independence_difference;
  const bool inside = k.is_subset_of(f.core());
  Outcome out;
  out.witness = {{"ker", to_json(k)},
                 {"difference", d},
                 {"id_c", report.critical_independence_difference},
                 {"core", to_json(f.core())}};
  if (!critical || !inside) {
    out.holds = false;
    out.counterexample = {{"ker_critical_independent", critical}, {"ker_in_core", inside}};
  }
  return out;
}

Outcome check_th2b(Facts& f) {
  const auto& k = f.critical().ker;
  Outcome out;
  out.witness = {{"ker", to_json(k)}, {"core", to_json(f.core())}};
  if (!(k == f.core())) {
    out.holds = false;
    out.counterexample = out.witness;
  }
  return out;
}

Outcome check_th3(Facts& f) {
  const auto& g = f.graph();
  const auto& dec = f.decomposition();
  const auto cover = f.corona() | neighborhood(g, f.core());
  auto assembled = dec.cycle_set;
  for (const auto& p : dec.pendants) {
    assembled = assembled | lift(g, p.tree, kecore::corona(p.tree, f.budget()));
  }
  const bool covers = cover.size() == g.order();
  const bool formula = assembled == f.corona();
  Outcome out;
  out.witness = {{"corona", to_json(f.corona())},
                 {"corona_union_neighborhood_of_core", to_json(cover)},
                 {"cycle_plus_pendant_coronas", to_json(assembled)}};
  if (!covers || !formula) {
    out.holds = false;
    out.counterexample = {{"missing", to_json(g.all_vertices() - cover)},
                          {"corona_formula_holds", formula}};
  }
  return out;
}

Outcome check_th4a(Facts& f) {
  const auto& g = f.graph();
  const auto lhs = neighborhood(g, f.core());
  const auto rhs = g.all_vertices() - f.corona();
  Outcome out;
  out.witness = {{"neighborhood_of_core", to_json(lhs)}, {"outside_corona", to_json(rhs)}};
  if (!(lhs == rhs)) {
    out.holds = false;
    out.counterexample = out.witness;
  }
  return out;
}

Outcome check_th4b(Facts& f) {
  const auto sum = f.corona().size() + f.core().size();
  Outcome out;
  out.witness = {{"corona_size", f.corona().size()},
                 {"core_size", f.core().size()},
                 {"alpha", f.alpha()}};
  if (sum != 2 * f.alpha()) {
    out.holds = false;
    out.counterexample = out.witness;
  }
  return out;
}

Outcome check_th12(Facts& f) {
  const auto& g = f.graph();
  const auto& dec = f.decomposition();
  const auto& omega = f.mis().sets;
  Outcome out;
  auto fail = [&](json detail) {
    out.holds = false;
    out.counterexample = std::move(detail);
  };

  auto pendant_cores = g.empty_set();
  json per_pendant = json::array();
  for (const auto& p : dec.pendants) {
    const auto tree_family = enumerate_mis(p.tree, f.budget());
    const auto tree_vertices = lift(g, p.tree, p.tree.all_vertices());
    pendant_cores = pendant_cores | lift(g, p.tree, kecore::core(p.tree, f.budget()));

    for (const auto& s : omega) {
      const auto part = s & tree_vertices;
      if (part.size() != tree_family.alpha) {
        fail({{"part", "ii"}, {"S", to_json(s)}, {"pendant", g.label(p.root)},
              {"restriction", to_json(part)}});
        return out;
      }
    }
    for (const auto& w : tree_family.sets) {
      const auto lifted = lift(g, p.tree, w);
      const bool extends = std::any_of(omega.begin(), omega.end(), [&](const VertexSet& s) {
        return lifted.is_subset_of(s);
      });
      if (!extends) {
        fail({{"part", "i"}, {"W", to_json(lifted)}, {"pendant", g.label(p.root)}});
        return out;
      }
    }
    per_pendant.push_back({{"x", g.label(p.root)},
                           {"alpha", tree_family.alpha},
                           {"mis_count", tree_family.sets.size()}});
  }
  out.witness = {{"core", to_json(f.core())},
                 {"union_of_pendant_cores", to_json(pendant_cores)},
                 {"pendants", std::move(per_pendant)}};
  if (!(pendant_cores == f.core())) {
    fail({{"part", "iii"}, {"core", to_json(f.core())},
          {"union_of_pendant_cores", to_json(pendant_cores)}});
  }
  return out;
}

Outcome check_main(Facts& f) {
  const auto sum = f.corona().size() + f.core().size();
  const auto two_alpha = 2 * f.alpha();
  const bool bounds = two_alpha <= sum && sum <= two_alpha + 1;
  const bool iff = (!f.ke()) == (sum == two_alpha + 1);
  Outcome out;
  out.witness = {{"alpha", f.alpha()},
                 {"mu", f.mu()},
                 {"ke", f.ke()},
                 {"core", to_json(f.core())},
                 {"corona", to_json(f.corona())},
                 {"sum", sum},
                 {"defect", static_cast<std::int64_t>(sum) - static_cast<std::int64_t>(two_alpha)}};
  if (!bounds || !iff) {
    out.holds = false;
    out.counterexample = {{"bounds_hold", bounds}, {"iff_holds", iff}};
  }
  return out;
}

Outcome check_kercore(Facts& f) {
  const auto& g = f.graph();
  auto pendant_kers = g.empty_set();
  for (const auto& p : f.decomposition().pendants) {
    pendant_kers =
        pendant_kers | lift(g, p.tree, critical_difference_bruteforce(p.tree, f.budget()).ker);
  }
  const auto& k = f.critical().ker;
  Outcome out;
  out.witness = {{"ker", to_json(k)},
                 {"union_of_pendant_kers", to_json(pendant_kers)},
                 {"core", to_json(f.core())}};
  if (!(k == pendant_kers) || !(k == f.core())) {
    out.holds = false;
    out.counterexample = out.witness;
  }
  return out;
}

Outcome check_zhang(Facts& f) {
  const auto& r = f.critical();
  Outcome out;
  out.witness = {{"d_c", r.critical_difference},
                 {"id_c", r.critical_independence_difference},
                 {"witness", to_json(r.witness)}};
  if (r.critical_difference != r.critical_independence_difference) {
    out.holds = false;
    out.counterexample = out.witness;
  }
  return out;
}

bool applicable(TheoremId id, Facts& f) {
  switch (id) {
    case TheoremId::lem1a:
    case TheoremId::lem1b:
    case TheoremId::th3:
    case TheoremId::th12:
    case TheoremId::kercore:
      return f.unicyclic() && !f.ke();
    case TheoremId::lem2:
    case TheoremId::main:
      return f.unicyclic();
    case TheoremId::th1:
    case TheoremId::th4a:
    case TheoremId::th4b:
      return f.ke();
    case TheoremId::th2b:
      return f.shape().bipartite;
    case TheoremId::th11:
    case TheoremId::th2a:
    case TheoremId::zhang:
      return true;
  }
  return false;
}

// Statements about the unique cycle cannot be evaluated without one.
bool needs_cycle(TheoremId id) {
  switch (id) {
    case TheoremId::lem1a:
    case TheoremId::lem2:
    case TheoremId::th3:
    case TheoremId::th12:
    case TheoremId::kercore:
      return true;
    default:
      return false;
  }
}

Outcome evaluate(TheoremId id, Facts& f) {
  switch (id) {
    case TheoremId::lem1a: return check_lem1a(f);
    case TheoremId::lem1b: return check_lem1b(f);
    case TheoremId::lem2: return check_lem2(f);
    case TheoremId::th11: return check_th11(f);
    case TheoremId::th1: return check_th1(f);
    case TheoremId::th2a: return check_th2a(f);
    case TheoremId::th2b: return check_th2b(f);
    case TheoremId::th3: return check_th3(f);
    case TheoremId::th4a: return check_th4a(f);
    case TheoremId::th4b: return check_th4b(f);
    case TheoremId::th12: return check_th12(f);
    case TheoremId::main: return check_main(f);
    case TheoremId::kercore: return check_kercore(f);
    case TheoremId::zhang: return check_zhang(f);
  }
  throw DomainError("unknown theorem id");
}

TheoremReport run_check(TheoremId id, Facts& f, std::string_view graph_id,
                        const CheckOptions& options) {
  TheoremReport report;
  report.theorem = id;
  report.graph_id = std::string(graph_id);
  report.applicable = applicable(id, f);
  const bool evaluable = !needs_cycle(id) || f.unicyclic();
  if (report.applicable || (options.ignore_hypotheses && evaluable)) {
    auto outcome = evaluate(id, f);
    report.evaluated = true;
    report.holds = outcome.holds;
    report.witness = std::move(outcome.witness);
    report.counterexample = std::move(outcome.counterexample);
  }
  return report;
}

}  // namespace

json to_json(const VertexSet& s) { return s.labels(); }

std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::lem1a: return "LEM1A";
    case TheoremId::lem1b: return "LEM1B";
    case TheoremId::lem2: return "LEM2";
    case TheoremId::th11: return "TH11";
    case TheoremId::th1: return "TH1";
    case TheoremId::th2a: return "TH2A";
    case TheoremId::th2b: return "TH2B";
    case TheoremId::th3: return "TH3";
    case TheoremId::th4a: return "TH4A";
    case TheoremId::th4b: return "TH4B";
    case TheoremId::th12: return "TH12";
    case TheoremId::main: return "MAIN";
    case TheoremId::kercore: return "KERCORE";
    case TheoremId::zhang: return "ZHANG";
  }
  return "?";
}

TheoremId parse_theorem_id(std::string_view text) {
  std::string upper(text);
  for (auto& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (auto id : kAll) {
    if (to_string(id) == upper) return id;
  }
  throw DomainError("unknown theorem id '" + std::string(text) + "'");
}

std::span<const TheoremId> all_theorems() { return kAll; }

json TheoremReport::to_json() const {
  return {{"theorem", std::string(to_string(theorem))},
          {"graph_id", graph_id},
          {"applicable", applicable},
          {"evaluated", evaluated},
          {"holds", holds},
          {"witness", witness},
          {"counterexample", counterexample}};
}

TheoremReport check(TheoremId id, const Graph& g, std::string_view graph_id,
                    const CheckOptions& options) {
  Facts facts(g, options.budget);
  return run_check(id, facts, graph_id, options);
}

std::vector<TheoremReport> check_all(std::span<const TheoremId> ids, const Graph& g,
                                     std::string_view graph_id,
                                     const CheckOptions& options) {
  Facts facts(g, options.budget);
  std::vector<TheoremReport> out;
  out.reserve(ids.size());
  for (auto id : ids) out.push_back(run_check(id, facts, graph_id, options));
  return out;
}

std::int64_t classify_sum_defect(const Graph& g, const Budget& budget) {
  const auto c = static_cast<std::int64_t>(core(g, budget).size());
  const auto r = static_cast<std::int64_t>(corona(g, budget).size());
  return r + c - 2 * static_cast<std::int64_t>(alpha(g, budget));
}

// ---------------------------------------------------------------- sweeps

json SweepSummary::to_json(bool include_timing) const {
  json tallies_json = json::array();
  for (const auto& t : tallies) {
    tallies_json.push_back({{"theorem", std::string(kecore::to_string(t.theorem))},
                            {"applicable", t.applicable},
                            {"held", t.held},
                            {"failed", t.failed}});
  }
  json failures_json = json::array();
  for (const auto& f : failures) {
    failures_json.push_back({{"graph_id", f.graph_id}, {"graph", f.graph},
                             {"report", f.report.to_json()}});
  }
  json out = {{"family", family},
              {"graphs_tested", graphs_tested},
              {"theorems", std::move(tallies_json)},
              {"failures", std::move(failures_json)},
              {"truncated", truncated},
              {"truncation_reason", truncation_reason}};
  if (include_timing) out["elapsed_ms"] = elapsed.count();
  return out;
}

namespace {

struct GraphResult {
  std::vector<TheoremReport> reports;
  std::optional<std::string> budget_error;
};

class SweepRunner {
 public:
  SweepRunner(std::string family, std::span<const TheoremId> ids, const SweepOptions& options)
      : ids_(ids.begin(), ids.end()), options_(options), start_(std::chrono::steady_clock::now()) {
    summary_.family = std::move(family);
    for (auto id : ids_) summary_.tallies.push_back(TheoremTally{id});
    workers_ = options.workers != 0 ? options.workers
                                    : std::max(1u, std::thread::hardware_concurrency());
  }

  // Returns false once the sweep must stop.
  bool feed(NamedGraph g) {
    batch_.push_back(std::move(g));
    if (batch_.size() < kBatch) return true;
    return flush();
  }

  SweepSummary finish() {
    if (!stopped_) flush();
    std::sort(summary_.failures.begin(), summary_.failures.end(),
              [](const SweepFailure& a, const SweepFailure& b) {
                if (a.graph != b.graph) return a.graph < b.graph;
                if (a.graph_id != b.graph_id) return a.graph_id < b.graph_id;
                return a.report.theorem < b.report.theorem;
              });
    summary_.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start_);
    return std::move(summary_);
  }

 private:
  static constexpr std::size_t kBatch = 256;

  GraphResult run_one(const NamedGraph& g) const {
    GraphResult r;
    try {
      r.reports = check_all(ids_, g.graph, g.id, options_.check);
    } catch (const BudgetExceeded& e) {
      r.budget_error = g.id + ": " + e.what();
    }
    return r;
  }

  bool flush() {
    std::vector<GraphResult> results(batch_.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t i = next++; i < batch_.size(); i = next++) results[i] = run_one(batch_[i]);
    };
    const auto threads = std::min<std::size_t>(workers_, batch_.size());
    if (threads <= 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
    }
    // Aggregate in stream order so the outcome does not depend on threads.
    for (std::size_t i = 0; i < batch_.size(); ++i) {
      auto& r = results[i];
      if (r.budget_error) {
        summary_.truncated = true;
        summary_.truncation_reason = *r.budget_error;
        stopped_ = true;
        break;
      }
      bool any_failure = false;
      for (std::size_t k = 0; k < r.reports.size(); ++k) {
        auto& report = r.reports[k];
        auto& tally = summary_.tallies[k];
        if (report.applicable) ++tally.applicable;
        if (report.evaluated && report.holds && report.applicable) ++tally.held;
        if (report.failed()) {
          ++tally.failed;
          any_failure = true;
          summary_.failures.push_back(
              SweepFailure{batch_[i].id, serialize(batch_[i].graph), std::move(report)});
        }
      }
      ++summary_.graphs_tested;
      if (any_failure && options_.fail_fast) {
        summary_.truncated = true;
        summary_.truncation_reason = "stopped at first counterexample";
        stopped_ = true;
        break;
      }
    }
    batch_.clear();
    return !stopped_;
  }

  std::vector<TheoremId> ids_;
  SweepOptions options_;
  std::chrono::steady_clock::time_point start_;
  SweepSummary summary_;
  std::vector<NamedGraph> batch_;
  unsigned workers_ = 1;
  bool stopped_ = false;
};

}  // namespace

SweepSummary sweep(const FamilySpec& family, std::span<const TheoremId> ids,
                   const SweepOptions& options) {
  SweepRunner runner(family.describe(), ids, options);
  try {
    for_each_graph(family, options.check.budget,
                   [&](const NamedGraph& g) { return runner.feed(g); });
  } catch (const BudgetExceeded& e) {
    auto summary = runner.finish();
    summary.truncated = true;
    summary.truncation_reason = std::string("family generation: ") + e.what();
    return summary;
  }
  return runner.finish();
}

SweepSummary sweep(std::string descriptor, std::span<const NamedGraph> graphs,
                   std::span<const TheoremId> ids, const SweepOptions& options) {
  SweepRunner runner(std::move(descriptor), ids, options);
  for (const auto& g : graphs) {
    if (!runner.feed(g)) break;
  }
  return runner.finish();
}

// -------------------------------------------------------- open problems

namespace {

json entries_json(const std::vector<Problem1Entry>& entries, std::size_t exemplars) {
  json out = json::array();
  for (std::size_t i = 0; i < entries.size() && i < exemplars; ++i) {
    const auto& e = entries[i];
    out.push_back({{"graph_id", e.graph.id},
                   {"n", e.graph.graph.order()},
                   {"graph", serialize(e.graph.graph)},
                   {"core", e.core},
                   {"ker", e.ker}});
  }
  return out;
}

json counts_by_order(const std::vector<Problem1Entry>& entries) {
  std::map<std::size_t, std::size_t> counts;
  for (const auto& e : entries) ++counts[e.graph.graph.order()];
  json out = json::object();
  for (const auto& [n, c] : counts) out[std::to_string(n)] = c;
  return out;
}

}  // namespace

json Problem1Report::to_json(std::size_t exemplars) const {
  return {{"max_n", max_n},
          {"graphs_examined", graphs_examined},
          {"core_equals_ker",
           {{"count", core_equals_ker.size()},
            {"by_order", counts_by_order(core_equals_ker)},
            {"exemplars", entries_json(core_equals_ker, exemplars)}}},
          {"core_differs_from_ker",
           {{"count", core_differs_from_ker.size()},
            {"by_order", counts_by_order(core_differs_from_ker)},
            {"exemplars", entries_json(core_differs_from_ker, exemplars)}}}};
}

Problem1Report search_problem1(std::size_t max_n, const Budget& budget) {
  Problem1Report report;
  report.max_n = max_n;
  FamilySpec family{.kind = FamilyKind::unicyclic, .min_n = 3, .max_n = max_n};
  for_each_graph(family, budget, [&](const NamedGraph& ng) {
    const auto& g = ng.graph;
    ++report.graphs_examined;
    if (classify_shape(g).bipartite || !is_koenig_egervary(g, budget)) return true;
    const auto c = core(g, budget);
    const auto k = critical_difference_bruteforce(g, budget).ker;
    Problem1Entry entry{ng, c.labels(), k.labels()};
    (c == k ? report.core_equals_ker : report.core_differs_from_ker).push_back(std::move(entry));
    return true;
  });
  return report;
}

json Problem2Report::to_json() const {
  json out_buckets = json::array();
  for (const auto& b : buckets) {
    json ex = json::array();
    for (const auto& g : b.exemplars) {
      ex.push_back({{"graph_id", g.id}, {"n", g.graph.order()}, {"graph", serialize(g.graph)}});
    }
    out_buckets.push_back({{"defect", b.defect}, {"count", b.count}, {"exemplars", std::move(ex)}});
  }
  return {{"family", family}, {"graphs_examined", graphs_examined}, {"buckets", std::move(out_buckets)}};
}

Problem2Report search_problem2(const FamilySpec& family, const Budget& budget,
                               std::size_t exemplars) {
  Problem2Report report;
  report.family = family.describe();
  std::map<std::int64_t, DefectBucket> buckets;
  for_each_graph(family, budget, [&](const NamedGraph& ng) {
    ++report.graphs_examined;
    const auto defect = classify_sum_defect(ng.graph, budget);
    auto& bucket = buckets[defect];
    bucket.defect = defect;
    ++bucket.count;
    if (bucket.exemplars.size() < exemplars) bucket.exemplars.push_back(ng);
    return true;
  });
  for (auto& [d, b] : buckets) report.buckets.push_back(std::move(b));
  return report;
}

}  // namespace kecore
