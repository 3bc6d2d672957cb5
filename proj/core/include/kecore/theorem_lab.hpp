#pragma once

#include <chrono>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "kecore/budget.hpp"
#include "kecore/corpus.hpp"
#include "kecore/graph.hpp"

namespace kecore {

/// Stable catalog of checkable statements. String forms are the upper-case
/// enumerator names (LEM1A, ..., ZHANG).
enum class TheoremId {
  lem1a,    // non-KE unicyclic: core ∩ N[V(C)] = ∅
  lem1b,    // non-KE unicyclic: matching from N(core) into core
  lem2,     // unicyclic: n-1 <= α+μ <= n, and α+μ = n-1 iff every cycle edge is α-critical
  th11,     // every S in Ω: matching from S - core into corona - S
  th1,      // KE: every maximum matching matches N(core) into core
  th2a,     // ker is a critical independent set contained in core
  th2b,     // bipartite: ker = core
  th3,      // non-KE unicyclic: corona ∪ N(core) = V, corona = V(C) ∪ corona(T_x)...
  th4a,     // KE: N(core) = V - corona
  th4b,     // KE: |corona| + |core| = 2α
  th12,     // non-KE unicyclic: pendant-tree structure of Ω and core
  main,     // unicyclic: 2α <= |corona|+|core| <= 2α+1, upper iff non-KE
  kercore,  // non-KE unicyclic: ker = ∪ ker(T_x) = core
  zhang,    // d_c = id_c
};

std::string_view to_string(TheoremId id);
/// Case-insensitive. Throws DomainError for unknown ids.
TheoremId parse_theorem_id(std::string_view text);
std::span<const TheoremId> all_theorems();

struct TheoremReport {
  TheoremId theorem = TheoremId::main;
  std::string graph_id;
  /// Hypotheses of the statement hold for this graph.
  bool applicable = false;
  /// Conclusion holds. Only evaluated when applicable, unless hypotheses
  /// are explicitly ignored.
  bool holds = false;
  bool evaluated = false;
  nlohmann::json witness = nlohmann::json::object();
  nlohmann::json counterexample = nullptr;

  /// A conclusion was evaluated and failed.
  bool failed() const { return evaluated && !holds; }
  nlohmann::json to_json() const;
};

struct CheckOptions {
  Budget budget{};
  /// Evaluate conclusions on graphs outside the statement's hypotheses.
  bool ignore_hypotheses = false;
};

TheoremReport check(TheoremId id, const Graph& g, std::string_view graph_id = "",
                    const CheckOptions& options = {});

/// Runs several checkers on one graph, sharing computed invariants.
std::vector<TheoremReport> check_all(std::span<const TheoremId> ids, const Graph& g,
                                     std::string_view graph_id = "",
                                     const CheckOptions& options = {});

/// |corona| + |core| - 2α.
std::int64_t classify_sum_defect(const Graph& g, const Budget& budget = {});

// ---------------------------------------------------------------- sweeps

struct SweepOptions {
  CheckOptions check{};
  /// 0 selects std::thread::hardware_concurrency().
  unsigned workers = 0;
  bool fail_fast = false;
};

struct TheoremTally {
  TheoremId theorem = TheoremId::main;
  std::size_t applicable = 0;
  std::size_t held = 0;
  std::size_t failed = 0;
};

struct SweepFailure {
  std::string graph_id;
  /// Edge-list serialization; parse it to replay the failure.
  std::string graph;
  TheoremReport report;
};

struct SweepSummary {
  std::string family;
  std::size_t graphs_tested = 0;
  std::vector<TheoremTally> tallies;
  /// Sorted by graph serialization, then theorem.
  std::vector<SweepFailure> failures;
  bool truncated = false;
  std::string truncation_reason;
  std::chrono::milliseconds elapsed{0};

  bool ok() const { return failures.empty() && !truncated; }
  /// Elapsed time is left out unless asked for, keeping output reproducible.
  nlohmann::json to_json(bool include_timing = false) const;
};

SweepSummary sweep(const FamilySpec& family, std::span<const TheoremId> ids,
                   const SweepOptions& options = {});

SweepSummary sweep(std::string descriptor, std::span<const NamedGraph> graphs,
                   std::span<const TheoremId> ids, const SweepOptions& options = {});

// -------------------------------------------------------- open problems

struct Problem1Entry {
  NamedGraph graph;
  std::vector<std::string> core;
  std::vector<std::string> ker;
};

/// Non-bipartite unicyclic König-Egerváry graphs split by whether
/// core(G) = ker(G). Entries ordered by order, then canonical form.
struct Problem1Report {
  std::size_t max_n = 0;
  std::size_t graphs_examined = 0;
  std::vector<Problem1Entry> core_equals_ker;
  std::vector<Problem1Entry> core_differs_from_ker;

  nlohmann::json to_json(std::size_t exemplars) const;
};

Problem1Report search_problem1(std::size_t max_n, const Budget& budget = {});

struct DefectBucket {
  std::int64_t defect = 0;
  std::size_t count = 0;
  std::vector<NamedGraph> exemplars;
};

/// Histogram of the sum defect over a family.
struct Problem2Report {
  std::string family;
  std::size_t graphs_examined = 0;
  std::vector<DefectBucket> buckets;  // ascending defect

  nlohmann::json to_json() const;
};

Problem2Report search_problem2(const FamilySpec& family, const Budget& budget = {},
                               std::size_t exemplars = 3);

/// JSON array of labels in canonical order.
nlohmann::json to_json(const VertexSet& s);

}  // namespace kecore
