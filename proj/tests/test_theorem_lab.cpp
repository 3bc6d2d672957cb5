#include <doctest.h>

#include <set>

#include "kecore/canonical.hpp"
#include "kecore/corpus.hpp"
#include "kecore/edge_list.hpp"
#include "kecore/errors.hpp"
#include "kecore/independence.hpp"
#include "kecore/matching.hpp"
#include "kecore/theorem_lab.hpp"

using namespace kecore;

namespace {

VertexSet set_from(const Graph& g, const nlohmann::json& labels) {
  std::vector<std::string> names;
  for (const auto& l : labels) names.push_back(l.get<std::string>());
  return g.set_of(names);
}

Matching matching_from(const Graph& g, const nlohmann::json& pairs) {
  std::vector<Edge> edges;
  for (const auto& p : pairs) {
    const auto text = p.get<std::string>();
    const auto dash = text.find('-');
    edges.push_back(g.edge(text.substr(0, dash), text.substr(dash + 1)));
  }
  return Matching(g, edges);
}

}  // namespace

TEST_SUITE("theorem_lab") {

TEST_CASE("catalog") {
  CHECK(all_theorems().size() == 14);
  CHECK(to_string(TheoremId::kercore) == "KERCORE");
  CHECK(parse_theorem_id("th4b") == TheoremId::th4b);
  CHECK(parse_theorem_id("MAIN") == TheoremId::main);
  CHECK_THROWS_AS(parse_theorem_id("TH99"), DomainError);
  std::set<std::string> names;
  for (auto id : all_theorems()) names.insert(std::string(to_string(id)));
  CHECK(names == std::set<std::string>{"LEM1A", "LEM1B", "LEM2", "TH11", "TH1", "TH2A", "TH2B",
                                       "TH3", "TH4A", "TH4B", "TH12", "MAIN", "KERCORE",
                                       "ZHANG"});
}

TEST_CASE("core plus corona on a non-koenig-egervary unicyclic graph") {
  const auto r = check(TheoremId::main, fixture("fig2G"), "fig2G");
  CHECK(r.applicable);
  CHECK(r.holds);
  CHECK(r.witness["sum"] == 11);
  CHECK(r.witness["alpha"] == 5);
  CHECK(r.witness["defect"] == 1);
  CHECK(r.witness["core"] == nlohmann::json({"a", "b"}));
}

TEST_CASE("koenig-egervary identities on a triangle with a pendant tree") {
  const auto g = fixture("fig1");
  const auto r = check(TheoremId::th4b, g);
  CHECK(r.applicable);
  CHECK(r.holds);
  CHECK(r.witness["core_size"].get<std::size_t>() + r.witness["corona_size"].get<std::size_t>() ==
        2 * r.witness["alpha"].get<std::size_t>());
  CHECK(check(TheoremId::th4a, g).holds);
  CHECK(check(TheoremId::th1, g).holds);
}

TEST_CASE("bipartite ker on trees") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto r = check(TheoremId::th2b, random_tree(1 + seed % 12, seed));
    CHECK(r.applicable);
    CHECK(r.holds);
  }
}

TEST_CASE("hypotheses decide applicability") {
  const auto fig2 = fixture("fig2G");
  const auto th4b = check(TheoremId::th4b, fig2);
  CHECK_FALSE(th4b.applicable);
  CHECK_FALSE(th4b.evaluated);
  CHECK_FALSE(th4b.failed());
  CHECK(th4b.counterexample.is_null());
  CHECK_FALSE(check(TheoremId::kercore, fixture("fig1")).applicable);
  CHECK_FALSE(check(TheoremId::lem2, fixture("P3")).applicable);
  CHECK_FALSE(check(TheoremId::th2b, fixture("C5")).applicable);
  CHECK(check(TheoremId::zhang, fixture("fig4G1")).applicable);
}

TEST_CASE("main sum on a graph with two cycles") {
  const auto g = fixture("fig6G2");
  CHECK_FALSE(check(TheoremId::main, g).applicable);
  CheckOptions loose;
  loose.ignore_hypotheses = true;
  const auto r = check(TheoremId::main, g, "fig6G2", loose);
  CHECK(r.evaluated);
  CHECK(r.holds);
  CHECK(r.witness["core"].empty());
  CHECK(r.witness["sum"].get<std::size_t>() == 2 * r.witness["alpha"].get<std::size_t>() + 1);
}

TEST_CASE("sum defect") {
  CHECK(classify_sum_defect(fixture("fig6G1")) == 0);
  CHECK(classify_sum_defect(fixture("fig6G2")) == 1);
  CHECK(classify_sum_defect(fixture("fig1")) == 0);
  CHECK(classify_sum_defect(fixture("C5")) == 1);
}

TEST_CASE("sum defect separates koenig-egervary unicyclic graphs") {
  FamilySpec family{.kind = FamilyKind::unicyclic, .min_n = 3, .max_n = 9};
  std::size_t seen = 0;
  for_each_graph(family, {}, [&](const NamedGraph& g) {
    ++seen;
    CHECK(classify_sum_defect(g.graph) == (is_koenig_egervary(g.graph) ? 0 : 1));
    return true;
  });
  CHECK(seen == 1 + 2 + 5 + 13 + 33 + 89 + 240);
}

TEST_CASE("every checker holds on every fixture where it applies") {
  for (auto name : fixture_names()) {
    for (const auto& r : check_all(all_theorems(), fixture(name), name)) {
      CHECK_MESSAGE(!r.failed(), name, " ", to_string(r.theorem));
      if (r.applicable) CHECK(r.evaluated);
    }
  }
}

TEST_CASE("witnesses re-verify") {
  for (auto name : {"fig2G", "fig4G2", "C5"}) {
    const auto g = fixture(name);
    const auto lem1b = check(TheoremId::lem1b, g);
    REQUIRE(lem1b.holds);
    const auto from = set_from(g, lem1b.witness["from"]);
    const auto into = set_from(g, lem1b.witness["into"]);
    const auto m = matching_from(g, lem1b.witness["matching"]);
    CHECK(m.size() == from.size());
    for (Vertex v : from) {
      REQUIRE(m.mate(v));
      CHECK(into.contains(*m.mate(v)));
    }
  }
  const auto g = family_g2k1(2);
  const auto th11 = check(TheoremId::th11, g);
  REQUIRE(th11.holds);
  for (const auto& pair : th11.witness["matchings"]) {
    const auto s = set_from(g, pair["S"]);
    const auto c = set_from(g, th11.witness["core"]);
    const auto r = set_from(g, th11.witness["corona"]);
    const auto m = matching_from(g, pair["matching"]);
    for (Vertex v : s - c) {
      REQUIRE(m.mate(v));
      CHECK((r - s).contains(*m.mate(v)));
    }
  }
}

TEST_CASE("failures replay") {
  CheckOptions loose;
  loose.ignore_hypotheses = true;
  // Outside the hypotheses the conclusion can fail.
  const auto r = check(TheoremId::lem1a, fixture("fig3G2"), "fig3G2", loose);
  CHECK_FALSE(r.applicable);
  CHECK(r.failed());
  CHECK(r.counterexample["intersection"] == nlohmann::json({"x", "y", "z"}));

  SweepOptions options;
  options.check = loose;
  const std::vector<TheoremId> ids{TheoremId::lem1a, TheoremId::th4b, TheoremId::kercore};
  const auto summary = sweep(FamilySpec{.kind = FamilyKind::fixtures}, ids, options);
  CHECK_FALSE(summary.failures.empty());
  CHECK_FALSE(summary.ok());
  for (const auto& f : summary.failures) {
    const auto again = check(f.report.theorem, parse_edge_list(f.graph), f.graph_id, loose);
    CHECK(again.failed());
    CHECK(again.counterexample == f.report.counterexample);
  }
  CHECK(std::is_sorted(summary.failures.begin(), summary.failures.end(),
                       [](const SweepFailure& a, const SweepFailure& b) {
                         return a.graph < b.graph;
                       }));
}

TEST_CASE("sweeps are exhaustive and clean") {
  const auto all = all_theorems();
  const auto s = sweep(FamilySpec{.kind = FamilyKind::unicyclic, .min_n = 3, .max_n = 8}, all);
  CHECK(s.graphs_tested == 143);
  CHECK(s.failures.empty());
  CHECK_FALSE(s.truncated);
  CHECK(s.ok());
  for (const auto& t : s.tallies) CHECK(t.held == t.applicable);

  const std::vector<TheoremId> th2b{TheoremId::th2b};
  const auto trees = sweep(FamilySpec{.kind = FamilyKind::trees, .min_n = 1, .max_n = 9}, th2b);
  CHECK(trees.graphs_tested == 1 + 1 + 1 + 2 + 3 + 6 + 11 + 23 + 47);
  CHECK(trees.tallies[0].applicable == trees.graphs_tested);
  CHECK(trees.ok());

  const std::vector<TheoremId> fuzz{TheoremId::zhang, TheoremId::th2a};
  const auto random = sweep(FamilySpec{.kind = FamilyKind::random_connected, .min_n = 1,
                                       .max_n = 12, .count = 200, .seed = 7},
                            fuzz);
  CHECK(random.graphs_tested == 200);
  CHECK(random.ok());
}

TEST_CASE("sweeps are deterministic across worker counts") {
  const std::vector<TheoremId> ids{TheoremId::main, TheoremId::th4b, TheoremId::zhang,
                                   TheoremId::lem1a};
  SweepOptions one;
  one.workers = 1;
  one.check.ignore_hypotheses = true;
  SweepOptions four = one;
  four.workers = 4;
  const FamilySpec family{.kind = FamilyKind::unicyclic, .min_n = 3, .max_n = 8};
  const auto a = sweep(family, ids, one).to_json().dump();
  const auto b = sweep(family, ids, four).to_json().dump();
  const auto c = sweep(family, ids, four).to_json().dump();
  CHECK(a == b);
  CHECK(b == c);
}

TEST_CASE("fail fast stops early") {
  SweepOptions options;
  options.fail_fast = true;
  options.workers = 1;
  options.check.ignore_hypotheses = true;
  const std::vector<TheoremId> ids{TheoremId::th4b};
  const auto s = sweep(FamilySpec{.kind = FamilyKind::unicyclic, .min_n = 3, .max_n = 7}, ids,
                       options);
  CHECK(s.truncated);
  CHECK(s.failures.size() == 1);
  CHECK(s.graphs_tested < 54);
}

TEST_CASE("budget overruns truncate the sweep") {
  SweepOptions options;
  options.check.budget.max_subset_n = 5;
  const std::vector<TheoremId> ids{TheoremId::zhang};
  const auto s =
      sweep(FamilySpec{.kind = FamilyKind::unicyclic, .min_n = 3, .max_n = 7}, ids, options);
  CHECK(s.truncated);
  CHECK(s.failures.empty());
  CHECK(s.graphs_tested == 1 + 2 + 5);
  CHECK_FALSE(s.ok());
  CHECK(s.truncation_reason.find("unicyclic:6:0") != std::string::npos);
}

TEST_CASE("problem one partition") {
  CHECK(search_problem1(3).core_equals_ker.empty());
  CHECK(search_problem1(3).core_differs_from_ker.empty());
  CHECK(search_problem1(3).graphs_examined == 1);

  const auto report = search_problem1(7);
  CHECK_FALSE(report.core_equals_ker.empty());
  CHECK_FALSE(report.core_differs_from_ker.empty());
  auto codes = [](const std::vector<Problem1Entry>& entries) {
    std::set<std::string> out;
    for (const auto& e : entries) out.insert(canonical_code(e.graph.graph));
    return out;
  };
  const auto equal = codes(report.core_equals_ker);
  const auto differ = codes(report.core_differs_from_ker);
  CHECK(equal.contains(canonical_code(fixture("fig3G2"))));
  CHECK(differ.contains(canonical_code(family_g2k1(1))));
  for (const auto& e : report.core_differs_from_ker) CHECK(e.core != e.ker);
  for (const auto& e : report.core_equals_ker) CHECK(e.core == e.ker);

  const auto larger = search_problem1(9);
  CHECK(codes(larger.core_differs_from_ker).contains(canonical_code(fixture("fig3G1"))));
  CHECK(codes(larger.core_differs_from_ker).contains(canonical_code(family_g2k1(2))));

  const auto j = report.to_json(2);
  CHECK(j["core_equals_ker"]["exemplars"].size() == 2);
  CHECK(j["core_differs_from_ker"]["count"] == report.core_differs_from_ker.size());
}

TEST_CASE("problem two histogram") {
  const auto uni =
      search_problem2(FamilySpec{.kind = FamilyKind::unicyclic, .min_n = 3, .max_n = 7});
  REQUIRE(uni.buckets.size() == 2);
  CHECK(uni.buckets[0].defect == 0);
  CHECK(uni.buckets[1].defect == 1);
  CHECK(uni.buckets[0].count + uni.buckets[1].count == uni.graphs_examined);
  CHECK(uni.buckets[0].exemplars.size() == 3);

  const auto con =
      search_problem2(FamilySpec{.kind = FamilyKind::connected, .min_n = 1, .max_n = 6});
  CHECK(con.graphs_examined == 1 + 1 + 2 + 6 + 21 + 112);
  std::size_t total = 0;
  for (const auto& b : con.buckets) total += b.count;
  CHECK(total == con.graphs_examined);
  CHECK(std::is_sorted(con.buckets.begin(), con.buckets.end(),
                       [](const DefectBucket& a, const DefectBucket& b) {
                         return a.defect < b.defect;
                       }));
}

}  // TEST_SUITE
