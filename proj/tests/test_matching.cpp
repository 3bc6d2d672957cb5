#include <doctest.h>

#include "kecore/corpus.hpp"
#include "kecore/edge_list.hpp"
#include "kecore/errors.hpp"
#include "kecore/independence.hpp"
#include "kecore/matching.hpp"
#include "oracles.hpp"

using namespace kecore;

TEST_SUITE("matching") {

TEST_CASE("maximum matching on fixtures") {
  const auto fig1 = fixture("fig1");
  const auto m = maximum_matching(fig1);
  CHECK(m.size() == 3);
  CHECK(mu(fixture("C5")) == 2);
  CHECK(mu(fixture("fig4G2")) == 3);
  CHECK(oracle::mu(fixture("fig4G2")) == 3);
  CHECK(mu(fixture("K1")) == 0);
  CHECK(oracle::mu(fixture("fig2G")) == 4);
  CHECK(mu(fixture("fig2G")) == 4);
  CHECK(mu(Graph()) == 0);
}

TEST_CASE("matching validation") {
  const auto p3 = fixture("P3");
  CHECK_THROWS_AS(Matching(p3, {p3.edge("a", "b"), p3.edge("b", "c")}), DomainError);
  CHECK_THROWS_AS(Matching(p3, {Edge(0, 2)}), DomainError);
  const Matching m(p3, {p3.edge("b", "c")});
  CHECK(m.covers(p3.index_of("b")));
  CHECK_FALSE(m.covers(p3.index_of("a")));
  CHECK(m.mate(p3.index_of("c")) == p3.index_of("b"));
  CHECK(m.labels() == std::vector<std::string>{"b-c"});
}

TEST_CASE("every method agrees with the oracle") {
  auto check_graph = [](const Graph& g) {
    const auto expected = static_cast<std::size_t>(oracle::mu(g));
    const auto m = maximum_matching(g);
    CHECK(m.size() == expected);
    CHECK(mu(g, MatchingMethod::blossom) == expected);
    const auto shape = classify_shape(g);
    if (shape.bipartite) CHECK(mu(g, MatchingMethod::bipartite) == expected);
    if (shape.kind == ShapeKind::tree || shape.kind == ShapeKind::unicyclic) {
      CHECK(mu(g, MatchingMethod::leaf_stripping) == expected);
    }
  };
  for (auto name : fixture_names()) check_graph(fixture(name));
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 1 + seed % 14;
    check_graph(random_connected(n, seed));
    check_graph(random_tree(n, seed));
    check_graph(random_bipartite(n, seed));
    if (n >= 3) check_graph(random_unicyclic(n, seed));
  }
}

TEST_CASE("method preconditions") {
  CHECK_THROWS_AS(mu(fixture("K3"), MatchingMethod::bipartite), PreconditionError);
  CHECK_THROWS_AS(mu(fixture("fig4G1"), MatchingMethod::leaf_stripping), PreconditionError);
}

TEST_CASE("koenig-egervary test") {
  CHECK(is_koenig_egervary(fixture("fig1")));
  CHECK_FALSE(is_koenig_egervary(fixture("C5")));
  CHECK_FALSE(is_koenig_egervary(fixture("fig2G")));
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    CHECK(is_koenig_egervary(random_tree(1 + seed % 20, seed)));
    CHECK(is_koenig_egervary(random_bipartite(1 + seed % 16, seed)));
  }
}

TEST_CASE("alpha plus mu bounds on connected graphs") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 1 + seed % 14;
    const auto g = random_connected(n, seed);
    const auto sum = alpha(g) + mu(g);
    CHECK(sum >= n / 2 + 1);
    CHECK(sum <= n);
  }
}

TEST_CASE("saturating matchings") {
  const auto p3 = fixture("P3");
  const auto m = saturating_matching(p3, p3.set_of({"b"}), p3.set_of({"a", "c"}));
  REQUIRE(m);
  CHECK(m->size() == 1);
  CHECK_FALSE(saturating_matching(p3, p3.set_of({"a", "c"}), p3.set_of({"b"})));
  CHECK_THROWS_AS(saturating_matching(p3, p3.set_of({"a", "b"}), p3.set_of({"b"})),
                  DomainError);
  const auto empty = saturating_matching(p3, p3.empty_set(), p3.set_of({"b"}));
  REQUIRE(empty);
  CHECK(empty->size() == 0);

  const auto fig3 = fixture("fig3G2");
  const auto c = core(fig3);
  const auto from = neighborhood(fig3, c);
  CHECK(from.to_string() == "{p,q}");
  const auto into = saturating_matching(fig3, from, c);
  REQUIRE(into);
  CHECK(into->size() == 2);
  for (const auto& e : into->edges()) {
    CHECK(from.contains(e.u) != from.contains(e.v));
    CHECK((c.contains(e.u) || c.contains(e.v)));
  }
}

TEST_CASE("saturating matchings use only cross edges") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto g = random_connected(2 + seed % 12, seed);
    std::vector<Vertex> a_members;
    std::vector<Vertex> b_members;
    for (Vertex v = 0; v < g.order(); ++v) ((v * 7 + seed) % 3 == 0 ? a_members : b_members).push_back(v);
    const auto a = g.set_of_indices(a_members);
    const auto b = g.set_of_indices(b_members);
    const auto m = saturating_matching(g, a, b);
    if (!m) continue;
    CHECK(m->size() == a.size());
    for (Vertex v : a) CHECK(m->covers(v));
    for (const auto& e : m->edges()) CHECK(a.contains(e.u) != a.contains(e.v));
  }
}

TEST_CASE("mu-critical edges") {
  const auto p2 = fixture("P2");
  CHECK(is_mu_critical_edge(p2, p2.edge("a", "b")));
  const auto c4 = fixture("C4");
  for (const auto& e : c4.edges()) CHECK_FALSE(is_mu_critical_edge(c4, e));
  const auto c5 = fixture("C5");
  for (const auto& e : c5.edges()) CHECK_FALSE(is_mu_critical_edge(c5, e));
  CHECK_THROWS_AS(is_mu_critical_edge(c5, Edge(0, 2)), DomainError);
}

TEST_CASE("maximum matching enumeration") {
  const auto p3 = fixture("P3");
  const auto p3_all = enumerate_maximum_matchings(p3, 100);
  REQUIRE(p3_all.size() == 2);
  CHECK(p3_all[0].labels() == std::vector<std::string>{"a-b"});
  CHECK(p3_all[1].labels() == std::vector<std::string>{"b-c"});
  CHECK(enumerate_maximum_matchings(fixture("C4"), 100).size() == 2);

  const auto fig1 = fixture("fig1");
  const auto all = enumerate_maximum_matchings(fig1, 1000);
  const Matching expected(fig1, {fig1.edge("a", "u"), fig1.edge("c", "v"), fig1.edge("x", "y")});
  CHECK(std::find(all.begin(), all.end(), expected) != all.end());

  CHECK_THROWS_AS(enumerate_maximum_matchings(fixture("C4"), 1), BudgetExceeded);
  Budget tight;
  tight.max_enum_n = 3;
  CHECK_THROWS_AS(enumerate_maximum_matchings(fixture("C4"), 100, tight), BudgetExceeded);
}

TEST_CASE("enumeration count matches the oracle") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const auto g = random_connected(1 + seed % 11, seed);
    const auto all = enumerate_maximum_matchings(g, 1'000'000);
    CHECK(static_cast<long>(all.size()) == oracle::count_maximum_matchings(g));
    for (const auto& m : all) CHECK(m.size() == mu(g));
    CHECK(std::is_sorted(all.begin(), all.end(), canonical_matching_less));
    for (std::size_t i = 1; i < all.size(); ++i) CHECK_FALSE(all[i - 1] == all[i]);
  }
}

}  // TEST_SUITE
