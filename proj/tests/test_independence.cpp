#include <doctest.h>

#include "kecore/corpus.hpp"
#include "kecore/edge_list.hpp"
#include "kecore/errors.hpp"
#include "kecore/independence.hpp"
#include "oracles.hpp"

using namespace kecore;

namespace {

std::vector<std::string> labels_of(const std::vector<VertexSet>& sets) {
  std::vector<std::string> out;
  for (const auto& s : sets) out.push_back(s.to_string());
  return out;
}

}  // namespace

TEST_SUITE("independence") {

TEST_CASE("independent sets") {
  const auto p3 = fixture("P3");
  CHECK(is_independent(p3, p3.set_of({"a", "c"})));
  CHECK_FALSE(is_independent(p3, p3.set_of({"a", "b"})));
  const auto fig1 = fixture("fig1");
  CHECK(is_independent(fig1, fig1.set_of({"a", "b", "c", "x"})));
  CHECK(is_independent(p3, p3.empty_set()));
}

TEST_CASE("alpha on small fixtures") {
  CHECK(alpha(fixture("fig1")) == 4);
  CHECK(alpha(fixture("C5")) == 2);
  CHECK(alpha(fixture("K1")) == 1);
  CHECK(alpha(fixture("K3")) == 1);
  CHECK(alpha(Graph()) == 0);
  // Frozen oracle value.
  CHECK(oracle::alpha(fixture("fig2G")) == 5);
  CHECK(alpha(fixture("fig2G")) == 5);
}

TEST_CASE("alpha dispatch agrees with branch and bound and the oracle") {
  for (auto name : fixture_names()) {
    const auto g = fixture(name);
    const auto expected = static_cast<std::size_t>(oracle::alpha(g));
    CHECK_MESSAGE(alpha(g) == expected, name);
    CHECK_MESSAGE(alpha(g, {}, AlphaMethod::branch_and_bound) == expected, name);
  }
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 1 + seed % 14;
    for (const auto& g : {random_connected(n, seed), random_tree(n, seed)}) {
      const auto expected = static_cast<std::size_t>(oracle::alpha(g));
      CHECK(alpha(g) == expected);
      CHECK(alpha(g, {}, AlphaMethod::branch_and_bound) == expected);
    }
    if (n >= 3) {
      const auto u = random_unicyclic(n, seed);
      CHECK(alpha(u) == static_cast<std::size_t>(oracle::alpha(u)));
    }
  }
}

TEST_CASE("alpha on disconnected graphs adds components") {
  const auto g = parse_edge_list("a b\nc d\nd e\ne c\nnode z");
  CHECK(alpha(g) == 3);
}

TEST_CASE("branch and bound budget") {
  const auto g = random_connected(30, 3);
  Budget tight;
  tight.max_branch_n = 10;
  CHECK_THROWS_AS(alpha(g, tight), BudgetExceeded);
  // Trees never need branching.
  CHECK(alpha(random_tree(200, 1), tight) > 0);
  CHECK(alpha(random_unicyclic(200, 1), tight) > 0);
}

TEST_CASE("maximum independent set enumeration") {
  const auto p2 = fixture("P2");
  CHECK(labels_of(enumerate_mis(p2).sets) == std::vector<std::string>{"{a}", "{b}"});
  const auto p3 = fixture("P3");
  CHECK(labels_of(enumerate_mis(p3).sets) == std::vector<std::string>{"{a,c}"});
  const auto g3 = family_g2k1(1);
  const auto family = enumerate_mis(g3);
  CHECK(family.alpha == 4);
  CHECK(labels_of(family.sets) == std::vector<std::string>{"{v1,v3,x,z}", "{v1,w,x,z}"});
  const auto empty = enumerate_mis(Graph());
  CHECK(empty.alpha == 0);
  REQUIRE(empty.sets.size() == 1);
  CHECK(empty.sets[0].empty());

  Budget tight;
  tight.max_enum_n = 5;
  CHECK_THROWS_AS(enumerate_mis(fixture("fig1"), tight), BudgetExceeded);
}

TEST_CASE("enumeration matches the oracle") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto g = random_connected(1 + seed % 12, seed);
    const auto family = enumerate_mis(g);
    auto expected = oracle::maximum_independent_sets(g);
    std::vector<oracle::Mask> got;
    for (const auto& s : family.sets) {
      CHECK(is_independent(g, s));
      CHECK(s.size() == family.alpha);
      got.push_back(oracle::to_mask(s));
    }
    std::sort(expected.begin(), expected.end());
    auto sorted = got;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == expected);
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    CHECK(std::is_sorted(family.sets.begin(), family.sets.end(), canonical_set_less));
  }
}

TEST_CASE("core and corona") {
  const auto fig3 = fixture("fig3G1");
  CHECK(core(fig3).to_string() == "{a,b,c}");
  const auto fig4 = fixture("fig4G2");
  CHECK(core(fig4).to_string() == "{x,y}");
  const auto c5 = fixture("C5");
  CHECK(core(c5).empty());
  CHECK(corona(c5) == c5.all_vertices());
  const auto p2 = fixture("P2");
  CHECK(corona(p2).to_string() == "{a,b}");
  const auto g3 = family_g2k1(1);
  CHECK(corona(g3).to_string() == "{v1,v3,w,x,z}");
  CHECK(core(g3).to_string() == "{v1,x,z}");
}

TEST_CASE("core and corona agree with enumeration") {
  auto check_graph = [](const Graph& g) {
    CHECK(oracle::to_mask(core(g)) == oracle::core(g));
    CHECK(oracle::to_mask(corona(g)) == oracle::corona(g));
    const auto c = core(g);
    const auto r = corona(g);
    for (const auto& s : enumerate_mis(g).sets) {
      CHECK(c.is_subset_of(s));
      CHECK(s.is_subset_of(r));
    }
  };
  for (auto name : fixture_names()) check_graph(fixture(name));
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    check_graph(random_connected(1 + seed % 12, seed));
    check_graph(random_unicyclic(3 + seed % 12, seed));
  }
}

TEST_CASE("alpha-critical edges") {
  const auto c5 = fixture("C5");
  for (const auto& e : c5.edges()) CHECK(is_alpha_critical_edge(c5, e));
  const auto p3 = fixture("P3");
  CHECK_FALSE(is_alpha_critical_edge(p3, p3.edge("a", "b")));
  const auto fig2 = fixture("fig2G");
  CHECK(is_alpha_critical_edge(fig2, fig2.edge("y", "d")));
  CHECK_THROWS_AS(is_alpha_critical_edge(c5, Edge(0, 2)), DomainError);
}

TEST_CASE("deleting an edge raises alpha by at most one") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto g = random_connected(2 + seed % 11, seed);
    const auto a = alpha(g);
    for (const auto& e : g.edges()) {
      const std::vector<Edge> one{e};
      const auto after = alpha(remove_edges(g, one));
      CHECK(a <= after);
      CHECK(after <= a + 1);
      CHECK(is_alpha_critical_edge(g, e) == (after == a + 1));
    }
  }
}

}  // TEST_SUITE
