#include <doctest.h>

#include "kecore/corpus.hpp"
#include "kecore/critical.hpp"
#include "kecore/edge_list.hpp"
#include "kecore/errors.hpp"
#include "kecore/independence.hpp"
#include "kecore/matching.hpp"
#include "kecore/unicyclic.hpp"

using namespace kecore;

namespace {

std::vector<std::string> cycle_labels(const Graph& g, const UnicyclicDecomposition& d) {
  std::vector<std::string> out;
  for (Vertex v : d.cycle) out.push_back(g.label(v));
  return out;
}

}  // namespace

TEST_SUITE("unicyclic") {

TEST_CASE("decompose a cycle with one pendant tree") {
  const auto g = fixture("fig2G");
  const auto d = decompose(g);
  CHECK(d.cycle_set.to_string() == "{c,d,t,w,y}");
  CHECK(cycle_labels(g, d) == std::vector<std::string>{"c", "t", "d", "y", "w"});
  CHECK(d.attachments.to_string() == "{x}");
  REQUIRE(d.pendants.size() == 1);
  CHECK(g.label(d.pendants[0].root) == "x");
  CHECK(g.label(d.pendants[0].anchor) == "y");
  CHECK(serialize(d.pendants[0].tree) == serialize(fixture("fig2Tx")));
}

TEST_CASE("decompose a bare cycle and a triangle with a pendant tree") {
  const auto c5 = fixture("C5");
  const auto d = decompose(c5);
  CHECK(d.cycle_set == c5.all_vertices());
  CHECK(cycle_labels(c5, d) == std::vector<std::string>{"a", "b", "c", "d", "e"});
  CHECK(d.attachments.empty());
  CHECK(d.pendants.empty());

  const auto fig1 = fixture("fig1");
  const auto e = decompose(fig1);
  CHECK(e.cycle_set.to_string() == "{v,x,y}");
  CHECK(e.attachments.to_string() == "{c}");
  REQUIRE(e.pendants.size() == 1);
  CHECK(e.pendants[0].tree.order() == 4);
  CHECK(lift(fig1, e.pendants[0].tree, e.pendants[0].tree.all_vertices()).to_string() ==
        "{a,b,c,u}");
}

TEST_CASE("decomposition invariants") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto g = random_unicyclic(3 + seed % 15, seed);
    const auto d = decompose(g);
    // Closed walk without repeats.
    for (std::size_t i = 0; i < d.cycle.size(); ++i) {
      CHECK(g.adjacent(d.cycle[i], d.cycle[(i + 1) % d.cycle.size()]));
    }
    CHECK(d.cycle_set.size() == d.cycle.size());
    CHECK(g.label(d.cycle.front()) == d.cycle_set.labels().front());
    std::size_t covered = d.cycle.size();
    auto seen = d.cycle_set;
    for (const auto& p : d.pendants) {
      std::size_t on_cycle = 0;
      for (Vertex w : g.neighbors(p.root)) on_cycle += d.cycle_set.contains(w);
      CHECK(on_cycle == 1);
      CHECK(d.cycle_set.contains(p.anchor));
      CHECK(classify_shape(p.tree).kind == ShapeKind::tree);
      const auto part = lift(g, p.tree, p.tree.all_vertices());
      CHECK_FALSE(part.intersects(seen));
      seen = seen | part;
      covered += p.tree.order();
    }
    CHECK(covered == g.order());
    CHECK(seen == g.all_vertices());
  }
}

TEST_CASE("decompose rejects other shapes") {
  CHECK_THROWS_AS(decompose(fixture("P3")), PreconditionError);
  CHECK_THROWS_AS(decompose(fixture("fig4G1")), PreconditionError);
  CHECK_THROWS_AS(decompose(parse_edge_list("a b\nb c\nc a\nnode z")), PreconditionError);
}

TEST_CASE("ke classification") {
  const auto fig2 = classify_ke_unicyclic(fixture("fig2G"));
  CHECK_FALSE(fig2.ke);
  CHECK(fig2.alpha_plus_mu == 9);
  CHECK(fig2.cycle_edges_alpha_critical);
  const auto fig1 = classify_ke_unicyclic(fixture("fig1"));
  CHECK(fig1.ke);
  CHECK(fig1.alpha_plus_mu == 7);
  CHECK_FALSE(fig1.cycle_edges_alpha_critical);
  const auto c5 = classify_ke_unicyclic(fixture("C5"));
  CHECK_FALSE(c5.ke);
  CHECK(c5.alpha_plus_mu == 4);
  CHECK_THROWS_AS(classify_ke_unicyclic(fixture("P3")), PreconditionError);
}

TEST_CASE("structural core, corona and ker") {
  const auto fig2 = fixture("fig2G");
  CHECK(structural_core(fig2).to_string() == "{a,b}");
  CHECK(structural_corona(fig2).to_string() == "{a,b,c,d,t,u,v,w,y}");
  CHECK(structural_ker(fig2).to_string() == "{a,b}");
  const auto c5 = fixture("C5");
  CHECK(structural_core(c5).empty());
  CHECK(structural_corona(c5) == c5.all_vertices());
  CHECK(structural_ker(c5).empty());
  const auto fig4 = fixture("fig4G2");
  CHECK(structural_core(fig4).to_string() == "{x,y}");
  CHECK(structural_corona(fig4) == fig4.all_vertices() - fig4.set_of({"p"}));
  CHECK(structural_corona(fig4).size() == 7);
}

TEST_CASE("structural routines refuse koenig-egervary inputs") {
  const auto g3 = family_g2k1(1);
  CHECK_THROWS_AS(structural_ker(g3), PreconditionError);
  CHECK_THROWS_AS(structural_core(fixture("fig1")), PreconditionError);
  CHECK_THROWS_AS(structural_corona(fixture("fig3G2")), PreconditionError);
  CHECK_THROWS_AS(structural_core(fixture("P3")), PreconditionError);
}

TEST_CASE("structural routines agree with brute force on random graphs") {
  std::size_t non_ke = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const auto g = random_unicyclic(3 + seed % 12, seed);
    if (is_koenig_egervary(g)) continue;
    ++non_ke;
    const auto c = core(g);
    CHECK(structural_core(g) == c);
    CHECK(structural_corona(g) == corona(g));
    CHECK(structural_ker(g) == critical_difference_bruteforce(g).ker);
    CHECK(structural_ker(g) == c);
  }
  CHECK(non_ke > 20);
}

TEST_CASE("cycle-edge criticality decides koenig-egervary both ways") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto g = random_unicyclic(3 + seed % 14, seed);
    const auto k = classify_ke_unicyclic(g);
    CHECK(k.alpha_plus_mu + 1 >= g.order());
    CHECK(k.alpha_plus_mu <= g.order());
    CHECK(k.ke == (k.alpha_plus_mu == g.order()));
    CHECK((k.alpha_plus_mu + 1 == g.order()) == k.cycle_edges_alpha_critical);
  }
}

}  // TEST_SUITE
