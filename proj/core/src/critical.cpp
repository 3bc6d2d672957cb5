#include "kecore/critical.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <iostream>
#include <string>

#include "kecore/errors.hpp"
#include "kecore/independence.hpp"
#include "kecore/matching.hpp"

namespace kecore {

namespace {

std::atomic<bool> g_shortcut_enabled{true};

std::vector<Vertex> members_of(std::uint32_t mask) {
  std::vector<Vertex> out;
  while (mask) {
    out.push_back(static_cast<Vertex>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

}  // namespace

int difference(const Graph& g, const VertexSet& x) {
  return static_cast<int>(x.size()) -
         static_cast<int>(neighborhood(g, x).size());
}

CriticalReport critical_difference_bruteforce(const Graph& g,
                                              const Budget& budget) {
  const int cap = std::min(budget.max_subset_n, 26);
  if (g.order() > static_cast<std::size_t>(cap)) {
    throw BudgetExceeded("subset sweep on " + std::to_string(g.order()) +
                         " vertices exceeds cap " + std::to_string(cap));
  }
  const int n = static_cast<int>(g.order());
  std::vector<std::uint32_t> nb(n, 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex w : g.neighbors(v)) nb[v] |= std::uint32_t{1} << w;
  }
  const std::uint32_t count = std::uint32_t{1} << n;
  // N(X) and independence of X extend from X minus its lowest member.
  std::vector<std::uint32_t> neigh(count, 0);
  std::vector<char> independent(count, 0);
  independent[0] = 1;
  int best_all = 0;
  std::uint32_t best_all_mask = 0;
  int best_ind = 0;
  for (std::uint32_t mask = 1; mask < count; ++mask) {
    const int low = std::countr_zero(mask);
    const std::uint32_t rest = mask & (mask - 1);
    neigh[mask] = neigh[rest] | nb[low];
    independent[mask] = independent[rest] && !(nb[low] & rest);
    const int d = std::popcount(mask) - std::popcount(neigh[mask]);
    if (d > best_all) {
      best_all = d;
      best_all_mask = mask;
    }
    if (independent[mask] && d > best_ind) best_ind = d;
  }
  std::vector<VertexSet> critical;
  std::uint32_t kernel = count - 1;
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    if (!independent[mask]) continue;
    if (std::popcount(mask) - std::popcount(neigh[mask]) != best_ind) continue;
    critical.push_back(g.set_of_indices(members_of(mask)));
    kernel &= mask;
  }
  std::sort(critical.begin(), critical.end(), canonical_set_less);
  return CriticalReport{
      .critical_difference = best_all,
      .critical_independence_difference = best_ind,
      .witness = g.set_of_indices(members_of(best_all_mask)),
      .critical_independent_sets = std::move(critical),
      .ker = g.set_of_indices(members_of(kernel)),
  };
}

Graph bipartite_double_cover(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  std::vector<std::string> labels;
  labels.reserve(2 * n);
  for (const auto& l : g.labels()) labels.push_back(l);
  for (const auto& l : g.labels()) labels.push_back(l + "'");
  std::vector<Edge> edges;
  edges.reserve(2 * g.size());
  for (const auto& e : g.edges()) {
    edges.emplace_back(e.u, e.v + n);
    edges.emplace_back(e.v, e.u + n);
  }
  return Graph::from_edges(std::move(labels), edges);
}

bool double_cover_shortcut_enabled() noexcept { return g_shortcut_enabled.load(); }

void set_double_cover_shortcut_enabled(bool enabled) noexcept {
  g_shortcut_enabled.store(enabled);
}

int critical_difference_fast(const Graph& g, const Budget& budget,
                             CriticalFastOptions options) {
  if (!double_cover_shortcut_enabled()) {
    return critical_difference_bruteforce(g, budget).critical_difference;
  }
  // The cover is bipartite, so its independence number is 2n - mu.
  const Graph cover = bipartite_double_cover(g);
  const auto cover_alpha =
      cover.order() - mu(cover, MatchingMethod::bipartite);
  const int fast = static_cast<int>(cover_alpha) - static_cast<int>(g.order());
  if (options.cross_check &&
      g.order() <= static_cast<std::size_t>(budget.max_subset_n)) {
    const int exact = critical_difference_bruteforce(g, budget).critical_difference;
    if (exact != fast) {
      std::cerr << "kecore: double-cover critical difference " << fast
                << " disagrees with subset sweep " << exact
                << "; shortcut disabled\n";
      set_double_cover_shortcut_enabled(false);
      return exact;
    }
  }
  return fast;
}

VertexSet ker(const Graph& g, const Budget& budget) {
  const auto shape = classify_shape(g);
  if (shape.bipartite) return core(g, budget);
  if (shape.kind == ShapeKind::unicyclic && !is_koenig_egervary(g, budget)) {
    return core(g, budget);
  }
  return critical_difference_bruteforce(g, budget).ker;
}

}  // namespace kecore
