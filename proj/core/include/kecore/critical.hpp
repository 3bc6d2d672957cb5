#pragma once

#include <optional>
#include <vector>

#include "kecore/budget.hpp"
#include "kecore/graph.hpp"

namespace kecore {

/// d(X) = |X| - |N(X)|.
int difference(const Graph& g, const VertexSet& x);

struct CriticalReport {
  /// d_c: maximum of d(X) over all vertex subsets.
  int critical_difference = 0;
  /// id_c: maximum of d(I) over independent subsets, computed separately.
  int critical_independence_difference = 0;
  /// A set attaining d_c (first in subset order).
  VertexSet witness;
  /// Every independent set attaining id_c, canonical order.
  std::vector<VertexSet> critical_independent_sets;
  /// Intersection of the critical independent sets.
  VertexSet ker;
};

/// Sweeps all 2^n subsets. Requires n <= budget.max_subset_n.
CriticalReport critical_difference_bruteforce(const Graph& g,
                                              const Budget& budget = {});

/// Two copies of V, with u joined to v' and v to u' for every edge uv.
/// Copy labels carry a trailing apostrophe; originals come first.
Graph bipartite_double_cover(const Graph& g);

struct CriticalFastOptions {
  /// Also run the subset sweep (when within budget) and compare.
  bool cross_check = false;
};

/// d_c from alpha of the bipartite double cover minus n. A cross-check
/// mismatch permanently disables the shortcut for the process; after that
/// (or when disabled explicitly) the subset sweep is used.
int critical_difference_fast(const Graph& g, const Budget& budget = {},
                             CriticalFastOptions options = {});

bool double_cover_shortcut_enabled() noexcept;
void set_double_cover_shortcut_enabled(bool enabled) noexcept;

/// Intersection of all critical independent sets. Bipartite graphs and
/// non-König-Egerváry unicyclic graphs use core(G); everything else the
/// subset sweep.
VertexSet ker(const Graph& g, const Budget& budget = {});

}  // namespace kecore
