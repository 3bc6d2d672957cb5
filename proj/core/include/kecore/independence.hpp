#pragma once

#include <cstddef>
#include <vector>

#include "kecore/budget.hpp"
#include "kecore/graph.hpp"

namespace kecore {

/// How alpha() evaluates each connected component.
enum class AlphaMethod {
  /// Trees: rooted dynamic program. Unicyclic: split on a cycle vertex u,
  /// alpha = max(alpha(G-u), 1 + alpha(G-N[u])). Otherwise branch and bound.
  automatic,
  /// Branch and bound on every component, regardless of shape.
  branch_and_bound,
};

bool is_independent(const Graph& g, const VertexSet& s);

/// Exact independence number. Throws BudgetExceeded when a component that is
/// neither a tree nor unicyclic has more than budget.max_branch_n vertices.
std::size_t alpha(const Graph& g, const Budget& budget = {},
                  AlphaMethod method = AlphaMethod::automatic);

/// alpha(G - W) without materialising the subgraph.
std::size_t alpha_without(const Graph& g, const VertexSet& removed,
                          const Budget& budget = {},
                          AlphaMethod method = AlphaMethod::automatic);

/// All maximum independent sets, in canonical order.
struct MisFamily {
  std::size_t alpha = 0;
  std::vector<VertexSet> sets;
};

/// Requires n <= budget.max_enum_n. The graph with no vertices yields {∅}.
MisFamily enumerate_mis(const Graph& g, const Budget& budget = {});

/// Vertices in every maximum independent set: alpha(G-v) = alpha(G) - 1.
VertexSet core(const Graph& g, const Budget& budget = {});

/// Vertices in some maximum independent set: alpha(G-N[v]) = alpha(G) - 1.
VertexSet corona(const Graph& g, const Budget& budget = {});

/// alpha(G-e) > alpha(G). Throws DomainError if e is not an edge of g.
bool is_alpha_critical_edge(const Graph& g, const Edge& e,
                            const Budget& budget = {});

}  // namespace kecore
