#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kecore/budget.hpp"
#include "kecore/graph.hpp"

namespace kecore {

/// Set of pairwise non-incident edges of one graph.
class Matching {
 public:
  /// Throws DomainError if an edge is missing from g or two edges share an
  /// endpoint.
  Matching(const Graph& g, std::vector<Edge> edges);

  bool belongs_to(const Graph& g) const noexcept { return owner_ == g.data(); }

  std::size_t size() const noexcept { return edges_.size(); }
  /// Edges sorted by index pair.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool covers(Vertex v) const { return mate_.at(v) != kUnmatched; }
  std::optional<Vertex> mate(Vertex v) const;

  /// Edges as label pairs "a-u", smaller label first, natural order.
  std::vector<std::string> labels() const;
  std::string to_string() const;

  friend bool operator==(const Matching& a, const Matching& b) {
    return a.owner_ == b.owner_ && a.edges_ == b.edges_;
  }

 private:
  static constexpr Vertex kUnmatched = ~Vertex{0};

  std::shared_ptr<const detail::GraphData> owner_;
  std::vector<Edge> edges_;
  std::vector<Vertex> mate_;
};

bool canonical_matching_less(const Matching& a, const Matching& b);

enum class MatchingMethod {
  /// Leaf stripping when every component has at most one cycle, augmenting
  /// paths when bipartite, blossom contraction otherwise.
  automatic,
  /// Requires every component to have m <= n (PreconditionError otherwise).
  leaf_stripping,
  /// Hopcroft-Karp; requires a bipartite graph (PreconditionError otherwise).
  bipartite,
  /// Edmonds' blossom algorithm; any graph.
  blossom,
};

Matching maximum_matching(const Graph& g,
                          MatchingMethod method = MatchingMethod::automatic);

std::size_t mu(const Graph& g, MatchingMethod method = MatchingMethod::automatic);

/// alpha(G) + mu(G) = n.
bool is_koenig_egervary(const Graph& g, const Budget& budget = {});

/// A matching using only edges between A and B that covers every vertex of
/// A, or nullopt when none exists. A and B must be disjoint sets of g.
std::optional<Matching> saturating_matching(const Graph& g, const VertexSet& a,
                                            const VertexSet& b);

/// mu(G-e) < mu(G). Throws DomainError if e is not an edge of g.
bool is_mu_critical_edge(const Graph& g, const Edge& e);

/// Every maximum matching, canonical order. Throws BudgetExceeded when
/// n > budget.max_enum_n or more than `limit` matchings exist.
std::vector<Matching> enumerate_maximum_matchings(const Graph& g,
                                                  std::size_t limit,
                                                  const Budget& budget = {});

}  // namespace kecore
