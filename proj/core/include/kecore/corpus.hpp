#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kecore/budget.hpp"
#include "kecore/graph.hpp"

namespace kecore {

// ------------------------------------------------------------- fixtures

/// Names of the bundled fixtures: fig1, fig2G, fig2Tx, fig3G1, fig3G2,
/// fig4G1, fig4G2, fig6G1, fig6G2, P2, P3, C4, C5, K1, K3.
std::span<const std::string_view> fixture_names();

/// Edge-list text of a fixture. Throws DomainError for unknown names.
std::string_view fixture_text(std::string_view name);

Graph fixture(std::string_view name);

/// Vertices x, y, z, v1..v_{2k+1}, w; path x-y-v1-...-v_{2k+1}, pendant z
/// on y, and the triangle v_{2k}, v_{2k+1}, w. Requires k >= 1.
Graph family_g2k1(int k);

// ----------------------------------------------------------- generators

/// Tree with labels "1".."n" decoded from a Prüfer sequence of length n-2
/// over 0..n-1.
Graph decode_pruefer(std::span<const Vertex> sequence, std::size_t n);

/// Visitor returns false to stop the stream early.
using GraphVisitor = std::function<bool(const Graph&)>;

/// Every labelled tree on n vertices (n^(n-2) of them), or with `dedupe`
/// one canonical representative per isomorphism class.
void enumerate_trees(std::size_t n, bool dedupe, const Budget& budget,
                     const GraphVisitor& visit);

/// One representative per isomorphism class of trees on n vertices, built
/// by attaching a leaf to each class on n-1 vertices.
std::vector<Graph> unlabeled_trees(std::size_t n);

/// Every connected unicyclic graph on n >= 3 vertices, as a tree plus one
/// non-edge. Labelled mode emits each labelled graph once; dedupe mode one
/// representative per isomorphism class (n <= budget.max_dedupe_n).
void enumerate_unicyclic(std::size_t n, bool dedupe, const Budget& budget,
                         const GraphVisitor& visit);

std::vector<Graph> unlabeled_unicyclic(std::size_t n, const Budget& budget = {});

/// One representative per isomorphism class of connected graphs on n
/// vertices (n <= budget.max_dedupe_n).
std::vector<Graph> unlabeled_connected(std::size_t n, const Budget& budget = {});

Graph random_tree(std::size_t n, std::uint64_t seed);

/// Uniform labelled tree plus one uniformly chosen non-edge. Requires n >= 3.
Graph random_unicyclic(std::size_t n, std::uint64_t seed);

/// Uniform labelled spanning tree plus each remaining pair with a density
/// drawn per graph from [0.05, 0.55].
Graph random_connected(std::size_t n, std::uint64_t seed);

/// Random bipartite connected graph: random tree plus random cross edges
/// between the tree's colour classes.
Graph random_bipartite(std::size_t n, std::uint64_t seed);

// -------------------------------------------------------------- families

enum class FamilyKind {
  fixtures,
  trees,
  unicyclic,
  connected,
  random_connected,
  random_unicyclic,
  g2k1,
};

struct NamedGraph {
  std::string id;
  Graph graph;
};

/// A deterministic stream of graphs.
struct FamilySpec {
  FamilyKind kind = FamilyKind::unicyclic;
  std::size_t min_n = 1;
  std::size_t max_n = 0;
  /// Random families: number of graphs; n is drawn from [min_n, max_n].
  std::size_t count = 0;
  std::uint64_t seed = 0;
  bool dedupe = true;

  std::string describe() const;
};

using NamedGraphVisitor = std::function<bool(const NamedGraph&)>;

void for_each_graph(const FamilySpec& family, const Budget& budget,
                    const NamedGraphVisitor& visit);

std::vector<NamedGraph> collect(const FamilySpec& family, const Budget& budget = {});

FamilyKind parse_family_kind(std::string_view name);
std::string_view to_string(FamilyKind kind);

}  // namespace kecore
