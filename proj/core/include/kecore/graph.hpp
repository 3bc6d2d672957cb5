#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace kecore {

/// Dense vertex index, 0..n-1, assigned in order of first appearance.
using Vertex = std::uint32_t;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Natural ordering of labels: digit runs compare numerically, so v2 < v10.
bool label_less(std::string_view a, std::string_view b);

namespace detail {

struct GraphData {
  std::vector<std::string> labels;
  std::unordered_map<std::string, Vertex> index;
  std::vector<std::vector<Vertex>> adjacency;  // sorted neighbour lists
  std::size_t edge_count = 0;
};

}  // namespace detail

class VertexSet;

/// Immutable simple undirected graph with stable string labels.
///
/// Copies share the same underlying data and compare as the same graph for
/// ownership checks. Any operation that changes the vertex or edge set
/// produces a new, distinct graph.
class Graph {
 public:
  /// The graph with no vertices.
  Graph();

  /// Builds a graph from labels and index pairs. Throws DomainError on
  /// duplicate or empty labels, self-loops, duplicate edges, or out-of-range
  /// endpoints.
  static Graph from_edges(std::vector<std::string> labels,
                          std::span<const Edge> edges);

  /// Same, with edges named by label.
  static Graph from_label_edges(
      std::vector<std::string> labels,
      std::span<const std::pair<std::string, std::string>> edges);

  std::size_t order() const noexcept { return data_->labels.size(); }
  std::size_t size() const noexcept { return data_->edge_count; }

  const std::string& label(Vertex v) const { return data_->labels.at(v); }
  const std::vector<std::string>& labels() const noexcept {
    return data_->labels;
  }
  std::optional<Vertex> find(std::string_view label) const;
  /// Throws DomainError when the label is unknown.
  Vertex index_of(std::string_view label) const;

  std::span<const Vertex> neighbors(Vertex v) const {
    return data_->adjacency.at(v);
  }
  std::size_t degree(Vertex v) const { return data_->adjacency.at(v).size(); }
  bool adjacent(Vertex a, Vertex b) const;
  bool has_edge(const Edge& e) const { return adjacent(e.u, e.v); }

  /// All edges, sorted by index pair.
  std::vector<Edge> edges() const;
  /// Edge between two labels; throws DomainError if either is absent.
  Edge edge(std::string_view a, std::string_view b) const;

  VertexSet all_vertices() const;
  VertexSet empty_set() const;
  VertexSet set_of(std::initializer_list<std::string_view> labels) const;
  VertexSet set_of(std::span<const std::string> labels) const;
  VertexSet set_of_indices(std::vector<Vertex> members) const;

  bool same_graph(const Graph& other) const noexcept {
    return data_ == other.data_;
  }

  const std::shared_ptr<const detail::GraphData>& data() const noexcept {
    return data_;
  }

 private:
  explicit Graph(std::shared_ptr<const detail::GraphData> data)
      : data_(std::move(data)) {}

  std::shared_ptr<const detail::GraphData> data_;
};

/// Subset of one graph's vertices. Binary set operations require both
/// operands to come from the same graph and throw OwnershipError otherwise.
class VertexSet {
 public:
  VertexSet(const Graph& owner, std::vector<Vertex> members);

  bool belongs_to(const Graph& g) const noexcept {
    return owner_ == g.data();
  }
  void require_owner(const Graph& g) const;

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Vertex v) const;
  bool contains(std::string_view label) const;

  /// Members in increasing index order.
  const std::vector<Vertex>& members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  /// Member labels in natural sorted order.
  std::vector<std::string> labels() const;
  /// Canonical rendering, e.g. "{a,b,c}".
  std::string to_string() const;

  VertexSet operator|(const VertexSet& other) const;
  VertexSet operator&(const VertexSet& other) const;
  VertexSet operator-(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  /// Same owner and same members.
  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.owner_ == b.owner_ && a.members_ == b.members_;
  }

 private:
  VertexSet(std::shared_ptr<const detail::GraphData> owner,
            std::vector<Vertex> members)
      : owner_(std::move(owner)), members_(std::move(members)) {}
  void require_same_owner(const VertexSet& other) const;

  std::shared_ptr<const detail::GraphData> owner_;
  std::vector<Vertex> members_;
};

/// Canonical ordering for families of sets: lexicographic on sorted labels.
bool canonical_set_less(const VertexSet& a, const VertexSet& b);

/// N(A), or N[A] when `closed`. Throws OwnershipError for a foreign set.
VertexSet neighborhood(const Graph& g, const VertexSet& a, bool closed = false);

/// G[X], labels preserved.
Graph induced_subgraph(const Graph& g, const VertexSet& x);

/// G - W - F: removes the vertices of W (with incident edges), then the
/// edges of F. Every edge of F must exist in g; F may mention W's vertices.
Graph remove(const Graph& g, const VertexSet& w, std::span<const Edge> f = {});
Graph remove_edges(const Graph& g, std::span<const Edge> f);

/// Vertices of each connected component; components ordered by their
/// smallest index, members ascending.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

enum class ShapeKind { tree, unicyclic, forest, other };

std::string_view to_string(ShapeKind kind);

struct ShapeClass {
  bool connected = false;
  ShapeKind kind = ShapeKind::other;
  bool bipartite = true;

  friend bool operator==(const ShapeClass&, const ShapeClass&) = default;
};

ShapeClass classify_shape(const Graph& g);

/// Two-colouring of a bipartite graph (0/1 per vertex), or nullopt.
std::optional<std::vector<int>> two_coloring(const Graph& g);

}  // namespace kecore
