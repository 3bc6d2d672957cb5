#include "kecore/graph.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>

#include "kecore/errors.hpp"

namespace kecore {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

}  // namespace

bool label_less(std::string_view a, std::string_view b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      std::size_t ie = i;
      std::size_t je = j;
      while (ie < a.size() && is_digit(a[ie])) ++ie;
      while (je < b.size() && is_digit(b[je])) ++je;
      std::size_t is = i;
      std::size_t js = j;
      while (is + 1 < ie && a[is] == '0') ++is;
      while (js + 1 < je && b[js] == '0') ++js;
      const auto da = a.substr(is, ie - is);
      const auto db = b.substr(js, je - js);
      if (da.size() != db.size()) return da.size() < db.size();
      if (da != db) return da < db;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) {
        return static_cast<unsigned char>(a[i]) <
               static_cast<unsigned char>(b[j]);
      }
      ++i;
      ++j;
    }
  }
  if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
  return a < b;
}

// ---------------------------------------------------------------- Graph

Graph::Graph() : data_(std::make_shared<detail::GraphData>()) {}

Graph Graph::from_edges(std::vector<std::string> labels,
                        std::span<const Edge> edges) {
  auto data = std::make_shared<detail::GraphData>();
  const auto n = labels.size();
  data->index.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (labels[i].empty()) throw DomainError("empty vertex label");
    auto [it, inserted] = data->index.emplace(labels[i], static_cast<Vertex>(i));
    if (!inserted) throw DomainError("duplicate vertex label '" + labels[i] + "'");
  }
  data->labels = std::move(labels);
  data->adjacency.assign(n, {});
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n) throw DomainError("edge endpoint out of range");
    if (e.u == e.v) {
      throw DomainError("self-loop at '" + data->labels[e.u] + "'");
    }
    data->adjacency[e.u].push_back(e.v);
    data->adjacency[e.v].push_back(e.u);
  }
  for (auto& row : data->adjacency) {
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end()) {
      throw DomainError("duplicate edge");
    }
  }
  data->edge_count = edges.size();
  return Graph(std::move(data));
}

Graph Graph::from_label_edges(
    std::vector<std::string> labels,
    std::span<const std::pair<std::string, std::string>> edges) {
  std::unordered_map<std::string, Vertex> index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    index.emplace(labels[i], static_cast<Vertex>(i));
  }
  std::vector<Edge> indexed;
  indexed.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end() || ib == index.end()) {
      throw DomainError("edge " + a + "-" + b + " names an undeclared vertex");
    }
    if (ia->second == ib->second) throw DomainError("self-loop at '" + a + "'");
    indexed.emplace_back(ia->second, ib->second);
  }
  return from_edges(std::move(labels), indexed);
}

std::optional<Vertex> Graph::find(std::string_view label) const {
  auto it = data_->index.find(std::string(label));
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

Vertex Graph::index_of(std::string_view label) const {
  auto v = find(label);
  if (!v) throw DomainError("unknown vertex '" + std::string(label) + "'");
  return *v;
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  const auto& row = data_->adjacency.at(a);
  return std::binary_search(row.begin(), row.end(), b);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : data_->adjacency[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Edge Graph::edge(std::string_view a, std::string_view b) const {
  const Vertex u = index_of(a);
  const Vertex v = index_of(b);
  if (!adjacent(u, v)) {
    throw DomainError("no edge " + std::string(a) + "-" + std::string(b));
  }
  return Edge(u, v);
}

VertexSet Graph::all_vertices() const {
  std::vector<Vertex> members(order());
  for (Vertex v = 0; v < order(); ++v) members[v] = v;
  return VertexSet(*this, std::move(members));
}

VertexSet Graph::empty_set() const { return VertexSet(*this, {}); }

VertexSet Graph::set_of(std::initializer_list<std::string_view> labels) const {
  std::vector<Vertex> members;
  for (auto l : labels) members.push_back(index_of(l));
  return VertexSet(*this, std::move(members));
}

VertexSet Graph::set_of(std::span<const std::string> labels) const {
  std::vector<Vertex> members;
  for (const auto& l : labels) members.push_back(index_of(l));
  return VertexSet(*this, std::move(members));
}

VertexSet Graph::set_of_indices(std::vector<Vertex> members) const {
  return VertexSet(*this, std::move(members));
}

// ------------------------------------------------------------ VertexSet

VertexSet::VertexSet(const Graph& owner, std::vector<Vertex> members)
    : owner_(owner.data()), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.back() >= owner.order()) {
    throw DomainError("vertex index out of range");
  }
}

void VertexSet::require_owner(const Graph& g) const {
  if (!belongs_to(g)) throw OwnershipError("vertex set belongs to another graph");
}

void VertexSet::require_same_owner(const VertexSet& other) const {
  if (owner_ != other.owner_) {
    throw OwnershipError("vertex sets belong to different graphs");
  }
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

bool VertexSet::contains(std::string_view label) const {
  auto it = owner_->index.find(std::string(label));
  return it != owner_->index.end() && contains(it->second);
}

std::vector<std::string> VertexSet::labels() const {
  std::vector<std::string> out;
  out.reserve(members_.size());
  for (Vertex v : members_) out.push_back(owner_->labels[v]);
  std::sort(out.begin(), out.end(),
            [](const std::string& a, const std::string& b) {
              return label_less(a, b);
            });
  return out;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& l : labels()) {
    if (!first) out += ',';
    out += l;
    first = false;
  }
  out += '}';
  return out;
}

VertexSet VertexSet::operator|(const VertexSet& other) const {
  require_same_owner(other);
  std::vector<Vertex> out;
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                 other.members_.end(), std::back_inserter(out));
  return VertexSet(owner_, std::move(out));
}

VertexSet VertexSet::operator&(const VertexSet& other) const {
  require_same_owner(other);
  std::vector<Vertex> out;
  std::set_intersection(members_.begin(), members_.end(),
                        other.members_.begin(), other.members_.end(),
                        std::back_inserter(out));
  return VertexSet(owner_, std::move(out));
}

VertexSet VertexSet::operator-(const VertexSet& other) const {
  require_same_owner(other);
  std::vector<Vertex> out;
  std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                      other.members_.end(), std::back_inserter(out));
  return VertexSet(owner_, std::move(out));
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  require_same_owner(other);
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

bool VertexSet::intersects(const VertexSet& other) const {
  return !(*this & other).empty();
}

bool canonical_set_less(const VertexSet& a, const VertexSet& b) {
  const auto la = a.labels();
  const auto lb = b.labels();
  return std::lexicographical_compare(
      la.begin(), la.end(), lb.begin(), lb.end(),
      [](const std::string& x, const std::string& y) { return label_less(x, y); });
}

// ----------------------------------------------------------- primitives

VertexSet neighborhood(const Graph& g, const VertexSet& a, bool closed) {
  a.require_owner(g);
  std::vector<char> mark(g.order(), 0);
  for (Vertex v : a) {
    if (closed) mark[v] = 1;
    for (Vertex w : g.neighbors(v)) mark[w] = 1;
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (mark[v]) out.push_back(v);
  }
  return g.set_of_indices(std::move(out));
}

Graph induced_subgraph(const Graph& g, const VertexSet& x) {
  x.require_owner(g);
  constexpr Vertex kAbsent = ~Vertex{0};
  std::vector<Vertex> remap(g.order(), kAbsent);
  std::vector<std::string> labels;
  labels.reserve(x.size());
  for (Vertex v : x) {
    remap[v] = static_cast<Vertex>(labels.size());
    labels.push_back(g.label(v));
  }
  std::vector<Edge> edges;
  for (Vertex v : x) {
    for (Vertex w : g.neighbors(v)) {
      if (v < w && remap[w] != kAbsent) edges.emplace_back(remap[v], remap[w]);
    }
  }
  return Graph::from_edges(std::move(labels), edges);
}

Graph remove(const Graph& g, const VertexSet& w, std::span<const Edge> f) {
  w.require_owner(g);
  for (const auto& e : f) {
    if (e.u >= g.order() || e.v >= g.order() || !g.has_edge(e)) {
      throw DomainError("edge to delete is not in the graph");
    }
  }
  std::vector<Edge> dropped(f.begin(), f.end());
  std::sort(dropped.begin(), dropped.end());
  constexpr Vertex kAbsent = ~Vertex{0};
  std::vector<Vertex> remap(g.order(), kAbsent);
  std::vector<std::string> labels;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!w.contains(v)) {
      remap[v] = static_cast<Vertex>(labels.size());
      labels.push_back(g.label(v));
    }
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (remap[e.u] == kAbsent || remap[e.v] == kAbsent) continue;
    if (std::binary_search(dropped.begin(), dropped.end(), e)) continue;
    edges.emplace_back(remap[e.u], remap[e.v]);
  }
  return Graph::from_edges(std::move(labels), edges);
}

Graph remove_edges(const Graph& g, std::span<const Edge> f) {
  return remove(g, g.empty_set(), f);
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::string_view to_string(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::tree: return "tree";
    case ShapeKind::unicyclic: return "unicyclic";
    case ShapeKind::forest: return "forest";
    case ShapeKind::other: return "other";
  }
  return "other";
}

std::optional<std::vector<int>> two_coloring(const Graph& g) {
  std::vector<int> color(g.order(), -1);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      for (Vertex w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

ShapeClass classify_shape(const Graph& g) {
  ShapeClass shape;
  const auto components = connected_components(g);
  const auto n = g.order();
  const auto m = g.size();
  shape.connected = components.size() == 1;
  shape.bipartite = two_coloring(g).has_value();
  if (shape.connected) {
    if (m + 1 == n) {
      shape.kind = ShapeKind::tree;
    } else if (m == n) {
      shape.kind = ShapeKind::unicyclic;
    } else {
      shape.kind = ShapeKind::other;
    }
  } else {
    shape.kind = (m + components.size() == n) ? ShapeKind::forest
                                              : ShapeKind::other;
  }
  return shape;
}

}  // namespace kecore
