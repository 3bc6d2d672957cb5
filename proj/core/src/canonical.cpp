#include "kecore/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "kecore/errors.hpp"

namespace kecore {

namespace {

using Coloring = std::vector<int>;

// Relabels colours to dense ranks of the given keys.
template <typename Key>
int rank_by(const std::vector<Key>& keys, Coloring& out) {
  std::vector<Key> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (std::size_t v = 0; v < keys.size(); ++v) {
    out[v] = static_cast<int>(
        std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin());
  }
  return static_cast<int>(sorted.size());
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

  void run() {
    Coloring colors(n_, 0);
    refine(colors);
    search(colors);
  }

  const std::string& best_code() const { return best_code_; }
  const std::vector<Vertex>& best_order() const { return best_order_; }

 private:
  // Colour refinement: split by (own colour, sorted neighbour colours)
  // until the number of cells stops growing.
  int refine(Coloring& colors) const {
    int cells = rank_by(colors, colors);
    while (true) {
      std::vector<std::vector<int>> keys(n_);
      for (Vertex v = 0; v < n_; ++v) {
        auto& key = keys[v];
        key.push_back(colors[v]);
        for (Vertex w : g_.neighbors(v)) key.push_back(colors[w]);
        std::sort(key.begin() + 1, key.end());
      }
      const int next = rank_by(keys, colors);
      if (next == cells) return cells;
      cells = next;
    }
  }

  // Twins (same neighbourhood apart from each other) are swapped by an
  // automorphism fixing the colouring, so only one per class is explored.
  bool twins(Vertex a, Vertex b) const {
    std::vector<Vertex> na;
    std::vector<Vertex> nb;
    for (Vertex w : g_.neighbors(a)) {
      if (w != b) na.push_back(w);
    }
    for (Vertex w : g_.neighbors(b)) {
      if (w != a) nb.push_back(w);
    }
    return na == nb;
  }

  void search(const Coloring& colors) {
    const int cells = *std::max_element(colors.begin(), colors.end()) + 1;
    if (cells == static_cast<int>(n_)) {
      leaf(colors);
      return;
    }
    std::vector<int> cell_size(cells, 0);
    for (int c : colors) ++cell_size[c];
    int target = 0;
    while (cell_size[target] == 1) ++target;
    std::vector<Vertex> tried;
    for (Vertex v = 0; v < n_; ++v) {
      if (colors[v] != target) continue;
      bool redundant = false;
      for (Vertex t : tried) {
        if (twins(t, v)) {
          redundant = true;
          break;
        }
      }
      if (redundant) continue;
      tried.push_back(v);
      Coloring next(n_);
      for (Vertex u = 0; u < n_; ++u) {
        next[u] = 2 * colors[u] + ((colors[u] == target && u != v) ? 1 : 0);
      }
      refine(next);
      search(next);
    }
  }

  void leaf(const Coloring& colors) {
    std::vector<Vertex> order(n_);
    for (Vertex v = 0; v < n_; ++v) order[colors[v]] = v;
    std::string code;
    code.reserve(n_ * (n_ - 1) / 2);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        code.push_back(g_.adjacent(order[i], order[j]) ? '1' : '0');
      }
    }
    if (!have_best_ || code > best_code_) {
      best_code_ = std::move(code);
      best_order_ = std::move(order);
      have_best_ = true;
    }
  }

  const Graph& g_;
  std::size_t n_;
  bool have_best_ = false;
  std::string best_code_;
  std::vector<Vertex> best_order_;
};

std::vector<Vertex> tree_centres(const Graph& tree) {
  const auto n = tree.order();
  if (n <= 2) {
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), Vertex{0});
    return all;
  }
  std::vector<std::size_t> deg(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = tree.degree(v);
    if (deg[v] == 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex v : layer) {
      for (Vertex w : tree.neighbors(v)) {
        if (--deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::string rooted_code(const Graph& tree, Vertex root) {
  // Post-order without recursion.
  const auto n = tree.order();
  std::vector<Vertex> parent(n, root);
  std::vector<Vertex> order{root};
  std::vector<char> seen(n, 0);
  seen[root] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (Vertex w : tree.neighbors(order[head])) {
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = order[head];
        order.push_back(w);
      }
    }
  }
  std::vector<std::vector<std::string>> children(n);
  std::vector<std::string> code(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    auto& kids = children[v];
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (auto& k : kids) s += k;
    s += ")";
    code[v] = std::move(s);
    kids.clear();
    if (v != root) children[parent[v]].push_back(std::move(code[v]));
  }
  return code[root];
}

}  // namespace

std::string canonical_code(const Graph& g) {
  if (g.order() == 0) return "0:";
  CanonicalSearch search(g);
  search.run();
  return std::to_string(g.order()) + ":" + search.best_code();
}

std::vector<Vertex> canonical_order(const Graph& g) {
  if (g.order() == 0) return {};
  CanonicalSearch search(g);
  search.run();
  return search.best_order();
}

Graph canonical_relabel(const Graph& g) {
  const auto order = canonical_order(g);
  std::vector<Vertex> position(g.order());
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = static_cast<Vertex>(i);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < order.size(); ++i) labels.push_back(std::to_string(i + 1));
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) edges.emplace_back(position[e.u], position[e.v]);
  std::sort(edges.begin(), edges.end());
  return Graph::from_edges(std::move(labels), edges);
}

std::string tree_code(const Graph& tree) {
  const auto shape = classify_shape(tree);
  if (tree.order() == 0 || shape.kind != ShapeKind::tree) {
    throw DomainError("tree_code needs a tree");
  }
  std::string best;
  for (Vertex c : tree_centres(tree)) {
    auto code = rooted_code(tree, c);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

Graph tree_from_code(const std::string& code) {
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  std::vector<Vertex> stack;
  for (char ch : code) {
    if (ch == '(') {
      const auto v = static_cast<Vertex>(labels.size());
      labels.push_back(std::to_string(v + 1));
      if (!stack.empty()) edges.emplace_back(stack.back(), v);
      stack.push_back(v);
    } else if (ch == ')') {
      if (stack.empty()) throw DomainError("unbalanced tree code");
      stack.pop_back();
    } else {
      throw DomainError("bad character in tree code");
    }
  }
  if (!stack.empty() || labels.empty()) throw DomainError("unbalanced tree code");
  return Graph::from_edges(std::move(labels), edges);
}

}  // namespace kecore
