#include "kecore/matching.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

#include "kecore/errors.hpp"
#include "kecore/independence.hpp"

namespace kecore {

// -------------------------------------------------------------- Matching

Matching::Matching(const Graph& g, std::vector<Edge> edges)
    : owner_(g.data()), edges_(std::move(edges)), mate_(g.order(), kUnmatched) {
  std::sort(edges_.begin(), edges_.end());
  for (const auto& e : edges_) {
    if (e.v >= g.order() || !g.has_edge(e)) {
      throw DomainError("matching edge is not in the graph");
    }
    if (mate_[e.u] != kUnmatched || mate_[e.v] != kUnmatched) {
      throw DomainError("matching edges share an endpoint");
    }
    mate_[e.u] = e.v;
    mate_[e.v] = e.u;
  }
}

std::optional<Vertex> Matching::mate(Vertex v) const {
  const Vertex m = mate_.at(v);
  if (m == kUnmatched) return std::nullopt;
  return m;
}

std::vector<std::string> Matching::labels() const {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& e : edges_) {
    auto a = owner_->labels[e.u];
    auto b = owner_->labels[e.v];
    if (label_less(b, a)) std::swap(a, b);
    pairs.emplace_back(std::move(a), std::move(b));
  }
  std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return label_less(x.first, y.first);
    return label_less(x.second, y.second);
  });
  std::vector<std::string> out;
  for (const auto& [a, b] : pairs) out.push_back(a + "-" + b);
  return out;
}

std::string Matching::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& l : labels()) {
    if (!first) out += ',';
    out += l;
    first = false;
  }
  return out + "}";
}

bool canonical_matching_less(const Matching& a, const Matching& b) {
  const auto la = a.labels();
  const auto lb = b.labels();
  return std::lexicographical_compare(
      la.begin(), la.end(), lb.begin(), lb.end(),
      [](const std::string& x, const std::string& y) { return label_less(x, y); });
}

namespace {

constexpr Vertex kNone = std::numeric_limits<Vertex>::max();

bool every_component_has_at_most_one_cycle(const Graph& g) {
  for (const auto& comp : connected_components(g)) {
    std::size_t degree_sum = 0;
    for (Vertex v : comp) degree_sum += g.degree(v);
    if (degree_sum / 2 > comp.size()) return false;
  }
  return true;
}

// Matching a leaf to its neighbour is always safe. Once no leaves remain,
// each surviving component is a bare cycle, matched alternately.
std::vector<Edge> leaf_stripping(const Graph& g) {
  const auto n = g.order();
  std::vector<std::size_t> deg(n);
  std::vector<char> alive(n, 1);
  std::vector<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] == 1) leaves.push_back(v);
  }
  std::vector<Edge> out;
  auto kill = [&](Vertex v) {
    alive[v] = 0;
    for (Vertex w : g.neighbors(v)) {
      if (alive[w] && --deg[w] == 1) leaves.push_back(w);
    }
  };
  while (!leaves.empty()) {
    const Vertex v = leaves.back();
    leaves.pop_back();
    if (!alive[v] || deg[v] != 1) continue;
    Vertex w = kNone;
    for (Vertex x : g.neighbors(v)) {
      if (alive[x]) {
        w = x;
        break;
      }
    }
    out.emplace_back(v, w);
    alive[v] = 0;
    kill(w);
  }
  for (Vertex s = 0; s < n; ++s) {
    if (!alive[s] || deg[s] == 0) continue;
    // Walk the remaining cycle through s.
    std::vector<Vertex> cycle{s};
    Vertex prev = kNone;
    Vertex cur = s;
    while (true) {
      Vertex next = kNone;
      for (Vertex x : g.neighbors(cur)) {
        if (alive[x] && x != prev) {
          next = x;
          break;
        }
      }
      if (next == s || next == kNone) break;
      cycle.push_back(next);
      prev = cur;
      cur = next;
    }
    for (std::size_t i = 0; i + 1 < cycle.size(); i += 2) {
      out.emplace_back(cycle[i], cycle[i + 1]);
    }
    for (Vertex v : cycle) alive[v] = 0;
  }
  return out;
}

std::vector<Edge> hopcroft_karp(const Graph& g, const std::vector<int>& side) {
  const auto n = g.order();
  std::vector<Vertex> left;
  for (Vertex v = 0; v < n; ++v) {
    if (side[v] == 0) left.push_back(v);
  }
  std::vector<Vertex> mate(n, kNone);
  std::vector<std::size_t> dist(n);
  constexpr auto kInf = std::numeric_limits<std::size_t>::max();

  auto bfs = [&] {
    std::queue<Vertex> q;
    bool found = false;
    for (Vertex u : left) {
      if (mate[u] == kNone) {
        dist[u] = 0;
        q.push(u);
      } else {
        dist[u] = kInf;
      }
    }
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      for (Vertex v : g.neighbors(u)) {
        const Vertex w = mate[v];
        if (w == kNone) {
          found = true;
        } else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  };
  auto dfs = [&](auto&& self, Vertex u) -> bool {
    for (Vertex v : g.neighbors(u)) {
      const Vertex w = mate[v];
      if (w == kNone || (dist[w] == dist[u] + 1 && self(self, w))) {
        mate[u] = v;
        mate[v] = u;
        return true;
      }
    }
    dist[u] = kInf;
    return false;
  };
  while (bfs()) {
    for (Vertex u : left) {
      if (mate[u] == kNone) dfs(dfs, u);
    }
  }
  std::vector<Edge> out;
  for (Vertex u : left) {
    if (mate[u] != kNone) out.emplace_back(u, mate[u]);
  }
  return out;
}

// Edmonds' algorithm with blossom contraction via base pointers.
class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g), n_(g.order()), match_(n_, kNone), parent_(n_), base_(n_),
        used_(n_), in_blossom_(n_) {}

  std::vector<Edge> run() {
    for (Vertex v = 0; v < n_; ++v) {
      if (match_[v] != kNone) continue;
      Vertex u = find_path(v);
      while (u != kNone) {
        const Vertex pv = parent_[u];
        const Vertex ppv = match_[pv];
        match_[u] = pv;
        match_[pv] = u;
        u = ppv;
      }
    }
    std::vector<Edge> out;
    for (Vertex v = 0; v < n_; ++v) {
      if (match_[v] != kNone && v < match_[v]) out.emplace_back(v, match_[v]);
    }
    return out;
  }

 private:
  Vertex lca(Vertex a, Vertex b) {
    std::vector<char> seen(n_, 0);
    while (true) {
      a = base_[a];
      seen[a] = 1;
      if (match_[a] == kNone) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = 1;
      in_blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  Vertex find_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), kNone);
    std::iota(base_.begin(), base_.end(), Vertex{0});
    used_[root] = 1;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop();
      for (Vertex to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != kNone && parent_[match_[to]] != kNone)) {
          const Vertex b = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = b;
              if (!used_[i]) {
                used_[i] = 1;
                q.push(i);
              }
            }
          }
        } else if (parent_[to] == kNone) {
          parent_[to] = v;
          if (match_[to] == kNone) return to;
          used_[match_[to]] = 1;
          q.push(match_[to]);
        }
      }
    }
    return kNone;
  }

  const Graph& g_;
  Vertex n_;
  std::vector<Vertex> match_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<char> used_;
  std::vector<char> in_blossom_;
};

}  // namespace

Matching maximum_matching(const Graph& g, MatchingMethod method) {
  switch (method) {
    case MatchingMethod::leaf_stripping:
      if (!every_component_has_at_most_one_cycle(g)) {
        throw PreconditionError("leaf stripping needs at most one cycle per component");
      }
      return Matching(g, leaf_stripping(g));
    case MatchingMethod::bipartite: {
      auto side = two_coloring(g);
      if (!side) throw PreconditionError("graph is not bipartite");
      return Matching(g, hopcroft_karp(g, *side));
    }
    case MatchingMethod::blossom:
      return Matching(g, Blossom(g).run());
    case MatchingMethod::automatic:
      break;
  }
  if (every_component_has_at_most_one_cycle(g)) {
    return Matching(g, leaf_stripping(g));
  }
  if (auto side = two_coloring(g)) return Matching(g, hopcroft_karp(g, *side));
  return Matching(g, Blossom(g).run());
}

std::size_t mu(const Graph& g, MatchingMethod method) {
  return maximum_matching(g, method).size();
}

bool is_koenig_egervary(const Graph& g, const Budget& budget) {
  return alpha(g, budget) + mu(g) == g.order();
}

std::optional<Matching> saturating_matching(const Graph& g, const VertexSet& a,
                                            const VertexSet& b) {
  a.require_owner(g);
  b.require_owner(g);
  if (a.intersects(b)) throw DomainError("saturating matching needs disjoint sets");
  if (a.size() > b.size()) return std::nullopt;

  std::vector<Vertex> mate(g.order(), kNone);
  std::vector<char> visited(g.order(), 0);
  // Kuhn's augmenting-path search restricted to (A,B) edges.
  auto augment = [&](auto&& self, Vertex u) -> bool {
    for (Vertex v : g.neighbors(u)) {
      if (!b.contains(v) || visited[v]) continue;
      visited[v] = 1;
      if (mate[v] == kNone || self(self, mate[v])) {
        mate[v] = u;
        mate[u] = v;
        return true;
      }
    }
    return false;
  };
  for (Vertex u : a) {
    std::fill(visited.begin(), visited.end(), 0);
    if (!augment(augment, u)) return std::nullopt;
  }
  std::vector<Edge> edges;
  for (Vertex u : a) edges.emplace_back(u, mate[u]);
  return Matching(g, std::move(edges));
}

bool is_mu_critical_edge(const Graph& g, const Edge& e) {
  if (e.u >= g.order() || e.v >= g.order() || !g.has_edge(e)) {
    throw DomainError("not an edge of the graph");
  }
  const Edge removed[] = {e};
  return mu(remove_edges(g, removed)) < mu(g);
}

std::vector<Matching> enumerate_maximum_matchings(const Graph& g,
                                                  std::size_t limit,
                                                  const Budget& budget) {
  if (g.order() > static_cast<std::size_t>(budget.max_enum_n)) {
    throw BudgetExceeded("matching enumeration on " + std::to_string(g.order()) +
                         " vertices exceeds cap " +
                         std::to_string(budget.max_enum_n));
  }
  const auto n = g.order();
  const std::size_t target = mu(g);
  const std::size_t slack = n - 2 * target;  // vertices left exposed
  std::vector<char> matched(n, 0);
  std::vector<Edge> current;
  std::vector<std::vector<Edge>> found;

  // The lowest undecided vertex is either left exposed or matched to a
  // higher neighbour; each matching is produced exactly once.
  auto rec = [&](auto&& self, Vertex i, std::size_t exposed) -> void {
    while (i < n && matched[i]) ++i;
    if (i == n) {
      if (current.size() == target) {
        if (found.size() == limit) {
          throw BudgetExceeded("more than " + std::to_string(limit) +
                               " maximum matchings");
        }
        found.push_back(current);
      }
      return;
    }
    if (exposed < slack) self(self, i + 1, exposed + 1);
    matched[i] = 1;
    for (Vertex w : g.neighbors(i)) {
      if (w < i || matched[w]) continue;
      matched[w] = 1;
      current.emplace_back(i, w);
      self(self, i + 1, exposed);
      current.pop_back();
      matched[w] = 0;
    }
    matched[i] = 0;
  };
  rec(rec, 0, 0);

  std::vector<Matching> out;
  out.reserve(found.size());
  for (auto& edges : found) out.emplace_back(g, std::move(edges));
  std::sort(out.begin(), out.end(), canonical_matching_less);
  return out;
}

}  // namespace kecore
