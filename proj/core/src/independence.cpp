#include "kecore/independence.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "bitgraph.hpp"
#include "kecore/errors.hpp"

namespace kecore {

namespace {

using detail::bit;

// Components of the subgraph induced by `alive`.
std::vector<std::vector<Vertex>> alive_components(const Graph& g,
                                                  const std::vector<char>& alive) {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (!alive[s] || seen[s]) continue;
    std::vector<Vertex> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (alive[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

std::size_t tree_alpha(const Graph& g, const std::vector<char>& alive,
                       const std::vector<Vertex>& comp) {
  // Iterative DFS order; dp over reversed order.
  const Vertex root = comp.front();
  std::vector<Vertex> order;
  order.reserve(comp.size());
  std::vector<Vertex> parent(g.order(), root);
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{root};
  seen[root] = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (alive[w] && !seen[w]) {
        seen[w] = 1;
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  std::vector<std::size_t> with(g.order(), 0);
  std::vector<std::size_t> without(g.order(), 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    with[v] += 1;
    if (v != root) {
      const Vertex p = parent[v];
      with[p] += without[v];
      without[p] += std::max(with[v], without[v]);
    }
  }
  return std::max(with[root], without[root]);
}

class BranchAndBound {
 public:
  explicit BranchAndBound(std::vector<std::uint64_t> nb) : nb_(std::move(nb)) {}

  std::size_t solve() {
    const int n = static_cast<int>(nb_.size());
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : bit(n) - 1;
    best_ = greedy(all);
    search(all, 0);
    return best_;
  }

 private:
  // Min-degree greedy gives the initial lower bound.
  std::size_t greedy(std::uint64_t cand) const {
    std::size_t size = 0;
    while (cand) {
      int pick = -1;
      int pick_deg = 65;
      for (std::uint64_t rest = cand; rest; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        const int d = std::popcount(nb_[v] & cand);
        if (d < pick_deg) {
          pick = v;
          pick_deg = d;
        }
      }
      cand &= ~(bit(pick) | nb_[pick]);
      ++size;
    }
    return size;
  }

  void search(std::uint64_t cand, std::size_t size) {
    while (true) {
      if (cand == 0) {
        best_ = std::max(best_, size);
        return;
      }
      if (size + static_cast<std::size_t>(std::popcount(cand)) <= best_) return;
      int pick = -1;
      int pick_deg = -1;
      bool reduced = false;
      for (std::uint64_t rest = cand; rest; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        const int d = std::popcount(nb_[v] & cand);
        if (d <= 1) {
          // A vertex of degree <= 1 lies in some maximum independent set.
          cand &= ~(bit(v) | nb_[v]);
          ++size;
          reduced = true;
          break;
        }
        if (d > pick_deg) {
          pick = v;
          pick_deg = d;
        }
      }
      if (reduced) continue;
      search(cand & ~(bit(pick) | nb_[pick]), size + 1);
      cand &= ~bit(pick);
    }
  }

  std::vector<std::uint64_t> nb_;
  std::size_t best_ = 0;
};

std::size_t alpha_alive(const Graph& g, const std::vector<char>& alive,
                        const Budget& budget, AlphaMethod method);

std::size_t branch_alpha(const Graph& g, const std::vector<char>& alive,
                         const std::vector<Vertex>& comp, const Budget& budget) {
  const auto cap = std::min(budget.max_branch_n, 64);
  if (comp.size() > static_cast<std::size_t>(cap)) {
    throw BudgetExceeded("branch-and-bound alpha on a component of " +
                         std::to_string(comp.size()) + " vertices exceeds cap " +
                         std::to_string(cap));
  }
  std::vector<int> local(g.order(), -1);
  for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<int>(i);
  std::vector<std::uint64_t> nb(comp.size(), 0);
  for (std::size_t i = 0; i < comp.size(); ++i) {
    for (Vertex w : g.neighbors(comp[i])) {
      if (alive[w]) nb[i] |= bit(local[w]);
    }
  }
  return BranchAndBound(std::move(nb)).solve();
}

std::size_t unicyclic_alpha(const Graph& g, const std::vector<char>& alive,
                            const std::vector<Vertex>& comp, const Budget& budget) {
  // Strip leaves; what survives is the cycle.
  std::vector<std::size_t> deg(g.order(), 0);
  std::vector<char> in_core(g.order(), 0);
  std::vector<Vertex> leaves;
  for (Vertex v : comp) {
    in_core[v] = 1;
    for (Vertex w : g.neighbors(v)) deg[v] += alive[w] ? 1 : 0;
    if (deg[v] <= 1) leaves.push_back(v);
  }
  while (!leaves.empty()) {
    const Vertex v = leaves.back();
    leaves.pop_back();
    if (!in_core[v]) continue;
    in_core[v] = 0;
    for (Vertex w : g.neighbors(v)) {
      if (alive[w] && in_core[w] && --deg[w] == 1) leaves.push_back(w);
    }
  }
  Vertex u = comp.front();
  for (Vertex v : comp) {
    if (in_core[v]) {
      u = v;
      break;
    }
  }
  std::vector<char> sub(g.order(), 0);
  for (Vertex v : comp) sub[v] = 1;
  sub[u] = 0;
  const std::size_t skip_u = alpha_alive(g, sub, budget, AlphaMethod::automatic);
  for (Vertex w : g.neighbors(u)) sub[w] = 0;
  const std::size_t take_u =
      1 + alpha_alive(g, sub, budget, AlphaMethod::automatic);
  return std::max(skip_u, take_u);
}

std::size_t alpha_alive(const Graph& g, const std::vector<char>& alive,
                        const Budget& budget, AlphaMethod method) {
  std::size_t total = 0;
  for (const auto& comp : alive_components(g, alive)) {
    if (comp.size() == 1) {
      total += 1;
      continue;
    }
    if (method == AlphaMethod::branch_and_bound) {
      total += branch_alpha(g, alive, comp, budget);
      continue;
    }
    std::size_t degree_sum = 0;
    for (Vertex v : comp) {
      for (Vertex w : g.neighbors(v)) degree_sum += alive[w] ? 1 : 0;
    }
    const std::size_t m = degree_sum / 2;
    if (m + 1 == comp.size()) {
      total += tree_alpha(g, alive, comp);
    } else if (m == comp.size()) {
      total += unicyclic_alpha(g, alive, comp, budget);
    } else {
      total += branch_alpha(g, alive, comp, budget);
    }
  }
  return total;
}

void require_enumerable(const Graph& g, const Budget& budget) {
  const auto cap = std::min(budget.max_enum_n, 64);
  if (g.order() > static_cast<std::size_t>(cap)) {
    throw BudgetExceeded("enumeration on " + std::to_string(g.order()) +
                         " vertices exceeds cap " + std::to_string(cap));
  }
}

}  // namespace

bool is_independent(const Graph& g, const VertexSet& s) {
  s.require_owner(g);
  for (Vertex v : s) {
    for (Vertex w : g.neighbors(v)) {
      if (s.contains(w)) return false;
    }
  }
  return true;
}

std::size_t alpha(const Graph& g, const Budget& budget, AlphaMethod method) {
  const std::vector<char> alive(g.order(), 1);
  return alpha_alive(g, alive, budget, method);
}

std::size_t alpha_without(const Graph& g, const VertexSet& removed,
                          const Budget& budget, AlphaMethod method) {
  removed.require_owner(g);
  std::vector<char> alive(g.order(), 1);
  for (Vertex v : removed) alive[v] = 0;
  return alpha_alive(g, alive, budget, method);
}

MisFamily enumerate_mis(const Graph& g, const Budget& budget) {
  require_enumerable(g, budget);
  MisFamily family;
  family.alpha = alpha(g, budget);
  const auto bits = detail::BitGraph::from(g);
  const int n = bits.n;
  const std::size_t target = family.alpha;
  std::vector<std::uint64_t> found;

  // Include/exclude over vertices in index order, pruned by the count of
  // still-available vertices.
  auto rec = [&](auto&& self, int i, std::uint64_t chosen,
                 std::uint64_t blocked, std::size_t size) -> void {
    if (size == target) {
      found.push_back(chosen);
      return;
    }
    if (i == n) return;
    const std::uint64_t upper = bits.full() & ~(bit(i) - 1);
    const auto available =
        static_cast<std::size_t>(std::popcount(upper & ~blocked));
    if (size + available < target) return;
    if (!(blocked & bit(i))) {
      self(self, i + 1, chosen | bit(i), blocked | bits.nb[i] | bit(i), size + 1);
    }
    self(self, i + 1, chosen, blocked | bit(i), size);
  };
  rec(rec, 0, 0, 0, 0);

  family.sets.reserve(found.size());
  for (auto mask : found) family.sets.push_back(g.set_of_indices(detail::mask_members(mask)));
  std::sort(family.sets.begin(), family.sets.end(), canonical_set_less);
  return family;
}

VertexSet core(const Graph& g, const Budget& budget) {
  const std::size_t a = alpha(g, budget);
  std::vector<Vertex> members;
  std::vector<char> alive(g.order(), 1);
  for (Vertex v = 0; v < g.order(); ++v) {
    alive[v] = 0;
    if (alpha_alive(g, alive, budget, AlphaMethod::automatic) + 1 == a) {
      members.push_back(v);
    }
    alive[v] = 1;
  }
  return g.set_of_indices(std::move(members));
}

VertexSet corona(const Graph& g, const Budget& budget) {
  const std::size_t a = alpha(g, budget);
  std::vector<Vertex> members;
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<char> alive(g.order(), 1);
    alive[v] = 0;
    for (Vertex w : g.neighbors(v)) alive[w] = 0;
    if (alpha_alive(g, alive, budget, AlphaMethod::automatic) + 1 == a) {
      members.push_back(v);
    }
  }
  return g.set_of_indices(std::move(members));
}

bool is_alpha_critical_edge(const Graph& g, const Edge& e, const Budget& budget) {
  if (e.u >= g.order() || e.v >= g.order() || !g.has_edge(e)) {
    throw DomainError("not an edge of the graph");
  }
  const Edge removed[] = {e};
  return alpha(remove_edges(g, removed), budget) == alpha(g, budget) + 1;
}

}  // namespace kecore
