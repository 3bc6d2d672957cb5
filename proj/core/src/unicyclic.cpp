#include "kecore/unicyclic.hpp"

#include <algorithm>
#include <optional>

#include "kecore/critical.hpp"
#include "kecore/errors.hpp"
#include "kecore/independence.hpp"
#include "kecore/matching.hpp"

namespace kecore {

namespace {

std::vector<char> cycle_membership(const Graph& g) {
  std::vector<std::size_t> deg(g.order());
  std::vector<char> on_cycle(g.order(), 1);
  std::vector<Vertex> leaves;
  for (Vertex v = 0; v < g.order(); ++v) {
    deg[v] = g.degree(v);
    if (deg[v] <= 1) leaves.push_back(v);
  }
  while (!leaves.empty()) {
    const Vertex v = leaves.back();
    leaves.pop_back();
    if (!on_cycle[v]) continue;
    on_cycle[v] = 0;
    for (Vertex w : g.neighbors(v)) {
      if (on_cycle[w] && --deg[w] == 1) leaves.push_back(w);
    }
  }
  return on_cycle;
}

Graph pendant_tree(const Graph& g, Vertex x, Vertex anchor) {
  std::vector<char> seen(g.order(), 0);
  seen[x] = 1;
  seen[anchor] = 1;
  std::vector<Vertex> members{x};
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (Vertex w : g.neighbors(members[head])) {
      if (!seen[w]) {
        seen[w] = 1;
        members.push_back(w);
      }
    }
  }
  return induced_subgraph(g, g.set_of_indices(std::move(members)));
}

void require_non_ke_unicyclic(const Graph& g, const Budget& budget) {
  if (classify_shape(g).kind != ShapeKind::unicyclic) {
    throw PreconditionError("graph is not unicyclic");
  }
  if (is_koenig_egervary(g, budget)) {
    throw PreconditionError(
        "structural formulas apply only to non-König-Egerváry unicyclic graphs");
  }
}

}  // namespace

UnicyclicDecomposition decompose(const Graph& g) {
  if (classify_shape(g).kind != ShapeKind::unicyclic) {
    throw PreconditionError("graph is not unicyclic");
  }
  const auto on_cycle = cycle_membership(g);

  std::optional<Vertex> start;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (on_cycle[v] && (!start || label_less(g.label(v), g.label(*start)))) start = v;
  }
  std::vector<Vertex> ring;
  for (Vertex w : g.neighbors(*start)) {
    if (on_cycle[w]) ring.push_back(w);
  }
  Vertex next = label_less(g.label(ring[0]), g.label(ring[1])) ? ring[0] : ring[1];
  std::vector<Vertex> cycle{*start};
  Vertex prev = *start;
  while (next != *start) {
    cycle.push_back(next);
    Vertex step = next;
    for (Vertex w : g.neighbors(next)) {
      if (on_cycle[w] && w != prev) {
        step = w;
        break;
      }
    }
    prev = next;
    next = step;
  }

  std::vector<Vertex> attach;
  std::vector<Pendant> pendants;
  for (Vertex x = 0; x < g.order(); ++x) {
    if (on_cycle[x]) continue;
    std::vector<Vertex> anchors;
    for (Vertex w : g.neighbors(x)) {
      if (on_cycle[w]) anchors.push_back(w);
    }
    if (anchors.empty()) continue;
    if (anchors.size() != 1) {
      throw PreconditionError("vertex '" + g.label(x) +
                              "' has two cycle neighbours");
    }
    attach.push_back(x);
    pendants.push_back(Pendant{x, anchors.front(), pendant_tree(g, x, anchors.front())});
  }
  std::sort(pendants.begin(), pendants.end(), [&](const Pendant& a, const Pendant& b) {
    return label_less(g.label(a.root), g.label(b.root));
  });
  return UnicyclicDecomposition{
      .cycle = cycle,
      .cycle_set = g.set_of_indices(cycle),
      .attachments = g.set_of_indices(std::move(attach)),
      .pendants = std::move(pendants),
  };
}

KeClassification classify_ke_unicyclic(const Graph& g, const Budget& budget) {
  const auto dec = decompose(g);
  KeClassification out;
  out.alpha_plus_mu = alpha(g, budget) + mu(g);
  out.ke = out.alpha_plus_mu == g.order();
  out.cycle_edges_alpha_critical = true;
  for (std::size_t i = 0; i < dec.cycle.size(); ++i) {
    const Edge e(dec.cycle[i], dec.cycle[(i + 1) % dec.cycle.size()]);
    if (!is_alpha_critical_edge(g, e, budget)) {
      out.cycle_edges_alpha_critical = false;
      break;
    }
  }
  return out;
}

VertexSet lift(const Graph& g, const Graph& tree, const VertexSet& s) {
  s.require_owner(tree);
  std::vector<Vertex> members;
  members.reserve(s.size());
  for (Vertex v : s) members.push_back(g.index_of(tree.label(v)));
  return g.set_of_indices(std::move(members));
}

VertexSet structural_core(const Graph& g, const Budget& budget) {
  require_non_ke_unicyclic(g, budget);
  VertexSet out = g.empty_set();
  for (const auto& p : decompose(g).pendants) {
    out = out | lift(g, p.tree, core(p.tree, budget));
  }
  return out;
}

VertexSet structural_corona(const Graph& g, const Budget& budget) {
  require_non_ke_unicyclic(g, budget);
  const auto dec = decompose(g);
  VertexSet out = dec.cycle_set;
  for (const auto& p : dec.pendants) {
    out = out | lift(g, p.tree, corona(p.tree, budget));
  }
  return out;
}

VertexSet structural_ker(const Graph& g, const Budget& budget) {
  require_non_ke_unicyclic(g, budget);
  VertexSet out = g.empty_set();
  for (const auto& p : decompose(g).pendants) {
    out = out | lift(g, p.tree, ker(p.tree, budget));
  }
  return out;
}

}  // namespace kecore
