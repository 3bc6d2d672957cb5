#include "kecore/corpus.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>

#include "kecore/canonical.hpp"
#include "kecore/edge_list.hpp"
#include "kecore/errors.hpp"

namespace kecore {

namespace {

struct FixtureEntry {
  std::string_view name;
  std::string_view text;
};

// Vertex names follow the drawings; unnamed drawing vertices got fresh
// letters (p, q, r, s, t, u, w, ...).
constexpr std::array<FixtureEntry, 15> kFixtures{{
    {"fig1", "a u\nu c\nc v\nv y\nu b\nv x\nx y\n"},
    {"fig2G",
     "u v\nv x\nx y\ny w\nw c\na x\nx b\ny d\nd t\nt c\n"},
    {"fig2Tx", "u v\nv x\na x\nx b\n"},
    {"fig3G1",
     "a p\np q\nq r\nr s\ns c\np b\nq t\nt w\nw s\n"},
    {"fig3G2", "x p\np y\ny q\nq z\np s\ns t\nt q\n"},
    {"fig4G1",
     "a p\np q\nq c\nc r\nr s\np b\nq t\nt c\nc u\nu w\nw s\n"},
    {"fig4G2", "x p\np q\nq r\nr s\np y\nq t\nt w\nw s\n"},
    {"fig6G1",
     "p q\nq r\nr a\na s\ns c\np t\nt u\nu r\ns b\nb w\nw c\n"},
    {"fig6G2",
     "p q\nq r\nr s\ns t\np u\nu w\nw r\ns x\nx y\ny t\n"},
    {"P2", "a b\n"},
    {"P3", "a b\nb c\n"},
    {"C4", "a b\nb c\nc d\nd a\n"},
    {"C5", "a b\nb c\nc d\nd e\ne a\n"},
    {"K1", "node v\n"},
    {"K3", "a b\nb c\nc a\n"},
}};

std::vector<std::string> numbered_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Unbiased draw from [0, bound); std distributions are not portable.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  while (true) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

std::vector<Vertex> random_sequence(std::mt19937_64& rng, std::size_t n) {
  std::vector<Vertex> seq(n >= 2 ? n - 2 : 0);
  for (auto& s : seq) s = static_cast<Vertex>(below(rng, n));
  return seq;
}

std::vector<Edge> pruefer_edges(std::span<const Vertex> sequence, std::size_t n) {
  std::vector<Edge> edges;
  if (n < 2) return edges;
  std::vector<std::size_t> degree(n, 1);
  for (Vertex s : sequence) {
    if (s >= n) throw DomainError("Prüfer entry out of range");
    ++degree[s];
  }
  // Linear-time decoding with a moving leaf pointer.
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  std::size_t leaf = ptr;
  for (Vertex s : sequence) {
    edges.emplace_back(static_cast<Vertex>(leaf), s);
    if (--degree[s] == 1 && s < ptr) {
      leaf = s;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(static_cast<Vertex>(leaf), static_cast<Vertex>(n - 1));
  return edges;
}

// Tree path u..v as parent pointers from a BFS rooted at u.
std::vector<Vertex> tree_parents(const std::vector<std::vector<Vertex>>& adj,
                                 Vertex root) {
  std::vector<Vertex> parent(adj.size(), root);
  std::vector<char> seen(adj.size(), 0);
  std::vector<Vertex> queue{root};
  seen[root] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Vertex w : adj[queue[head]]) {
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = queue[head];
        queue.push_back(w);
      }
    }
  }
  return parent;
}

void require_dedupe_budget(std::size_t n, const Budget& budget) {
  if (n > static_cast<std::size_t>(budget.max_dedupe_n)) {
    throw BudgetExceeded("isomorphism dedupe on " + std::to_string(n) +
                         " vertices exceeds cap " +
                         std::to_string(budget.max_dedupe_n));
  }
}

std::vector<Graph> dedupe_sorted(const std::vector<Graph>& candidates) {
  std::map<std::string, Graph> classes;
  for (const auto& g : candidates) {
    auto code = canonical_code(g);
    if (!classes.contains(code)) classes.emplace(std::move(code), canonical_relabel(g));
  }
  std::vector<Graph> out;
  out.reserve(classes.size());
  for (auto& [code, g] : classes) out.push_back(std::move(g));
  return out;
}

}  // namespace

// ------------------------------------------------------------- fixtures

std::span<const std::string_view> fixture_names() {
  static const auto names = [] {
    std::array<std::string_view, kFixtures.size()> out{};
    for (std::size_t i = 0; i < kFixtures.size(); ++i) out[i] = kFixtures[i].name;
    return out;
  }();
  return names;
}

std::string_view fixture_text(std::string_view name) {
  for (const auto& f : kFixtures) {
    if (f.name == name) return f.text;
  }
  throw DomainError("unknown fixture '" + std::string(name) + "'");
}

Graph fixture(std::string_view name) { return parse_edge_list(fixture_text(name)); }

Graph family_g2k1(int k) {
  if (k < 1) throw DomainError("G_{2k+1} needs k >= 1");
  std::vector<std::pair<std::string, std::string>> edges{{"x", "y"}, {"y", "z"},
                                                         {"y", "v1"}};
  const int last = 2 * k + 1;
  for (int i = 1; i < last; ++i) {
    edges.emplace_back("v" + std::to_string(i), "v" + std::to_string(i + 1));
  }
  edges.emplace_back("v" + std::to_string(last - 1), "w");
  edges.emplace_back("v" + std::to_string(last), "w");
  std::vector<std::string> labels{"x", "y", "z"};
  for (int i = 1; i <= last; ++i) labels.push_back("v" + std::to_string(i));
  labels.push_back("w");
  return Graph::from_label_edges(std::move(labels), edges);
}

// ----------------------------------------------------------- generators

Graph decode_pruefer(std::span<const Vertex> sequence, std::size_t n) {
  if (n == 0) throw DomainError("tree needs at least one vertex");
  if (sequence.size() + 2 != n && !(n == 1 && sequence.empty())) {
    throw DomainError("Prüfer sequence must have length n-2");
  }
  return Graph::from_edges(numbered_labels(n), pruefer_edges(sequence, n));
}

std::vector<Graph> unlabeled_trees(std::size_t n) {
  if (n == 0) return {};
  std::set<std::string> codes{"()"};
  for (std::size_t size = 2; size <= n; ++size) {
    std::set<std::string> next;
    for (const auto& code : codes) {
      const Graph t = tree_from_code(code);
      auto edges = t.edges();
      auto labels = t.labels();
      labels.push_back(std::to_string(size));
      for (Vertex v = 0; v < t.order(); ++v) {
        auto grown = edges;
        grown.emplace_back(v, static_cast<Vertex>(size - 1));
        next.insert(tree_code(Graph::from_edges(labels, grown)));
      }
    }
    codes = std::move(next);
  }
  std::vector<Graph> out;
  for (const auto& code : codes) out.push_back(tree_from_code(code));
  return out;
}

void enumerate_trees(std::size_t n, bool dedupe, const Budget& budget,
                     const GraphVisitor& visit) {
  if (n == 0) return;
  if (dedupe) {
    for (const auto& t : unlabeled_trees(n)) {
      if (!visit(t)) return;
    }
    return;
  }
  if (n > static_cast<std::size_t>(budget.max_labeled_tree_n)) {
    throw BudgetExceeded("labelled tree stream on " + std::to_string(n) +
                         " vertices exceeds cap " +
                         std::to_string(budget.max_labeled_tree_n));
  }
  std::vector<Vertex> seq(n >= 2 ? n - 2 : 0, 0);
  while (true) {
    if (!visit(decode_pruefer(seq, n))) return;
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) return;
  }
}

void enumerate_unicyclic(std::size_t n, bool dedupe, const Budget& budget,
                         const GraphVisitor& visit) {
  if (n < 3) throw DomainError("unicyclic graphs need n >= 3");
  if (dedupe) {
    for (const auto& g : unlabeled_unicyclic(n, budget)) {
      if (!visit(g)) return;
    }
    return;
  }
  // Each labelled unicyclic graph arises once: from the tree obtained by
  // deleting its largest cycle edge.
  bool stop = false;
  enumerate_trees(n, false, budget, [&](const Graph& tree) {
    std::vector<std::vector<Vertex>> adj(n);
    for (Vertex v = 0; v < n; ++v) {
      adj[v].assign(tree.neighbors(v).begin(), tree.neighbors(v).end());
    }
    const auto base = tree.edges();
    for (Vertex u = 0; u < n && !stop; ++u) {
      const auto parent = tree_parents(adj, u);
      for (Vertex v = u + 1; v < n; ++v) {
        if (tree.adjacent(u, v)) continue;
        const Edge added(u, v);
        bool largest = true;
        for (Vertex x = v; x != u; x = parent[x]) {
          if (Edge(x, parent[x]) > added) {
            largest = false;
            break;
          }
        }
        if (!largest) continue;
        auto edges = base;
        edges.push_back(added);
        if (!visit(Graph::from_edges(tree.labels(), edges))) {
          stop = true;
          break;
        }
      }
    }
    return !stop;
  });
}

std::vector<Graph> unlabeled_unicyclic(std::size_t n, const Budget& budget) {
  if (n < 3) throw DomainError("unicyclic graphs need n >= 3");
  require_dedupe_budget(n, budget);
  std::vector<Graph> candidates;
  for (const auto& t : unlabeled_trees(n)) {
    const auto base = t.edges();
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (t.adjacent(u, v)) continue;
        auto edges = base;
        edges.emplace_back(u, v);
        candidates.push_back(Graph::from_edges(t.labels(), edges));
      }
    }
  }
  return dedupe_sorted(candidates);
}

std::vector<Graph> unlabeled_connected(std::size_t n, const Budget& budget) {
  if (n == 0) return {};
  require_dedupe_budget(n, budget);
  // Every connected graph has a non-cut vertex, so growing each class on
  // n-1 vertices by one vertex with every non-empty neighbourhood is
  // exhaustive.
  std::vector<Graph> current{Graph::from_edges(numbered_labels(1), {})};
  for (std::size_t size = 2; size <= n; ++size) {
    std::vector<Graph> candidates;
    const auto labels = numbered_labels(size);
    for (const auto& g : current) {
      const auto base = g.edges();
      const std::uint32_t subsets = std::uint32_t{1} << (size - 1);
      for (std::uint32_t mask = 1; mask < subsets; ++mask) {
        auto edges = base;
        for (Vertex v = 0; v + 1 < size; ++v) {
          if (mask & (std::uint32_t{1} << v)) edges.emplace_back(v, static_cast<Vertex>(size - 1));
        }
        candidates.push_back(Graph::from_edges(labels, edges));
      }
    }
    current = dedupe_sorted(candidates);
  }
  return current;
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw DomainError("tree needs at least one vertex");
  std::mt19937_64 rng(seed);
  return decode_pruefer(random_sequence(rng, n), n);
}

Graph random_unicyclic(std::size_t n, std::uint64_t seed) {
  if (n < 3) throw DomainError("unicyclic graphs need n >= 3");
  std::mt19937_64 rng(seed);
  const auto seq = random_sequence(rng, n);
  auto edges = pruefer_edges(seq, n);
  const Graph tree = Graph::from_edges(numbered_labels(n), edges);
  std::vector<Edge> non_edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!tree.adjacent(u, v)) non_edges.emplace_back(u, v);
    }
  }
  edges.push_back(non_edges[below(rng, non_edges.size())]);
  return Graph::from_edges(numbered_labels(n), edges);
}

Graph random_connected(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw DomainError("graph needs at least one vertex");
  std::mt19937_64 rng(seed);
  const auto seq = random_sequence(rng, n);
  auto edges = pruefer_edges(seq, n);
  const Graph tree = Graph::from_edges(numbered_labels(n), edges);
  const std::uint64_t density = 50 + below(rng, 501);  // per mille
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!tree.adjacent(u, v) && below(rng, 1000) < density) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(numbered_labels(n), edges);
}

Graph random_bipartite(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw DomainError("graph needs at least one vertex");
  std::mt19937_64 rng(seed);
  const auto seq = random_sequence(rng, n);
  auto edges = pruefer_edges(seq, n);
  const Graph tree = Graph::from_edges(numbered_labels(n), edges);
  const auto side = *two_coloring(tree);
  const std::uint64_t density = 50 + below(rng, 501);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (side[u] != side[v] && !tree.adjacent(u, v) && below(rng, 1000) < density) {
        edges.emplace_back(u, v);
      }
    }
  }
  return Graph::from_edges(numbered_labels(n), edges);
}

// -------------------------------------------------------------- families

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::fixtures: return "fixtures";
    case FamilyKind::trees: return "trees";
    case FamilyKind::unicyclic: return "unicyclic";
    case FamilyKind::connected: return "connected";
    case FamilyKind::random_connected: return "random-connected";
    case FamilyKind::random_unicyclic: return "random-unicyclic";
    case FamilyKind::g2k1: return "g2k1";
  }
  return "unknown";
}

FamilyKind parse_family_kind(std::string_view name) {
  for (auto kind : {FamilyKind::fixtures, FamilyKind::trees, FamilyKind::unicyclic,
                    FamilyKind::connected, FamilyKind::random_connected,
                    FamilyKind::random_unicyclic, FamilyKind::g2k1}) {
    if (to_string(kind) == name) return kind;
  }
  throw DomainError("unknown family '" + std::string(name) + "'");
}

std::string FamilySpec::describe() const {
  std::string out(to_string(kind));
  switch (kind) {
    case FamilyKind::random_connected:
    case FamilyKind::random_unicyclic:
      out += " count=" + std::to_string(count) + " n=" + std::to_string(min_n) +
             ".." + std::to_string(max_n) + " seed=" + std::to_string(seed);
      break;
    case FamilyKind::fixtures:
      break;
    default:
      out += " n=" + std::to_string(min_n) + ".." + std::to_string(max_n);
      if (kind != FamilyKind::g2k1) out += dedupe ? " deduped" : " labelled";
      break;
  }
  return out;
}

void for_each_graph(const FamilySpec& family, const Budget& budget,
                    const NamedGraphVisitor& visit) {
  const std::string prefix(to_string(family.kind));
  auto emit_indexed = [&](std::size_t n, auto&& enumerate) {
    std::size_t i = 0;
    bool keep_going = true;
    enumerate([&](const Graph& g) {
      keep_going = visit(NamedGraph{
          prefix + ":" + std::to_string(n) + ":" + std::to_string(i++), g});
      return keep_going;
    });
    return keep_going;
  };

  switch (family.kind) {
    case FamilyKind::fixtures:
      for (auto name : fixture_names()) {
        Graph g = fixture(name);
        if (g.order() < family.min_n) continue;
        if (family.max_n != 0 && g.order() > family.max_n) continue;
        if (!visit(NamedGraph{std::string(name), std::move(g)})) return;
      }
      return;
    case FamilyKind::trees:
      for (std::size_t n = std::max<std::size_t>(family.min_n, 1); n <= family.max_n; ++n) {
        const bool more = emit_indexed(n, [&](const GraphVisitor& v) {
          enumerate_trees(n, family.dedupe, budget, v);
        });
        if (!more) return;
      }
      return;
    case FamilyKind::unicyclic:
      for (std::size_t n = std::max<std::size_t>(family.min_n, 3); n <= family.max_n; ++n) {
        const bool more = emit_indexed(n, [&](const GraphVisitor& v) {
          enumerate_unicyclic(n, family.dedupe, budget, v);
        });
        if (!more) return;
      }
      return;
    case FamilyKind::connected:
      if (!family.dedupe) throw DomainError("connected family is only available deduplicated");
      for (std::size_t n = std::max<std::size_t>(family.min_n, 1); n <= family.max_n; ++n) {
        const bool more = emit_indexed(n, [&](const GraphVisitor& v) {
          for (const auto& g : unlabeled_connected(n, budget)) {
            if (!v(g)) return;
          }
        });
        if (!more) return;
      }
      return;
    case FamilyKind::random_connected:
    case FamilyKind::random_unicyclic: {
      const bool unicyclic = family.kind == FamilyKind::random_unicyclic;
      const std::size_t lo = std::max<std::size_t>(family.min_n, unicyclic ? 3 : 1);
      if (family.max_n < lo) throw DomainError("random family needs max_n >= " + std::to_string(lo));
      for (std::size_t i = 0; i < family.count; ++i) {
        const std::uint64_t s = splitmix(family.seed * 0x100000001b3ULL + i);
        std::mt19937_64 pick(s);
        const std::size_t n = lo + below(pick, family.max_n - lo + 1);
        Graph g = unicyclic ? random_unicyclic(n, splitmix(s)) : random_connected(n, splitmix(s));
        if (!visit(NamedGraph{prefix + ":" + std::to_string(family.seed) + ":" +
                                  std::to_string(i),
                              std::move(g)})) {
          return;
        }
      }
      return;
    }
    case FamilyKind::g2k1:
      for (int k = 1; static_cast<std::size_t>(2 * k + 5) <= family.max_n; ++k) {
        if (static_cast<std::size_t>(2 * k + 5) < family.min_n) continue;
        if (!visit(NamedGraph{"g2k1:" + std::to_string(k), family_g2k1(k)})) return;
      }
      return;
  }
}

std::vector<NamedGraph> collect(const FamilySpec& family, const Budget& budget) {
  std::vector<NamedGraph> out;
  for_each_graph(family, budget, [&](const NamedGraph& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

}  // namespace kecore
