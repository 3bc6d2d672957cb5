#pragma once

#include <cstddef>
#include <vector>

#include "kecore/budget.hpp"
#include "kecore/graph.hpp"

namespace kecore {

/// A tree hanging off the cycle: the component of G - xy containing x,
/// where x is off the cycle and y is its unique cycle neighbour.
struct Pendant {
  Vertex root;    // x, index in the unicyclic graph
  Vertex anchor;  // y, on the cycle
  Graph tree;     // labels preserved from the unicyclic graph
};

struct UnicyclicDecomposition {
  /// Cycle in walk order, starting at the smallest label and heading
  /// towards the smaller of its two cycle neighbours.
  std::vector<Vertex> cycle;
  VertexSet cycle_set;
  /// N1(C): vertices off the cycle with a neighbour on it.
  VertexSet attachments;
  /// One per attachment vertex, ordered by root label.
  std::vector<Pendant> pendants;
};

/// Throws PreconditionError unless g is connected with exactly one cycle.
UnicyclicDecomposition decompose(const Graph& g);

struct KeClassification {
  bool ke = false;
  std::size_t alpha_plus_mu = 0;
  /// Computed edge by edge, independently of `ke`.
  bool cycle_edges_alpha_critical = false;
};

KeClassification classify_ke_unicyclic(const Graph& g, const Budget& budget = {});

/// Union of core(T_x) over the pendant trees. The three structural routines
/// require a unicyclic non-König-Egerváry graph and throw PreconditionError
/// otherwise.
VertexSet structural_core(const Graph& g, const Budget& budget = {});

/// V(C) together with corona(T_x) over the pendant trees.
VertexSet structural_corona(const Graph& g, const Budget& budget = {});

/// Union of ker(T_x) over the pendant trees.
VertexSet structural_ker(const Graph& g, const Budget& budget = {});

/// Maps a vertex set of a pendant tree back into the unicyclic graph.
VertexSet lift(const Graph& g, const Graph& tree, const VertexSet& s);

}  // namespace kecore
