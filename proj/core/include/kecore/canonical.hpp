#pragma once

#include <string>
#include <vector>

#include "kecore/graph.hpp"

namespace kecore {

/// Isomorphism-invariant code of a graph: two graphs get the same code iff
/// they are isomorphic. Individualisation-refinement search over colour
/// partitions, keeping the lexicographically largest adjacency string.
/// Exponential in the worst case; meant for small graphs.
std::string canonical_code(const Graph& g);

/// Vertex order realising canonical_code: result[i] is the vertex placed at
/// position i.
std::vector<Vertex> canonical_order(const Graph& g);

/// Copy of g with vertex at canonical position i relabelled "i+1".
Graph canonical_relabel(const Graph& g);

/// Linear-time canonical code for trees (centre-rooted nested parentheses).
/// Throws DomainError if g is not a tree.
std::string tree_code(const Graph& tree);

/// Rebuilds a tree from tree_code output, labels "1".."n" in preorder.
Graph tree_from_code(const std::string& code);

}  // namespace kecore
