#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "kecore/errors.hpp"
#include "kecore/graph.hpp"

namespace kecore::detail {

/// Adjacency bitmasks for graphs with at most 64 vertices.
struct BitGraph {
  int n = 0;
  std::vector<std::uint64_t> nb;

  static BitGraph from(const Graph& g) {
    if (g.order() > 64) throw BudgetExceeded("bitmask routines need n <= 64");
    BitGraph b;
    b.n = static_cast<int>(g.order());
    b.nb.assign(g.order(), 0);
    for (Vertex v = 0; v < g.order(); ++v) {
      for (Vertex w : g.neighbors(v)) b.nb[v] |= std::uint64_t{1} << w;
    }
    return b;
  }

  std::uint64_t full() const {
    return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }
};

inline std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

inline std::vector<Vertex> mask_members(std::uint64_t mask) {
  std::vector<Vertex> out;
  while (mask) {
    out.push_back(static_cast<Vertex>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

inline std::uint64_t set_mask(const VertexSet& s) {
  std::uint64_t m = 0;
  for (Vertex v : s) m |= bit(static_cast<int>(v));
  return m;
}

}  // namespace kecore::detail
