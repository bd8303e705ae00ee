#pragma once

#include <cstddef>

namespace dyck {

// Lattice node of the Dyck triangle: i is the position along the word, j the
// unbalance (path height) after i symbols. Reachable nodes have j <= i and
// i + j even; unreachable coordinates are still representable so that lookups
// can answer 0 for them.
struct NodeCoord {
  std::size_t i = 0;
  std::size_t j = 0;

  constexpr bool reachable() const { return j <= i && (i + j) % 2 == 0; }

  friend constexpr bool operator==(const NodeCoord&, const NodeCoord&) = default;
};

// (n, k) alias of a reachable node: n = (i + j) / 2 indexes the isoline
// (Catalan index), k = (i - j) / 2 the position within the column.
struct IsolineIndex {
  std::size_t n = 0;
  std::size_t k = 0;

  friend constexpr bool operator==(const IsolineIndex&, const IsolineIndex&) = default;
};

// Throws InvalidNode when the node is not reachable.
IsolineIndex ij_to_nk(NodeCoord node);

// Throws InvalidNode when k > n.
NodeCoord nk_to_ij(std::size_t n, std::size_t k);

}  // namespace dyck
