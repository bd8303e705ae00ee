#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dyck/bignat.hpp"
#include "dyck/node.hpp"

namespace dyck {

inline constexpr std::size_t kDefaultTableCap = 2'000;

/// Labels d(i, j) of the Dyck triangle for every reachable node with
/// i <= i_max: the number of path prefixes from (0, 0) to (i, j).
///
/// Row i holds floor(i/2) + 1 values; slot k stores d(i, i - 2k), so
/// unreachable nodes have no storage and read back as 0. Immutable after
/// build() and safe to share across threads.
class TriangleTable {
 public:
  std::size_t i_max() const { return rows_.size() - 1; }

  /// Row i in slot order, i.e. d(i, i), d(i, i - 2), ..., d(i, i mod 2).
  /// Throws OutOfTable when i > i_max().
  std::span<const BigNat> row(std::size_t i) const;

 private:
  friend TriangleTable build(std::size_t, std::size_t);
  TriangleTable() = default;

  std::vector<std::vector<BigNat>> rows_;
};

/// Fills the table with the forward recurrence
/// d(i, j) = d(i-1, j-1) + d(i-1, j+1), d(0, 0) = 1, treating the neighbour
/// above the top edge (j + 1 > i - 1) as 0.
TriangleTable build(std::size_t i_max, std::size_t cap = kDefaultTableCap);

/// d(i, j); 0 for unreachable nodes. Throws OutOfTable when i > i_max.
BigNat dynamics(const TriangleTable& table, NodeCoord node);

/// d̄(i, j) inside the n-triangle: the number of reversed paths from (2n, 0)
/// back to the node, equal to d(2n - i, j). Throws OutOfTable when
/// node.i > 2n or 2n > i_max.
BigNat reverse_dynamics(const TriangleTable& table, std::size_t n, NodeCoord node);

/// Number of Dyck paths of semilength n passing through the node,
/// d(node) * d̄(node).
BigNat paths_through(const TriangleTable& table, std::size_t n, NodeCoord node);

/// Self-symmetric column n: [d(n, n), d(n, n - 2), ..., d(n, n mod 2)].
std::vector<BigNat> column(const TriangleTable& table, std::size_t n);

}  // namespace dyck
