#include "dyck/triangle.hpp"

#include <string>

#include "dyck/errors.hpp"

namespace dyck {
namespace {

void require_row(const TriangleTable& table, std::size_t i) {
  if (i > table.i_max()) {
    throw OutOfTable("row " + std::to_string(i) + " beyond table i_max " +
                     std::to_string(table.i_max()));
  }
}

}  // namespace

std::span<const BigNat> TriangleTable::row(std::size_t i) const {
  require_row(*this, i);
  return rows_[i];
}

TriangleTable build(std::size_t i_max, std::size_t cap) {
  if (i_max > cap) throw CapExceeded("triangle", i_max, cap);
  TriangleTable t;
  t.rows_.reserve(i_max + 1);
  t.rows_.push_back({BigNat(1)});
  for (std::size_t i = 1; i <= i_max; ++i) {
    const auto& prev = t.rows_[i - 1];
    std::vector<BigNat> cur(i / 2 + 1);
    // Slot k is j = i - 2k. Its lower-left neighbour (i-1, j-1) sits in slot k
    // of the previous row, its upper-left neighbour (i-1, j+1) in slot k-1.
    for (std::size_t k = 0; k < cur.size(); ++k) {
      const std::size_t j = i - 2 * k;
      BigNat v;
      if (j >= 1 && k < prev.size()) v += prev[k];
      if (k >= 1) v += prev[k - 1];
      cur[k] = std::move(v);
    }
    t.rows_.push_back(std::move(cur));
  }
  return t;
}

BigNat dynamics(const TriangleTable& table, NodeCoord node) {
  require_row(table, node.i);
  if (!node.reachable()) return BigNat(0);
  return table.row(node.i)[(node.i - node.j) / 2];
}

BigNat reverse_dynamics(const TriangleTable& table, std::size_t n, NodeCoord node) {
  require_row(table, 2 * n);
  if (node.i > 2 * n) {
    throw OutOfTable("node i = " + std::to_string(node.i) + " outside the " + std::to_string(n) +
                     "-triangle");
  }
  return dynamics(table, {2 * n - node.i, node.j});
}

BigNat paths_through(const TriangleTable& table, std::size_t n, NodeCoord node) {
  return reverse_dynamics(table, n, node) * dynamics(table, node);
}

std::vector<BigNat> column(const TriangleTable& table, std::size_t n) {
  const auto r = table.row(n);
  return {r.begin(), r.end()};
}

}  // namespace dyck
