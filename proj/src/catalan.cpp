#include "dyck/catalan.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "dyck/errors.hpp"

namespace dyck {

IsolineIndex ij_to_nk(NodeCoord node) {
  if (!node.reachable()) {
    throw InvalidNode("node (" + std::to_string(node.i) + ", " + std::to_string(node.j) +
                      ") is not reachable");
  }
  return {(node.i + node.j) / 2, (node.i - node.j) / 2};
}

NodeCoord nk_to_ij(std::size_t n, std::size_t k) {
  if (k > n) {
    throw InvalidNode("isoline index k = " + std::to_string(k) + " exceeds n = " +
                      std::to_string(n));
  }
  return {n + k, n - k};
}

BigNat binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return BigNat(0);
  k = std::min(k, n - k);
  // After step i the accumulator is binom(n - k + i, i), so every division is exact.
  BigNat acc(1);
  for (std::int64_t i = 1; i <= k; ++i) {
    acc *= BigNat(static_cast<std::uint64_t>(n - k + i));
    acc /= BigNat(static_cast<std::uint64_t>(i));
  }
  return acc;
}

BigNat catalan(std::size_t n, std::size_t cap) {
  if (n > cap) throw CapExceeded("catalan", n, cap);
  const auto m = static_cast<std::int64_t>(n);
  return binomial(2 * m, m) / BigNat(n + 1);
}

BigNat ballot(std::size_t n, std::size_t j) {
  if (j > n) return BigNat(0);
  const auto top = static_cast<std::int64_t>(2 * n - j);
  const auto low = static_cast<std::int64_t>(n - j);
  return binomial(top, low) - binomial(top, low - 1);
}

BigNat column_term(std::size_t n, std::size_t k) {
  if (k > n / 2) {
    throw OutOfRange("column term k = " + std::to_string(k) + " outside 0.." +
                     std::to_string(n / 2) + " for n = " + std::to_string(n));
  }
  const auto nn = static_cast<std::int64_t>(n);
  const auto kk = static_cast<std::int64_t>(k);
  return binomial(nn, kk) - binomial(nn, kk - 1);
}

std::vector<BigNat> Decomposition::squares() const {
  std::vector<BigNat> out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back(square(t));
  return out;
}

BigNat Decomposition::sum_of_squares() const {
  BigNat total;
  for (const auto& t : terms) total += square(t);
  return total;
}

Decomposition decompose(std::size_t n, std::size_t cap) {
  if (n > cap) throw CapExceeded("decompose", n, cap);
  Decomposition d;
  d.n = n;
  d.terms.reserve(n / 2 + 1);
  for (std::size_t k = 0; k <= n / 2; ++k) d.terms.push_back(column_term(n, k));
  d.catalan = catalan(n, cap);
  if (d.sum_of_squares() != d.catalan) {
    throw std::logic_error("decompose: sum of squares differs from C_" + std::to_string(n));
  }
  return d;
}

ConvolutionMatrix::ConvolutionMatrix(std::size_t n_max, std::size_t j_max)
    : n_max_(n_max), j_max_(j_max), entries_((n_max + 1) * (j_max + 1)) {}

const BigNat& ConvolutionMatrix::at(std::size_t n, std::size_t j) const {
  if (n > n_max_ || j > j_max_) {
    throw OutOfTable("convolution cell (" + std::to_string(n) + ", " + std::to_string(j) +
                     ") outside " + std::to_string(n_max_) + " x " + std::to_string(j_max_));
  }
  return entries_[j * (n_max_ + 1) + n];
}

ConvolutionMatrix convolution_matrix(std::size_t n_max, std::size_t j_max, std::size_t cap) {
  if (n_max > cap) throw CapExceeded("convolution_matrix n_max", n_max, cap);
  if (j_max > cap) throw CapExceeded("convolution_matrix j_max", j_max, cap);
  ConvolutionMatrix m(n_max, j_max);
  for (std::size_t j = 0; j <= j_max; ++j) {
    for (std::size_t n = 0; n <= n_max; ++n) m.entries_[j * (n_max + 1) + n] = ballot(n, j);
  }
  return m;
}

}  // namespace dyck
