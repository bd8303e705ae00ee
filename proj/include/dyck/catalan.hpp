#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dyck/bignat.hpp"
#include "dyck/node.hpp"

namespace dyck {

inline constexpr std::size_t kDefaultClosedFormCap = 100'000;
inline constexpr std::size_t kDefaultMatrixCap = 2'000;

// Exact binomial coefficient; 0 when k < 0 or k > n.
BigNat binomial(std::int64_t n, std::int64_t k);

// n-th Catalan number, binom(2n, n) / (n + 1).
BigNat catalan(std::size_t n, std::size_t cap = kDefaultClosedFormCap);

// Entry c(n, j) of the Catalan convolution matrix:
// binom(2n - j, n - j) - binom(2n - j, n - j - 1), and 0 for j > n.
BigNat ballot(std::size_t n, std::size_t j);

// t_{n,k} = binom(n, k) - binom(n, k - 1), the k-th entry of column n of the
// Dyck triangle, i.e. d(n, n - 2k). Throws OutOfRange when k > n / 2.
BigNat column_term(std::size_t n, std::size_t k);

// C_n split into floor(n/2) + 1 squares: catalan == sum of terms[k]^2.
struct Decomposition {
  std::size_t n = 0;
  std::vector<BigNat> terms;
  BigNat catalan;

  std::vector<BigNat> squares() const;
  BigNat sum_of_squares() const;
};

Decomposition decompose(std::size_t n, std::size_t cap = kDefaultClosedFormCap);

// Dense (n_max + 1) x (j_max + 1) grid of ballot numbers, immutable once built.
class ConvolutionMatrix {
 public:
  std::size_t n_max() const { return n_max_; }
  std::size_t j_max() const { return j_max_; }

  // Throws OutOfTable outside the built grid.
  const BigNat& at(std::size_t n, std::size_t j) const;

 private:
  friend ConvolutionMatrix convolution_matrix(std::size_t, std::size_t, std::size_t);
  ConvolutionMatrix(std::size_t n_max, std::size_t j_max);

  std::size_t n_max_;
  std::size_t j_max_;
  std::vector<BigNat> entries_;  // row-major by j
};

ConvolutionMatrix convolution_matrix(std::size_t n_max, std::size_t j_max,
                                     std::size_t cap = kDefaultMatrixCap);

}  // namespace dyck
