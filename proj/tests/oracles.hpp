#pragma once

// Reference computations used only by the tests. Each one takes a different
// route from the library code it is compared with.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dyck/bignat.hpp"

namespace dyck::testing {

// Every arrangement of n '(' and n ')' in lexicographic order, generated with
// std::next_permutation over the sorted multiset.
inline std::vector<std::string> all_arrangements(std::size_t n) {
  std::string s = std::string(n, '(') + std::string(n, ')');
  std::vector<std::string> out;
  do {
    out.push_back(s);
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

// Dyck check written as "minimum prefix sum is zero and total is zero".
inline bool brute_is_dyck(const std::string& s) {
  long sum = 0;
  long min_sum = 0;
  for (char c : s) {
    sum += c == '(' ? 1 : -1;
    min_sum = std::min(min_sum, sum);
  }
  return sum == 0 && min_sum == 0;
}

inline std::vector<std::string> brute_dyck_words(std::size_t n) {
  std::vector<std::string> out;
  for (auto& s : all_arrangements(n)) {
    if (brute_is_dyck(s)) out.push_back(std::move(s));
  }
  return out;
}

// Height at p = n over all semilength-n Dyck words, from the brute-force list.
inline std::map<std::size_t, std::uint64_t> brute_midpoint_histogram(std::size_t n) {
  std::map<std::size_t, std::uint64_t> hist;
  for (const auto& w : brute_dyck_words(n)) {
    const auto ups = static_cast<std::size_t>(std::count(w.begin(), w.begin() + n, '('));
    ++hist[ups - (n - ups)];
  }
  return hist;
}

// Number of +-1 walks of length i that stay >= 0 and end at height j, counted
// over all 2^i step sequences.
inline std::uint64_t brute_walk_count(std::size_t i, std::size_t j) {
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << i); ++mask) {
    long h = 0;
    bool ok = true;
    for (std::size_t b = 0; b < i && ok; ++b) {
      h += (mask >> b) & 1 ? 1 : -1;
      ok = h >= 0;
    }
    if (ok && h == static_cast<long>(j)) ++count;
  }
  return count;
}

inline BigNat factorial(std::size_t n) {
  BigNat f(1);
  for (std::size_t i = 2; i <= n; ++i) f *= BigNat(i);
  return f;
}

// Pascal's rule, row by row.
inline std::vector<std::vector<BigNat>> pascal_rows(std::size_t n_max) {
  std::vector<std::vector<BigNat>> rows{{BigNat(1)}};
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::vector<BigNat> r(n + 1, BigNat(1));
    for (std::size_t k = 1; k < n; ++k) r[k] = rows[n - 1][k - 1] + rows[n - 1][k];
    rows.push_back(std::move(r));
  }
  return rows;
}

// Catalan by (2n)! / (n! (n+1)!).
inline BigNat catalan_factorial(std::size_t n) {
  return factorial(2 * n) / (factorial(n) * factorial(n + 1));
}

// t_{n,k} via n(n-1)...(n-k+2) * (n - 2k + 1) / k!, valid for k >= 1.
inline BigNat falling_factorial_term(std::size_t n, std::size_t k) {
  BigNat prod(1);
  for (std::size_t f = 0; f + 1 < k; ++f) prod *= BigNat(n - f);
  prod *= BigNat(n - 2 * k + 1);
  return prod / factorial(k);
}

}  // namespace dyck::testing
