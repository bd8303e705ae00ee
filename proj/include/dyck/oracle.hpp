#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace dyck {

inline constexpr char kLeft = '(';
inline constexpr char kRight = ')';
inline constexpr std::size_t kDefaultOracleCap = 14;

// Balanced and no prefix has more ')' than '('. Any other character makes the
// word invalid.
bool validate(std::string_view symbols);

// Same language, checked through the positions of the ')' symbols: with n
// '(' and n ')', the i-th ')' (1-based) must sit at a 1-based position r_i
// with 2i <= r_i <= n + i.
bool validate_by_positions(std::string_view symbols);

// A validated Dyck word.
class DyckWord {
 public:
  DyckWord() = default;

  // Throws InvalidWord.
  static DyckWord parse(std::string_view symbols);

  const std::string& symbols() const { return symbols_; }
  std::size_t semilength() const { return symbols_.size() / 2; }

  friend bool operator==(const DyckWord&, const DyckWord&) = default;
  friend auto operator<=>(const DyckWord&, const DyckWord&) = default;

 private:
  explicit DyckWord(std::string s) : symbols_(std::move(s)) {}
  std::string symbols_;
};

// Heights j_0..j_{2n} of the path; j_p is the unbalance after p symbols.
using UnbalanceProfile = std::vector<std::size_t>;

UnbalanceProfile unbalance_profile(const DyckWord& word);
// Throws InvalidWord when the symbols are not a Dyck word.
UnbalanceProfile unbalance_profile(std::string_view symbols);

// Lazily generated Dyck words of semilength n in lexicographic order with
// '(' < ')'. Only the current word is held in memory.
class DyckWordRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = std::string;
    using difference_type = std::ptrdiff_t;
    using pointer = const std::string*;
    using reference = const std::string&;

    iterator() = default;

    reference operator*() const { return word_; }
    pointer operator->() const { return &word_; }
    iterator& operator++();
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

   private:
    friend class DyckWordRange;
    explicit iterator(std::size_t n);

    std::string word_;
    bool done_ = true;
  };

  explicit DyckWordRange(std::size_t n) : n_(n) {}

  iterator begin() const { return iterator(n_); }
  iterator end() const { return {}; }

 private:
  std::size_t n_;
};

// Throws CapExceeded when n > cap.
DyckWordRange enumerate(std::size_t n, std::size_t cap = kDefaultOracleCap);

// Count of semilength-n Dyck words by their height at the midpoint p = n.
// Keys are the heights n, n-2, ..., n mod 2.
std::map<std::size_t, std::uint64_t> midpoint_histogram(std::size_t n,
                                                        std::size_t cap = kDefaultOracleCap);

}  // namespace dyck
