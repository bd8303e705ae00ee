#include "dyck/oracle.hpp"

#include <string>

#include "dyck/errors.hpp"

namespace dyck {

bool validate(std::string_view symbols) {
  std::size_t height = 0;
  for (char c : symbols) {
    if (c == kLeft) {
      ++height;
    } else if (c == kRight) {
      if (height == 0) return false;
      --height;
    } else {
      return false;
    }
  }
  return height == 0;
}

bool validate_by_positions(std::string_view symbols) {
  if (symbols.size() % 2 != 0) return false;
  const std::size_t n = symbols.size() / 2;
  std::size_t rights = 0;
  std::size_t lefts = 0;
  for (std::size_t pos = 1; pos <= symbols.size(); ++pos) {
    const char c = symbols[pos - 1];
    if (c == kLeft) {
      ++lefts;
    } else if (c == kRight) {
      ++rights;
      if (pos < 2 * rights || pos > n + rights) return false;
    } else {
      return false;
    }
  }
  return lefts == n && rights == n;
}

DyckWord DyckWord::parse(std::string_view symbols) {
  if (!validate(symbols)) throw InvalidWord("not a Dyck word: \"" + std::string(symbols) + "\"");
  return DyckWord(std::string(symbols));
}

UnbalanceProfile unbalance_profile(const DyckWord& word) {
  UnbalanceProfile out;
  out.reserve(word.symbols().size() + 1);
  std::size_t h = 0;
  out.push_back(h);
  for (char c : word.symbols()) {
    h = (c == kLeft) ? h + 1 : h - 1;
    out.push_back(h);
  }
  return out;
}

UnbalanceProfile unbalance_profile(std::string_view symbols) {
  return unbalance_profile(DyckWord::parse(symbols));
}

DyckWordRange::iterator::iterator(std::size_t n)
    : word_(std::string(n, kLeft) + std::string(n, kRight)), done_(false) {}

DyckWordRange::iterator& DyckWordRange::iterator::operator++() {
  const std::size_t len = word_.size();
  const std::size_t n = len / 2;
  // The successor flips the rightmost '(' that has a positive height before
  // it, then completes with as many '(' as remain followed by ')'.
  std::size_t height = 0;
  std::size_t lefts = 0;
  std::size_t pivot = len;
  std::size_t lefts_before_pivot = 0;
  for (std::size_t p = 0; p < len; ++p) {
    if (word_[p] == kLeft) {
      if (height > 0) {
        pivot = p;
        lefts_before_pivot = lefts;
      }
      ++height;
      ++lefts;
    } else {
      --height;
    }
  }
  if (pivot == len) {
    done_ = true;
    word_.clear();
    return *this;
  }
  word_[pivot] = kRight;
  std::size_t p = pivot + 1;
  for (std::size_t l = lefts_before_pivot; l < n; ++l) word_[p++] = kLeft;
  while (p < len) word_[p++] = kRight;
  return *this;
}

DyckWordRange enumerate(std::size_t n, std::size_t cap) {
  if (n > cap) throw CapExceeded("enumerate", n, cap);
  return DyckWordRange(n);
}

std::map<std::size_t, std::uint64_t> midpoint_histogram(std::size_t n, std::size_t cap) {
  if (n > cap) throw CapExceeded("midpoint_histogram", n, cap);
  std::map<std::size_t, std::uint64_t> hist;
  for (const auto& w : enumerate(n, cap)) {
    std::size_t h = 0;
    for (std::size_t p = 0; p < n; ++p) h = (w[p] == kLeft) ? h + 1 : h - 1;
    ++hist[h];
  }
  return hist;
}

}  // namespace dyck
