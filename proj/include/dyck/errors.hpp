#pragma once

#include <stdexcept>
#include <string>

namespace dyck {

// Requested size is above a configured cap (enumeration, table, closed forms).
class CapExceeded : public std::length_error {
 public:
  CapExceeded(const std::string& what, std::size_t requested, std::size_t cap)
      : std::length_error(what + ": requested " + std::to_string(requested) +
                          " exceeds cap " + std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}

  std::size_t requested() const { return requested_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t requested_;
  std::size_t cap_;
};

// Lookup past the last built row of a TriangleTable, or outside an n-triangle.
class OutOfTable : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Node violating j <= i or the even-parity rule, or an (n, k) pair with k > n.
class InvalidNode : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidWord : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Index outside the domain of a closed form (e.g. k > n/2 for a column term).
class OutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace dyck
