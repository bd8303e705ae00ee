#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace dyck {

// Arbitrary-precision nonnegative integer. Subtraction that would go below
// zero throws std::underflow_error instead of wrapping.
class BigNat {
 public:
  BigNat() = default;
  BigNat(std::uint64_t v) : value_(v) {}  // NOLINT: implicit by intent

  static BigNat from_string(std::string_view decimal);

  std::string to_string() const;
  bool is_zero() const { return value_.is_zero(); }

  // Throws std::overflow_error when the value does not fit.
  std::uint64_t to_u64() const;

  BigNat& operator+=(const BigNat& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  BigNat& operator-=(const BigNat& rhs);
  BigNat& operator*=(const BigNat& rhs) {
    value_ *= rhs.value_;
    return *this;
  }
  // Throws std::domain_error on division by zero.
  BigNat& operator/=(const BigNat& rhs);
  BigNat& operator%=(const BigNat& rhs);

  friend BigNat operator+(BigNat a, const BigNat& b) { return a += b; }
  friend BigNat operator-(BigNat a, const BigNat& b) { return a -= b; }
  friend BigNat operator*(BigNat a, const BigNat& b) { return a *= b; }
  friend BigNat operator/(BigNat a, const BigNat& b) { return a /= b; }
  friend BigNat operator%(BigNat a, const BigNat& b) { return a %= b; }

  friend bool operator==(const BigNat& a, const BigNat& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b) {
    const int c = a.value_.compare(b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigNat& v);

 private:
  using Rep = boost::multiprecision::cpp_int;
  explicit BigNat(Rep v) : value_(std::move(v)) {}

  Rep value_;
};

inline BigNat square(const BigNat& v) { return v * v; }

}  // namespace dyck
