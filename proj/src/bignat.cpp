#include "dyck/bignat.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace dyck {

BigNat BigNat::from_string(std::string_view decimal) {
  if (decimal.empty()) throw std::invalid_argument("BigNat: empty string");
  for (char c : decimal) {
    if (c < '0' || c > '9') throw std::invalid_argument("BigNat: not a decimal digit string");
  }
  return BigNat(Rep(std::string(decimal)));
}

std::string BigNat::to_string() const { return value_.str(); }

std::uint64_t BigNat::to_u64() const {
  if (value_ > std::numeric_limits<std::uint64_t>::max()) {
    throw std::overflow_error("BigNat: value exceeds 64 bits");
  }
  return value_.convert_to<std::uint64_t>();
}

BigNat& BigNat::operator-=(const BigNat& rhs) {
  if (rhs.value_ > value_) throw std::underflow_error("BigNat: negative difference");
  value_ -= rhs.value_;
  return *this;
}

BigNat& BigNat::operator/=(const BigNat& rhs) {
  if (rhs.value_.is_zero()) throw std::domain_error("BigNat: division by zero");
  value_ /= rhs.value_;
  return *this;
}

BigNat& BigNat::operator%=(const BigNat& rhs) {
  if (rhs.value_.is_zero()) throw std::domain_error("BigNat: division by zero");
  value_ %= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const BigNat& v) { return os << v.value_.str(); }

}  // namespace dyck
