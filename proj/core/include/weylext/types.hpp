#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace weylext {

using Int = std::int64_t;

/// Exact non-negative counter. Dimensions and partition counts can exceed
/// 64 bits for large inputs, so all counting paths use arbitrary precision.
using Count = boost::multiprecision::cpp_int;

/// The characteristic of the base field. Only 2 <= p < 2^31 is enforced;
/// primality is deliberately not checked (composite p gives whatever the
/// combinatorics give, which is the caller's responsibility). The upper
/// limit keeps products like p^2 and 2p(p^2-1) inside 64 bits.
class Prime {
public:
  explicit Prime(Int p) : value_(p) {
    if (p < 2) throw std::out_of_range("characteristic must be >= 2");
    if (p >= (Int{1} << 31))
      throw std::out_of_range("characteristic must be < 2^31");
  }
  Int value() const { return value_; }

  friend bool operator==(Prime a, Prime b) { return a.value_ == b.value_; }

private:
  Int value_;
};

/// Floor division, correct for negative numerators. Denominator must be > 0.
constexpr Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Ceiling division, correct for negative numerators. Denominator must be > 0.
constexpr Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

/// Non-negative residue of x mod m (m > 0). The C `%` of a negative operand
/// is implementation-shaped noise for our purposes; all congruence checks go
/// through this helper.
constexpr Int mod_residue(Int x, Int m) {
  Int r = x % m;
  return r < 0 ? r + m : r;
}

/// Parity in {0,1}, sign-safe.
constexpr int parity(Int x) { return static_cast<int>(mod_residue(x, 2)); }

/// p^q saturated at the Int maximum. Comparisons "m <= p^q" stay exact for
/// every representable m even when the true power overflows.
constexpr Int pow_saturated(Int p, int q) {
  Int result = 1;
  constexpr Int kMax = std::numeric_limits<Int>::max();
  for (int i = 0; i < q; ++i) {
    if (result > kMax / p) return kMax;
    result *= p;
  }
  return result;
}

}  // namespace weylext
