#include "weylext/digits.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace weylext {

BlockCoordinates digits_of(Prime p, int q, Int m) {
  if (q < 1) throw std::out_of_range("digit length must be >= 1");
  if (m < 1 || m > pow_saturated(p.value(), q))
    throw std::out_of_range("module index " + std::to_string(m) +
                            " outside [1, p^q]");
  std::vector<Int> digits(static_cast<std::size_t>(q));
  Int rest = m - 1;
  for (int g = q - 1; g >= 0; --g) {
    digits[static_cast<std::size_t>(g)] = rest % p.value() + 1;
    rest /= p.value();
  }
  return BlockCoordinates{p, q, m, std::move(digits)};
}

Int index_of(Prime p, std::span<const Int> digits) {
  Int m = 0;
  for (Int d : digits) {
    if (d < 1 || d > p.value())
      throw std::out_of_range("digit " + std::to_string(d) +
                              " outside [1, p]");
    if (m > (std::numeric_limits<Int>::max() - (d - 1)) / p.value())
      throw std::out_of_range("index exceeds the representable range");
    m = m * p.value() + (d - 1);
  }
  return m + 1;
}

int minimal_q(Prime p, Int m, Int ell) {
  if (m < 1 || ell < 1) throw std::out_of_range("module indices must be >= 1");
  Int need = std::max(m, ell);
  int q = 1;
  Int power = p.value();
  while (power < need) {
    power = pow_saturated(p.value(), q + 1);
    ++q;
  }
  return q;
}

std::vector<Int> weight_deltas(std::span<const Int> source,
                               std::span<const Int> target) {
  if (source.size() != target.size())
    throw std::invalid_argument("digit vectors differ in length");
  std::vector<Int> w(source.size());
  for (std::size_t g = 0; g < source.size(); ++g) w[g] = target[g] - source[g];
  return w;
}

std::vector<int> parity_prefix(Prime p, std::span<const Int> w) {
  std::vector<int> prefix(w.size() + 1, 0);
  for (std::size_t f = 1; f <= w.size(); ++f) {
    if (p.value() >= 3)
      prefix[f] = parity(prefix[f - 1] + w[f - 1]);
    else
      prefix[f] = parity(w[f - 1]);
  }
  return prefix;
}

int delta_div(Int b, Int a) {
  if (a < 1) throw std::out_of_range("divisor must be >= 1");
  return b % a == 0 ? 1 : 0;
}

}  // namespace weylext
