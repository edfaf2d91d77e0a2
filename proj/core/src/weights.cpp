#include "weylext/weights.hpp"

#include <stdexcept>

namespace weylext {

std::optional<BlockPosition> block_position(Prime pr, WeightPair wp) {
  if (wp.lambda < 0 || wp.mu < 0)
    throw std::out_of_range("weights must be non-negative");
  const Int p = pr.value();
  Int lambda = wp.lambda;
  Int mu = wp.mu;
  // Each round strips one base-p digit; both weights shrink strictly once
  // either reaches p, so this terminates.
  while (true) {
    const Int i = lambda % p;
    const Int j = mu % p;
    const Int a = lambda / p;
    const Int b = mu / p;
    if ((i == p - 1) != (j == p - 1)) return std::nullopt;
    if (i == p - 1 && j == p - 1) {
      lambda = a;
      mu = b;
      continue;
    }
    const bool same_parity = parity(a) == parity(b);
    if ((same_parity && i == j) || (!same_parity && i == p - 2 - j))
      return BlockPosition{b + 1, a + 1};
    return std::nullopt;
  }
}

}  // namespace weylext
