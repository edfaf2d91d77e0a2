#pragma once

#include <span>
#include <vector>

#include "weylext/types.hpp"

namespace weylext {

/// Position of a standard module inside a block with p^q simples: the index
/// m in [1, p^q] together with its shifted base-p digits (s_1,...,s_q),
/// most significant first, each s_g in [1, p]. The digits of m-1 are
/// (s_1 - 1, ..., s_q - 1).
struct BlockCoordinates {
  Prime p;
  int q = 0;
  Int m = 0;
  std::vector<Int> digits;
};

/// Digit vector of m within a block of p^q simples.
/// Throws std::out_of_range unless 1 <= m <= p^q.
BlockCoordinates digits_of(Prime p, int q, Int m);

/// Inverse of digits_of. Throws std::out_of_range if any digit leaves [1, p].
Int index_of(Prime p, std::span<const Int> digits);

/// Smallest q >= 1 with m <= p^q and ell <= p^q, by exact integer
/// comparison against successive powers (no floating-point logarithms).
int minimal_q(Prime p, Int m, Int ell);

/// Componentwise target-minus-source digit differences w_g = t_g - s_g.
/// Throws std::invalid_argument on length mismatch.
std::vector<Int> weight_deltas(std::span<const Int> source,
                               std::span<const Int> target);

/// Parity prefix (W_0,...,W_q) with W_0 = 0 and, in {0,1},
///   W_f = (w_1 + ... + w_f) mod 2   for p >= 3,
///   W_f = w_f mod 2                 for p = 2.
std::vector<int> parity_prefix(Prime p, std::span<const Int> w);

/// 1 if a divides b (b may be negative or zero), else 0.
/// Throws std::out_of_range unless a >= 1.
int delta_div(Int b, Int a);

}  // namespace weylext
