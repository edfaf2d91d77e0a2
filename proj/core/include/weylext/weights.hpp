#pragma once

#include <optional>

#include "weylext/types.hpp"

namespace weylext {

/// Dominant highest weights of two standard modules, restricted to SL2.
struct WeightPair {
  Int lambda = 0;
  Int mu = 0;
};

/// Position of the pair inside a common block: e is the index derived from
/// lambda, m the index derived from mu.
struct BlockPosition {
  Int m = 1;
  Int e = 1;

  friend bool operator==(const BlockPosition&, const BlockPosition&) = default;
};

/// Block placement of the two weights, or nullopt when the weights lie in
/// different blocks (every Ext group vanishes then; this is an answer, not
/// an error). Throws std::out_of_range on negative weights.
std::optional<BlockPosition> block_position(Prime p, WeightPair wp);

}  // namespace weylext
