#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <utility>

#include "weylext/lru_cache.hpp"
#include "weylext/recursion.hpp"
#include "weylext/types.hpp"

namespace weylext {

/// Base-p digit sum. Throws std::out_of_range for negative input.
Int digit_sum(Prime p, Int value);

/// Default scan ceiling for z_scan: p^(ceil(log_p(d+1)) + 3), saturated.
Int default_scan_limit(Prime p, Int d);

/// Memoized evaluators for the base-p partition functions of one
/// characteristic. Same purity and cache contract as ExtEngine.
class PartitionEngine {
public:
  explicit PartitionEngine(Prime p,
                           std::size_t cache_capacity = kDefaultCacheCapacity);

  Prime prime() const { return p_; }

  /// Number of sequences n_0, n_1, ... >= 0 with sum(n_i p^i) = big and
  /// sum(n_i) = small; 0 for negative arguments.
  Count partition_q(Int big, Int small);

  /// Number of representations value = sum(m_i p^i) with
  /// d >= m_0 >= m_1 >= ... >= 0; 0 for negative arguments.
  Count partition_r(Int value, Int d);

  /// Bounded-length variant: representations value = d_0 p^h + ... + d_h
  /// with 0 <= d_0 <= ... <= d_h <= d. Throws std::out_of_range for h < 0.
  Count partition_r_level(Int value, Int d, Int h);

  /// partition_q computed through partition_r; cross-check route.
  Count q_via_r(Int big, Int small);

  /// Closed-form evaluation of the (c_1,...,c_h) pattern count as a double
  /// sum of partition_q values. Requires h > 1, every entry <= p-1, a
  /// non-negative entry value sum(v_i p^(h-i)), and l >= 0; throws
  /// std::domain_error otherwise. Must agree with ExtEngine::b_count.
  Count b_explicit(Int l, std::span<const Int> v);

  /// max of partition_r(value, d) over 0 <= value <= scan_limit: a certified
  /// lower bound for the supremum over all values.
  Count z_scan(Int d, Int scan_limit);

private:
  Prime p_;
  struct PairHash {
    std::size_t operator()(const std::pair<Int, Int>& k) const;
  };
  struct TripleHash {
    std::size_t operator()(const std::array<Int, 3>& k) const;
  };
  LruCache<std::pair<Int, Int>, Count, PairHash> q_cache_;
  LruCache<std::pair<Int, Int>, Count, PairHash> r_cache_;
  LruCache<std::array<Int, 3>, Count, TripleHash> rh_cache_;
};

}  // namespace weylext
