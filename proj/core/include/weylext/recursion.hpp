#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "weylext/lru_cache.hpp"
#include "weylext/types.hpp"

namespace weylext {

/// Key of the one-parameter-per-slot count: level h = v.size(), target
/// degree l, entry vector v (leading entry first).
struct BKey {
  Int l = 0;
  std::vector<Int> v;

  int h() const { return static_cast<int>(v.size()); }
  friend bool operator==(const BKey&, const BKey&) = default;
};

/// Key of the two-parameter-per-slot count: level h = w.size(), total
/// degree k, weight vector w.
struct AKey {
  Int k = 0;
  std::vector<Int> w;

  int h() const { return static_cast<int>(w.size()); }
  friend bool operator==(const AKey&, const AKey&) = default;
};

struct KeyHash {
  std::size_t operator()(const BKey& key) const;
  std::size_t operator()(const AKey& key) const;
};

/// The four-term split of one Ext dimension and its total.
struct DimBreakdown {
  Count d1, d2, d3, d4;

  Count total() const { return d1 + d2 + d3 + d4; }
};

inline constexpr std::size_t kDefaultCacheCapacity = std::size_t{1} << 20;

/// Memoized exact evaluator for one characteristic p. Logically pure:
/// results are independent of call order and cache capacity. Not
/// synchronized; concurrent table generation uses one engine per worker.
class ExtEngine {
public:
  explicit ExtEngine(Prime p, std::size_t cache_capacity = kDefaultCacheCapacity);

  Prime prime() const { return p_; }

  /// Count of admissible (c_1,...,c_h) patterns, by the leading-entry
  /// peel-off recursion. Total over all integer keys.
  Count b_count(const BKey& key);

  /// Count of admissible (u_1,...,u_h, c_1,...,c_h) patterns, by the
  /// analogous two-branch recursion. Total over all integer keys.
  Count a_count(const AKey& key);

  /// Same count via the 2^h shift-summation over b_count; kept as an
  /// independent cross-check route for a_count.
  Count a_count_via_b(const AKey& key);

  /// dim Ext^k between modules m and ell, split into the four summands.
  /// Outside 0 <= k <= ell - m every component is zero. The block length q
  /// defaults to the minimal one; any q with m, ell <= p^q gives the same
  /// total. Throws std::out_of_range on m, ell < 1 or m, ell > p^q.
  DimBreakdown ext_dim(Int k, Int m, Int ell, std::optional<int> q = {});

private:
  Prime p_;
  LruCache<BKey, Count, KeyHash> b_cache_;
  LruCache<AKey, Count, KeyHash> a_cache_;
};

/// The mirrored pair (p^q + 1 - ell, p^q + 1 - m); dimensions at the
/// mirrored pair coincide with those at (m, ell).
std::pair<Int, Int> duality_partner(Prime p, int q, Int m, Int ell);

}  // namespace weylext
