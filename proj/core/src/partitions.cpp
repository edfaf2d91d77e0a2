#include "weylext/partitions.hpp"

#include <algorithm>
#include <stdexcept>

#include "weylext/digits.hpp"

namespace weylext {

Int digit_sum(Prime p, Int value) {
  if (value < 0) throw std::out_of_range("digit sum needs a non-negative value");
  Int sum = 0;
  while (value > 0) {
    sum += value % p.value();
    value /= p.value();
  }
  return sum;
}

Int default_scan_limit(Prime p, Int d) {
  int e = 0;
  while (pow_saturated(p.value(), e) < d + 1) ++e;
  return pow_saturated(p.value(), e + 3);
}

std::size_t PartitionEngine::PairHash::operator()(
    const std::pair<Int, Int>& k) const {
  std::size_t h = std::hash<Int>{}(k.first);
  return h ^ (std::hash<Int>{}(k.second) + 0x9e3779b97f4a7c15ULL + (h << 6) +
              (h >> 2));
}

std::size_t PartitionEngine::TripleHash::operator()(
    const std::array<Int, 3>& k) const {
  std::size_t h = std::hash<Int>{}(k[0]);
  h ^= std::hash<Int>{}(k[1]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= std::hash<Int>{}(k[2]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

PartitionEngine::PartitionEngine(Prime p, std::size_t cache_capacity)
    : p_(p),
      q_cache_(cache_capacity),
      r_cache_(cache_capacity),
      rh_cache_(cache_capacity) {}

Count PartitionEngine::partition_q(Int big, Int small) {
  if (big < 0 || small < 0) return 0;
  if (big == 0) return small == 0 ? 1 : 0;
  const auto key = std::make_pair(big, small);
  if (auto cached = q_cache_.get(key)) return *cached;

  // Depth-first over the first term n_0: then p must divide the remainder,
  // and the tail is the same problem with big/p.
  const Int p = p_.value();
  Count total = 0;
  for (Int n0 = mod_residue(big, p); n0 <= std::min(big, small); n0 += p)
    total += partition_q((big - n0) / p, small - n0);
  q_cache_.put(key, total);
  return total;
}

Count PartitionEngine::partition_r(Int value, Int d) {
  if (value < 0 || d < 0) return 0;
  if (value == 0) return 1;
  const auto key = std::make_pair(value, d);
  if (auto cached = r_cache_.get(key)) return *cached;

  // Peel off m_0 = value - N*p; the remaining digits form the same problem
  // for N with ceiling d' = m_0.
  const Int p = p_.value();
  Count total = 0;
  const Int lo = std::max<Int>(0, ceil_div(value - d, p));
  const Int hi = floor_div(value, p);
  for (Int n = lo; n <= hi; ++n) total += partition_r(n, value - n * p);
  r_cache_.put(key, total);
  return total;
}

Count PartitionEngine::partition_r_level(Int value, Int d, Int h) {
  if (h < 0) throw std::out_of_range("level must be >= 0");
  if (value < 0 || d < 0) return 0;
  if (h == 0) return value <= d ? 1 : 0;
  const std::array<Int, 3> key{value, d, h};
  if (auto cached = rh_cache_.get(key)) return *cached;

  // Subtracting the common offset f = d_0 from every slot costs
  // f * (1 + p + ... + p^h) and drops the level by one. Saturation keeps
  // the f >= 1 terms correctly empty for very long slots.
  constexpr Int kMax = std::numeric_limits<Int>::max();
  Int repunit = 0;
  for (Int i = 0, pw = 1; i <= h; ++i) {
    repunit = repunit > kMax - pw ? kMax : repunit + pw;
    pw = pw > kMax / p_.value() ? kMax : pw * p_.value();
  }
  Count total = 0;
  for (Int f = 0; f <= d; ++f) {
    if (f > 0 && f > value / repunit) break;  // f * repunit would exceed value
    const Int rest = value - f * repunit;
    if (rest < 0) break;
    total += partition_r_level(rest, d - f, h - 1);
  }
  rh_cache_.put(key, total);
  return total;
}

Count PartitionEngine::q_via_r(Int big, Int small) {
  if (big < 0 || small < 0) return 0;
  const Int p = p_.value();
  if (mod_residue(big - small, p - 1) != 0) return 0;
  return partition_r((big - small) / (p - 1), small);
}

Count PartitionEngine::b_explicit(Int l, std::span<const Int> v) {
  const Int p = p_.value();
  const int h = static_cast<int>(v.size());
  if (h <= 1) throw std::domain_error("closed form needs at least two entries");
  __int128 acc = 0;
  for (Int entry : v) {
    if (entry > p - 1) throw std::domain_error("entry exceeds p-1");
    acc = acc * p + entry;
    if (acc > std::numeric_limits<Int>::max() ||
        acc < std::numeric_limits<Int>::min())
      throw std::domain_error("entry value exceeds the representable range");
  }
  const Int value = static_cast<Int>(acc);
  if (value < 0) throw std::domain_error("entry value must be non-negative");
  if (l < 0) throw std::domain_error("target degree must be non-negative");

  if (delta_div(value - l, 2 * (p - 1)) == 0) return 0;
  Count total = 0;
  const Int denom = 2 * p * p;
  for (Int d = 0; d <= l / 2; ++d) {
    const Int rest = l - 2 * d;
    const Int lo = std::max<Int>(0, ceil_div(value - p * rest, denom));
    const Int hi = floor_div(value - rest, denom);
    for (Int big = lo; big <= hi; ++big) total += partition_q(big, d);
  }
  return total;
}

Count PartitionEngine::z_scan(Int d, Int scan_limit) {
  Count best = 0;
  for (Int value = 0; value <= scan_limit; ++value)
    best = std::max(best, partition_r(value, d));
  return best;
}

}  // namespace weylext
