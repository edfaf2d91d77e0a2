#include "weylext/recursion.hpp"

#include <span>
#include <stdexcept>

#include "weylext/digits.hpp"

namespace weylext {

namespace {

using Wide = __int128;

std::size_t hash_combine(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_ints(Int head, std::span<const Int> rest) {
  std::size_t seed = std::hash<Int>{}(head);
  for (Int x : rest) seed = hash_combine(seed, std::hash<Int>{}(x));
  return seed;
}

Int narrow(Wide value) {
  if (value > std::numeric_limits<Int>::max() ||
      value < std::numeric_limits<Int>::min())
    throw std::out_of_range("intermediate entry exceeds the representable range");
  return static_cast<Int>(value);
}

}  // namespace

std::size_t KeyHash::operator()(const BKey& key) const {
  return hash_ints(key.l, key.v);
}

std::size_t KeyHash::operator()(const AKey& key) const {
  return hash_ints(~key.k, key.w);
}

ExtEngine::ExtEngine(Prime p, std::size_t cache_capacity)
    : p_(p), b_cache_(cache_capacity), a_cache_(cache_capacity) {}

Count ExtEngine::b_count(const BKey& key) {
  const Int p = p_.value();
  if (key.h() < 1) throw std::invalid_argument("empty key");
  const Int v1 = key.v.front();
  if (v1 < 0) return 0;
  // l only decreases along the recursion, so a negative target is dead.
  if (key.l < 0) return 0;
  if (key.h() == 1) {
    // one slot: l must match v1 mod 2(p-1) and v1/p <= l <= v1,
    // cross-multiplied to keep everything integral
    const Wide l = key.l;
    const bool hit =
        (l - v1) % (2 * (p - 1)) == 0 && v1 <= Wide{p} * l && l <= v1;
    return hit ? 1 : 0;
  }
  if (auto cached = b_cache_.get(key)) return *cached;

  Count total = 0;
  BKey child;
  child.v.assign(key.v.begin() + 1, key.v.end());
  for (Int d = 0; d <= v1 / (2 * p); ++d) {
    child.l = key.l - 2 * d;
    child.v[0] = narrow(Wide{key.v[1]} + Wide{p} * (v1 - 2 * d * p));
    total += b_count(child);
  }
  b_cache_.put(key, total);
  return total;
}

Count ExtEngine::a_count(const AKey& key) {
  const Int p = p_.value();
  if (key.h() < 1) throw std::invalid_argument("empty key");
  // k only decreases along the recursion and the one-slot case needs
  // k + u in [w1/p', w1] with matching signs, so a negative k is dead.
  if (key.k < 0) return 0;
  const Int w1 = key.w.front();
  if (key.h() == 1) {
    int hits = 0;
    for (Int u = 0; u <= 1; ++u) {
      const Wide ku = Wide{key.k} + u;
      if ((ku - w1) % (2 * (p - 1)) == 0 &&
          w1 + Wide{2} * (p - 1) * u <= Wide{p} * ku && ku <= w1)
        ++hits;
    }
    // the two branches force incompatible residues, so they never both fire
    if (hits > 1) throw std::logic_error("one-slot count returned both branches");
    return hits;
  }
  if (auto cached = a_cache_.get(key)) return *cached;

  Count total = 0;
  AKey child;
  child.w.assign(key.w.begin() + 1, key.w.end());
  for (Int u = 0; u <= 1; ++u) {
    const Int lead = w1 - 2 * u;
    // A negative leading entry makes the inner sum empty. (Truncating
    // division would wrongly keep the d = 0 term for -2p < lead < 0.)
    if (lead < 0) continue;
    for (Int d = 0; d <= lead / (2 * p); ++d) {
      child.k = key.k - u - 2 * d;
      child.w[0] = narrow(Wide{key.w[1]} + Wide{p} * (lead - 2 * d * p));
      total += a_count(child);
    }
  }
  a_cache_.put(key, total);
  return total;
}

Count ExtEngine::a_count_via_b(const AKey& key) {
  const int h = key.h();
  if (h < 1) throw std::invalid_argument("empty key");
  if (h > 30)
    throw std::invalid_argument("shift summation has 2^h terms; level too large");
  Count total = 0;
  BKey shifted;
  shifted.v.resize(key.w.size());
  for (unsigned mask = 0; mask < (1u << h); ++mask) {
    Int usum = 0;
    for (int g = 0; g < h; ++g) {
      const Int u = (mask >> g) & 1u;
      usum += u;
      shifted.v[static_cast<std::size_t>(g)] =
          key.w[static_cast<std::size_t>(g)] - 2 * u;
    }
    shifted.l = key.k - usum;
    total += b_count(shifted);
  }
  return total;
}

DimBreakdown ExtEngine::ext_dim(Int k, Int m, Int ell, std::optional<int> q_opt) {
  if (m < 1 || ell < 1) throw std::out_of_range("module indices must be >= 1");
  DimBreakdown out{0, 0, 0, 0};
  if (k < 0 || k > ell - m) return out;

  const int q = q_opt ? *q_opt : minimal_q(p_, m, ell);
  const auto sc = digits_of(p_, q, m);
  const auto tc = digits_of(p_, q, ell);
  const auto w = weight_deltas(sc.digits, tc.digits);
  const auto parW = parity_prefix(p_, w);
  const Int p = p_.value();

  auto mirrored_from = [&](int from) {
    for (int g = from; g <= q; ++g)
      if (tc.digits[static_cast<std::size_t>(g - 1)] !=
          p + 1 - sc.digits[static_cast<std::size_t>(g - 1)])
        return false;
    return true;
  };

  AKey head;
  head.k = k;

  head.w = w;
  out.d1 = a_count(head);

  for (int h = 1; h <= q - 1; ++h) {
    head.w.assign(w.begin(), w.begin() + h);
    if (parW[static_cast<std::size_t>(h)] == 0 &&
        w[static_cast<std::size_t>(h)] == 1 && mirrored_from(h + 2))
      out.d2 += a_count(head);
    if (parW[static_cast<std::size_t>(h)] == 1 &&
        sc.digits[static_cast<std::size_t>(h)] != p && mirrored_from(h + 1))
      out.d4 += a_count(head);
  }

  if (k == 0 && w[0] == 1 && mirrored_from(2)) out.d3 = 1;
  return out;
}

std::pair<Int, Int> duality_partner(Prime p, int q, Int m, Int ell) {
  const Int block = pow_saturated(p.value(), q);
  if (m < 1 || m > block || ell < 1 || ell > block)
    throw std::out_of_range("module indices outside [1, p^q]");
  return {block + 1 - ell, block + 1 - m};
}

}  // namespace weylext
