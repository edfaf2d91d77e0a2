#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "test_oracles.hpp"
#include "weylext/digits.hpp"
#include "weylext/partitions.hpp"
#include "weylext/recursion.hpp"

using namespace weylext;
using weylext::testing::q_direct;
using weylext::testing::r_direct;

TEST_CASE("simultaneous representations") {
  PartitionEngine eng{Prime{3}};
  CHECK(eng.partition_q(0, 0) == 1);
  CHECK(eng.partition_q(3, 1) == 1);
  CHECK(eng.partition_q(4, 1) == 0);
  CHECK(eng.partition_q(-1, 2) == 0);
  CHECK(eng.partition_q(2, -1) == 0);

  for (Int p : {2, 3, 5}) {
    PartitionEngine e{Prime{p}};
    for (Int big = 0; big <= 40; ++big)
      for (Int small = 0; small <= 40; ++small)
        CHECK(e.partition_q(big, small) == q_direct(p, big, small));
  }
}

TEST_CASE("digit sums") {
  CHECK(digit_sum(Prime{3}, 0) == 0);
  CHECK(digit_sum(Prime{3}, 4) == 2);
  CHECK(digit_sum(Prime{2}, 7) == 3);
  CHECK_THROWS_AS(digit_sum(Prime{3}, -1), std::out_of_range);

  // a digit sum above the part bound kills the simultaneous count
  PartitionEngine eng{Prime{3}};
  for (Int big = 0; big <= 60; ++big)
    for (Int small = 0; small <= 6; ++small)
      if (digit_sum(Prime{3}, big) > small)
        CHECK(eng.partition_q(big, small) == 0);
}

TEST_CASE("weakly decreasing representations") {
  PartitionEngine eng{Prime{3}};
  CHECK(eng.partition_r(0, 5) == 1);
  CHECK(eng.partition_r(4, 4) == 2);
  CHECK(eng.partition_r(-2, 4) == 0);
  CHECK(eng.partition_r(4, -1) == 0);

  for (Int p : {2, 3, 5}) {
    PartitionEngine e{Prime{p}};
    for (Int value = 0; value <= 120; ++value)
      for (Int d = 0; d <= 12; ++d)
        CHECK(e.partition_r(value, d) == r_direct(p, value, d));
  }
}

TEST_CASE("part bound saturation and monotonicity") {
  for (Int p : {2, 3}) {
    PartitionEngine e{Prime{p}};
    for (Int value = 0; value <= 60; ++value) {
      for (Int d = value; d <= value + 5; ++d)
        CHECK(e.partition_r(value, d) == e.partition_r(value, value));
      for (Int d = 0; d < 30; ++d)
        CHECK(e.partition_r(value, d) <= e.partition_r(value, d + 1));
    }
  }
}

TEST_CASE("bounded-length representations") {
  PartitionEngine eng{Prime{3}};
  CHECK(eng.partition_r_level(2, 5, 0) == 1);
  CHECK(eng.partition_r_level(7, 5, 0) == 0);
  CHECK_THROWS_AS(eng.partition_r_level(2, 5, -1), std::out_of_range);

  // at level floor(log_p value) the bounded count saturates
  for (Int p : {2, 3}) {
    PartitionEngine e{Prime{p}};
    for (Int value = 0; value <= 100; ++value) {
      Int level = 0;
      while (pow_saturated(p, static_cast<int>(level) + 1) <= value) ++level;
      for (Int d = 0; d <= 10; ++d) {
        CHECK(e.partition_r_level(value, d, level) == e.partition_r(value, d));
        for (Int h = 0; h <= level; ++h)
          CHECK(e.partition_r_level(value, d, h) <= e.partition_r(value, d));
      }
    }
  }
}

TEST_CASE("simultaneous count through the decreasing one") {
  PartitionEngine eng3{Prime{3}};
  CHECK(eng3.q_via_r(3, 1) == 1);
  CHECK(eng3.q_via_r(4, 2) == 1);
  PartitionEngine eng2{Prime{2}};
  CHECK(eng2.q_via_r(5, 2) == eng2.partition_q(5, 2));

  for (Int p : {2, 3, 5}) {
    PartitionEngine e{Prime{p}};
    for (Int big = 0; big <= 60; ++big)
      for (Int small = 0; small <= 60; ++small)
        CHECK(e.q_via_r(big, small) == e.partition_q(big, small));
  }
}

TEST_CASE("closed form for pattern counts") {
  PartitionEngine eng{Prime{3}};
  ExtEngine ext{Prime{3}};
  const std::vector<Int> v10{1, 0}, v00{0, 0}, v1{1}, v50{5, 0}, vneg{-1, 0};
  CHECK(eng.b_explicit(3, v10) == 1);
  CHECK(eng.b_explicit(3, v10) == ext.b_count({3, {1, 0}}));
  CHECK(eng.b_explicit(1, v00) == 0);
  CHECK_THROWS_AS(eng.b_explicit(1, v1), std::domain_error);
  CHECK_THROWS_AS(eng.b_explicit(1, v50), std::domain_error);
  CHECK_THROWS_AS(eng.b_explicit(-1, v10), std::domain_error);
  CHECK_THROWS_AS(eng.b_explicit(1, vneg), std::domain_error);

  std::mt19937 rng{20240817u};
  for (Int p : {2, 3, 5}) {
    PartitionEngine pe{Prime{p}};
    ExtEngine ee{Prime{p}};
    std::uniform_int_distribution<Int> pick_h{2, 5};
    std::uniform_int_distribution<Int> pick_v{1 - p, p - 1};
    int done = 0;
    while (done < 200) {
      const int h = static_cast<int>(pick_h(rng));
      std::vector<Int> v(static_cast<std::size_t>(h));
      Int value = 0;
      for (auto& entry : v) {
        entry = pick_v(rng);
        value = value * p + entry;
      }
      if (value < 0) continue;
      std::uniform_int_distribution<Int> pick_l{0, value + 3};
      const Int l = pick_l(rng);
      CHECK(pe.b_explicit(l, v) == ee.b_count({l, v}));
      ++done;
    }
  }
}

TEST_CASE("diagonal counts via gap substitution") {
  // Writing m_i = g_i + g_{i+1} + ... turns a weakly decreasing
  // representation of M into an unbounded sum of repunits 1 + p + ... + p^j,
  // giving an independent knapsack route to the diagonal count.
  auto knapsack_diagonal = [](Int p, Int max) {
    std::vector<Count> ways(static_cast<std::size_t>(max) + 1);
    ways[0] = 1;
    for (Int repunit = 1; repunit <= max; repunit = repunit * p + 1)
      for (Int m = repunit; m <= max; ++m)
        ways[static_cast<std::size_t>(m)] +=
            ways[static_cast<std::size_t>(m - repunit)];
    return ways;
  };
  for (Int p : {2, 3}) {
    PartitionEngine eng{Prime{p}};
    const auto ways = knapsack_diagonal(p, 2000);
    for (Int m = 0; m <= 400; ++m)
      CHECK(eng.partition_r(m, m) == ways[static_cast<std::size_t>(m)]);
    CHECK(eng.partition_r(2000, 2000) == ways[2000]);
  }
  PartitionEngine eng2{Prime{2}};
  CHECK(eng2.partition_r(2000, 2000) == Count{3364745671});
  PartitionEngine eng3{Prime{3}};
  CHECK(eng3.partition_r(2000, 2000) == Count{5557785});
}

TEST_CASE("bounded maximum scan") {
  PartitionEngine eng2{Prime{2}};
  CHECK(eng2.z_scan(0, 100) == 1);
  PartitionEngine eng3{Prime{3}};
  CHECK(eng3.z_scan(1, 1000) == 1);
  for (Int d = 0; d <= 8; ++d)
    CHECK(eng3.z_scan(d, default_scan_limit(Prime{3}, d)) >=
          eng3.partition_r(d, d));
  CHECK(default_scan_limit(Prime{3}, 8) == 243);  // 3^(2+3)
}

TEST_CASE("step sums bracket the diagonal count") {
  for (Int p : {2, 3}) {
    PartitionEngine e{Prime{p}};
    for (Int d = 0; d <= 80; ++d) {
      Count lower = 0, upper = 0;
      for (Int n = 0; n <= d / (p + 1); ++n) lower += e.partition_r(n, n);
      for (Int n = 0; n <= d / p; ++n) upper += e.partition_r(n, n);
      const Count diag = e.partition_r(d, d);
      CHECK(lower <= diag);
      CHECK(diag <= upper);
    }
  }
}

TEST_CASE("dimension dominates the all-zero-shift pattern count") {
  ExtEngine eng{Prime{3}};
  const int q = 2;
  for (Int m = 1; m <= 9; ++m)
    for (Int ell = m; ell <= 9; ++ell)
      for (Int k = 0; k <= ell - m; ++k) {
        const auto w = weight_deltas(digits_of(Prime{3}, q, m).digits,
                                     digits_of(Prime{3}, q, ell).digits);
        CHECK(eng.ext_dim(k, m, ell, q).total() >= eng.b_count({k, w}));
      }
}
