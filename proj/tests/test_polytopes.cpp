#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "weylext/digits.hpp"
#include "weylext/polytopes.hpp"

using namespace weylext;

TEST_CASE("four-coordinate polytope membership") {
  const Prime p3{3};
  CHECK(in_poly_c(p3, {1, 0, 0, 1}));
  CHECK(in_poly_c(p3, {1, 1, 0, 2}));
  CHECK_FALSE(in_poly_c(p3, {1, 0, 1, 2}));  // t-s = 1 but j0+2k0 = 2
  CHECK_FALSE(in_poly_c(p3, {1, 2, -1, 1}));  // diagonal needs j0 = k0 = 0

  CHECK(in_poly_m(p3, {3, 0, -1, 1}));
  CHECK(in_poly_m(p3, {1, -4, 2, 1}));
  CHECK_FALSE(in_poly_mbar(p3, {3, 0, -1, 1}));  // the excluded corner
  CHECK(in_poly_mbar(p3, {1, -4, 2, 1}));

  CHECK(in_poly_zero(p3, {1, 0, 0, 3}));
  CHECK(in_poly_zero(p3, {2, 0, 0, 2}));
  CHECK_FALSE(in_poly_zero(p3, {3, 0, 0, 1}));  // the excluded corner
  CHECK_FALSE(in_poly_zero(p3, {1, 0, 0, 2}));
}

TEST_CASE("full middle polytope for p = 3") {
  // all 18 points, written (s, j0, k0, t)
  const std::set<PolytopeElement4> expected{
      {3, 0, -1, 1}, {3, -2, 0, 1}, {2, -1, 0, 1}, {2, -3, 1, 1},
      {1, -2, 1, 1}, {1, -4, 2, 1}, {3, -1, 0, 2}, {3, -3, 1, 2},
      {2, -2, 1, 2}, {2, -4, 2, 2}, {1, -3, 2, 2}, {1, -5, 3, 2},
      {3, -2, 1, 3}, {3, -4, 2, 3}, {2, -3, 2, 3}, {2, -5, 3, 3},
      {1, -4, 3, 3}, {1, -6, 4, 3}};
  std::set<PolytopeElement4> got;
  for (Int s = 1; s <= 3; ++s)
    for (Int t = 1; t <= 3; ++t)
      for (Int k0 = -12; k0 <= 12; ++k0)
        for (Int j0 = -24; j0 <= 24; ++j0)
          if (in_poly_m(Prime{3}, {s, j0, k0, t})) got.insert({s, j0, k0, t});
  CHECK(got == expected);
}

TEST_CASE("degree conversion") {
  CHECK(convert_ijk(Prime{3}, 1, 0, 2, 2) == std::array<Int, 3>{-4, 1, 0});
  CHECK(convert_ijk(Prime{3}, 0, 0, 1, 0) == std::array<Int, 3>{-1, 1, 0});
  CHECK(convert_ijk(Prime{3}, 0, 0, 0, 1) == std::array<Int, 3>{-1, 1, 0});
  CHECK(convert_ijk(Prime{3}, 0, -1, 3, 1) == std::array<Int, 3>{-4, -2, 1});
  CHECK_THROWS_AS(convert_ijk(Prime{3}, 0, 0, 0, 2), std::domain_error);
}

TEST_CASE("seven-coordinate membership") {
  const Prime p3{3};
  CHECK(in_s1(p3, {1, 0, -1, 1, 0, 0, 2}));
  CHECK(in_s3(p3, {1, 1, 1, 0, 0, 0, 3}));
  CHECK(in_s2(p3, {1, -1, 1, 0, 0, 1, 3}));

  CHECK_FALSE(in_s1(p3, {1, 0, 1, 1, 0, 0, 2}));   // k inconsistent with u
  CHECK_FALSE(in_s2(p3, {3, -1, 1, 0, 0, 1, 1}));  // s = p excluded
  CHECK_FALSE(in_s3(p3, {1, 1, 1, 0, 0, 0, 2}));   // t must mirror s

  // (s,t) = (p,1) with u = 1 and a-b = 1 is cut off by the t-s >= 2-p side
  // condition; the u = 0 companion stays.
  CHECK_FALSE(in_s1(p3, {3, -1, 1, -1, 1, 0, 1}));
  CHECK(in_s1(p3, {3, -1, -1, 0, 1, 0, 1}));
  CHECK_FALSE(in_s1(Prime{2}, {2, -1, 1, -1, 1, 0, 1}));
}

TEST_CASE("fiber enumeration") {
  const Prime p3{3};
  CHECK(enumerate_upsilon(p3, 1, 2, 0) ==
        std::vector<UpsilonElement>{{1, 0, -1, 1, 0, 0, 2},
                                    {1, 0, 1, 0, 0, 0, 2}});
  CHECK(enumerate_upsilon(p3, 1, 3, 1) ==
        std::vector<UpsilonElement>{{1, 1, 1, 0, 0, 0, 3}});
  CHECK(enumerate_upsilon(p3, 1, 1, 1).empty());
  CHECK(enumerate_upsilon(p3, 3, 1, -1) ==
        std::vector<UpsilonElement>{{3, -1, -1, 0, 1, 0, 1}});

  // every fiber element has non-negative homological degree and lies in
  // exactly one of the three families
  for (Int s = 1; s <= 3; ++s)
    for (Int t = 1; t <= 3; ++t)
      for (Int i = -6; i <= 1; ++i)
        for (const auto& v : enumerate_upsilon(p3, s, t, i)) {
          CHECK(v.k >= 0);
          const int hits = (in_s1(p3, v) ? 1 : 0) + (in_s2(p3, v) ? 1 : 0) +
                           (in_s3(p3, v) ? 1 : 0);
          CHECK(hits == 1);
        }
}

TEST_CASE("basis enumeration counts") {
  CHECK(enumerate_basis(Prime{3}, 1, 0, 1, 2).size() == 1);
  CHECK(enumerate_basis(Prime{3}, 1, 1, 1, 3).size() == 1);
  CHECK(enumerate_basis(Prime{3}, 1, 3, 1, 3).empty());
  CHECK(enumerate_basis(Prime{3}, 1, 2, 1, 3).size() == 1);
  CHECK_THROWS_AS(enumerate_basis(Prime{3}, 1, 0, 0, 2), std::out_of_range);
  CHECK_THROWS_AS(enumerate_basis(Prime{3}, 1, 0, 1, 4), std::out_of_range);
}

TEST_CASE("tuple structure") {
  for (Int p : {2, 3}) {
    const Prime pr{p};
    const int q = 2;
    const Int block = pow_saturated(p, q);
    for (Int m = 1; m <= block; ++m)
      for (Int ell = m; ell <= block; ++ell)
        for (Int k = 0; k <= ell - m; ++k)
          for (const auto& tuple : enumerate_basis(pr, q, k, m, ell)) {
            REQUIRE(tuple.size() == static_cast<std::size_t>(q));
            CHECK(tuple.front().i == 0);
            Int ksum = 0;
            bool tail = false;  // once in family 2 or 3, stay in family 3
            for (std::size_t g = 0; g < tuple.size(); ++g) {
              if (g >= 1) CHECK(tuple[g].i == tuple[g - 1].j);
              ksum += tuple[g].k;
              if (tail) CHECK(in_s3(pr, tuple[g]));
              if (in_s2(pr, tuple[g]) || in_s3(pr, tuple[g])) tail = true;
            }
            CHECK(ksum == k);
            const auto sc = digits_of(pr, q, m);
            const auto tc = digits_of(pr, q, ell);
            for (std::size_t g = 0; g < tuple.size(); ++g) {
              CHECK(tuple[g].s == sc.digits[g]);
              CHECK(tuple[g].t == tc.digits[g]);
            }
          }
  }
}

TEST_CASE("case-shape enumeration agrees with chaining") {
  CHECK(enumerate_cases(Prime{3}, 1, 0, 1, 2) ==
        enumerate_basis(Prime{3}, 1, 0, 1, 2));
  CHECK(enumerate_cases(Prime{3}, 2, 0, 1, 1).size() == 1);

  for (Int p : {2, 3}) {
    const Prime pr{p};
    for (int q = 1; q <= 2; ++q) {
      const Int block = pow_saturated(p, q);
      for (Int m = 1; m <= block; ++m)
        for (Int ell = 1; ell <= block; ++ell)
          for (Int k = 0; k <= ell - m; ++k) {
            auto chained = enumerate_basis(pr, q, k, m, ell);
            std::sort(chained.begin(), chained.end());
            CHECK(std::adjacent_find(chained.begin(), chained.end()) ==
                  chained.end());
            const auto cased = enumerate_cases(pr, q, k, m, ell);
            CHECK(std::adjacent_find(cased.begin(), cased.end()) ==
                  cased.end());
            REQUIRE(chained == cased);
          }
    }
  }
}

TEST_CASE("decomposition of the seven-coordinate set") {
  CHECK(verify_decomposition(Prime{2}, 4));
  CHECK(verify_decomposition(Prime{3}, 4));
  CHECK(verify_decomposition(Prime{5}, 3));
}
