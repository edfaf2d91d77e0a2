#pragma once

#include <array>
#include <compare>
#include <vector>

#include "weylext/types.hpp"

namespace weylext {

/// A point of Z^4 carrying (s, j0, k0, t). Validity is always relative to a
/// named polytope, tested by the in_poly_* predicates below.
struct PolytopeElement4 {
  Int s = 0;
  Int j0 = 0;
  Int k0 = 0;
  Int t = 0;

  friend auto operator<=>(const PolytopeElement4&,
                          const PolytopeElement4&) = default;
};

/// A point of Z^7 carrying (s, i, j, k, a, b, t): one basis vector of the
/// space spanned by the chainable tuples. i is the tensor degree, (j, k)
/// the shifted algebraic/homological degrees, (a, b) the diagonal counters.
struct UpsilonElement {
  Int s = 0;
  Int i = 0;
  Int j = 0;
  Int k = 0;
  Int a = 0;
  Int b = 0;
  Int t = 0;

  friend auto operator<=>(const UpsilonElement&,
                          const UpsilonElement&) = default;
};

/// One basis vector of Ext^k between the m-th and ell-th standard modules:
/// a q-tuple chained by i_1 = 0 and i_g = j_{g-1}.
using BasisTuple = std::vector<UpsilonElement>;

// Membership tests for the four Z^4 polytopes. The *_zero and *_mbar
// variants each exclude one exceptional corner point.
bool in_poly_c(Prime p, const PolytopeElement4& e);
bool in_poly_zero(Prime p, const PolytopeElement4& e);
bool in_poly_m(Prime p, const PolytopeElement4& e);
bool in_poly_mbar(Prime p, const PolytopeElement4& e);

/// Degree conversion (j0, k0) -> (i, j, k) for diagonal offsets (a, b):
///   i = -a-b,
///   j = j0 - (a-b-1)p + 1 if a >= b+1,  j0 if a = b,  j0 + 1 if a = b-1,
///   k = k0 + (a-b-1)(p-1) if a >= b+1,  k0 if a <= b.
/// Throws std::domain_error if a < b-1.
std::array<Int, 3> convert_ijk(Prime p, Int j0, Int k0, Int a, Int b);

// Membership in the three disjoint families whose union carries the basis.
bool in_s1(Prime p, const UpsilonElement& v);
bool in_s2(Prime p, const UpsilonElement& v);
bool in_s3(Prime p, const UpsilonElement& v);

/// The complete finite fiber over fixed (s, t, i): all elements of the
/// union S1 (cup) S2 (cup) S3 with those components. Finite because
/// a + b = -i in S1/S2 and S3 forces i = 1. Emission order: S1 sorted by
/// (b, u), then S2, then S3. Every returned element has k >= 0.
std::vector<UpsilonElement> enumerate_upsilon(Prime p, Int s, Int t, Int i);

/// Brute-force enumeration of all chained q-tuples with total degree k
/// between modules m and ell, by depth-first chaining with i_1 = 0,
/// i_g = j_{g-1}. Throws std::out_of_range unless 1 <= m, ell <= p^q.
std::vector<BasisTuple> enumerate_basis(Prime p, int q, Int k, Int m, Int ell);

/// Second, independent enumeration of the same tuples via the case-shape
/// parameterization over (u_g, c_g). Returned sorted lexicographically.
std::vector<BasisTuple> enumerate_cases(Prime p, int q, Int k, Int m, Int ell);

/// Exhaustively checks, over all candidate tuples with 0 <= a, b <= ab_bound:
/// (a) S1, S2, S3 are pairwise disjoint, and (b) the image of the Z^6
/// construction (polytope membership plus degree conversion, plus the S3
/// adjunction) equals the union of S1, S2, S3 within the bound.
bool verify_decomposition(Prime p, Int ab_bound = 4);

}  // namespace weylext
