#pragma once

#include <string>
#include <vector>

#include "weylext/types.hpp"

namespace weylext {

/// Relative truncation threshold for series and infinite-product
/// evaluation: terms (resp. factor offsets from 1) below this fraction of
/// the running value are dropped. The tails decay superexponentially, so
/// the truncation error is far below double rounding noise.
inline constexpr double kSeriesRelTol = 1e-15;

/// One evaluated bound formula, retrievable by name.
struct BoundValue {
  std::string formula_id;
  double value = 0.0;
};

/// Power series sandwiching the count of weakly decreasing base-p digit
/// representations of d at d itself: lower has coefficients
/// 1/(2 n! prod((p+1)^j + 1)), upper has 1/(n! prod(p^j - 1)).
double sandwich_series_lower(Prime p, double x);
double sandwich_series_upper(Prime p, double x);

/// Damped exponential sum(x^n / (n! base^(n(n+1)/2))) used to squeeze the
/// sandwich series. Requires base >= 1 and x >= 0.
double damped_exp_series(Int base, double x);

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
};

/// Log-gamma estimates enclosing damped_exp_series(base, x);
/// requires x >= base >= 2.
Interval damped_exp_bounds(Int base, double x);

/// Infinite-product constants tying the sandwich series to the damped
/// exponential: lower is in (0, 1/2), upper is > 1.
double sandwich_constant_lower(Prime p);
double sandwich_constant_upper(Prime p);

// Closed-form growth bounds. Domain violations throw std::domain_error.
double rdd_lower_bound(Prime p, Int d);       // d >= 1
double rdd_upper_bound(Prime p, Int d);       // d >= 1
double zp_lower_bound(Prime p, Int d);        // d >= 1
double zp_upper_bound(Prime p, Int d);        // d >= 0
double zp_upper_recursive(Prime p, Int d);    // d >= 0
double x_lower_bound(Prime p, Int k);         // k >= 10
double x_upper_bound(Prime p, Int k);         // k >= 0

/// Explicit target index realizing large Ext growth at degree k from
/// source m: m + 2p(p^2-1)*floor(k/5) + 2(p-1)*floor(k/2) for p >= 3,
/// m + 16*floor(k/5) + k for p = 2.
Int lower_bound_witness(Prime p, Int k, Int m);

/// All bound formulas applicable to a partition degree d, labelled.
std::vector<BoundValue> bounds_for_d(Prime p, Int d);

/// All bound formulas applicable to a cohomological degree k, labelled.
std::vector<BoundValue> bounds_for_k(Prime p, Int k);

}  // namespace weylext
