#include "weylext/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace weylext {

namespace {

double log_base(double base, double x) { return std::log(x) / std::log(base); }

// Sums a_0 + a_1 x + ... where each coefficient arises from the previous one
// via ratio(n); stops once the next term is negligible relative to the sum.
template <typename Ratio>
double sum_series(double first, double x, Ratio ratio) {
  double sum = first;
  double term = first;
  for (int n = 1; n < 10000; ++n) {
    term *= x * ratio(n);
    if (!std::isfinite(term)) break;
    sum += term;
    if (term < kSeriesRelTol * sum) break;
  }
  return sum;
}

}  // namespace

double sandwich_series_lower(Prime p, double x) {
  const double base = static_cast<double>(p.value()) + 1.0;
  return sum_series(0.5, x, [&](int n) {
    return 1.0 / (n * (std::pow(base, n) + 1.0));
  });
}

double sandwich_series_upper(Prime p, double x) {
  const double base = static_cast<double>(p.value());
  return sum_series(1.0, x, [&](int n) {
    return 1.0 / (n * (std::pow(base, n) - 1.0));
  });
}

double damped_exp_series(Int base, double x) {
  if (base < 1 || x < 0) throw std::domain_error("needs base >= 1 and x >= 0");
  const double b = static_cast<double>(base);
  return sum_series(1.0, x, [&](int n) { return 1.0 / (n * std::pow(b, n)); });
}

Interval damped_exp_bounds(Int base, double x) {
  if (base < 2 || x < base) throw std::domain_error("needs x >= base >= 2");
  const double lg = log_base(static_cast<double>(base), x);
  Interval out;
  out.lower = std::exp(0.5 * (lg - 3.0) * std::log(x) - std::lgamma(lg + 1.0));
  out.upper = std::exp(1.0) * std::pow(static_cast<double>(base), 0.125) *
              std::pow(x, 0.5 * (lg - 1.0));
  return out;
}

double sandwich_constant_lower(Prime p) {
  const double base = static_cast<double>(p.value()) + 1.0;
  double prod = 0.5;
  for (int j = 1; j < 10000; ++j) {
    const double delta = 1.0 / (std::pow(base, j) + 1.0);
    prod *= 1.0 - delta;
    if (delta < kSeriesRelTol) break;
  }
  return prod;
}

double sandwich_constant_upper(Prime p) {
  const double base = static_cast<double>(p.value());
  double prod = 1.0;
  for (int j = 1; j < 10000; ++j) {
    const double delta = 1.0 / (std::pow(base, j) - 1.0);
    prod *= 1.0 + delta;
    if (delta < kSeriesRelTol) break;
  }
  return prod;
}

double rdd_lower_bound(Prime p, Int d) {
  if (d < 1) throw std::domain_error("needs d >= 1");
  const double lg = log_base(static_cast<double>(p.value()) + 1.0,
                             static_cast<double>(d));
  return sandwich_constant_lower(p) *
         std::exp(0.5 * (lg - 3.0) * std::log(static_cast<double>(d)) -
                  std::lgamma(lg + 1.0));
}

double rdd_upper_bound(Prime p, Int d) {
  if (d < 1) throw std::domain_error("needs d >= 1");
  const double lg =
      log_base(static_cast<double>(p.value()), static_cast<double>(d));
  return sandwich_constant_upper(p) *
         std::pow(static_cast<double>(d), 0.5 * (lg - 1.0));
}

double zp_lower_bound(Prime p, Int d) { return rdd_lower_bound(p, d); }

double zp_upper_bound(Prime p, Int d) {
  if (d < 0) throw std::domain_error("needs d >= 0");
  const double lg = log_base(static_cast<double>(p.value()),
                             static_cast<double>(d) + 1.0);
  return std::pow(lg + 3.0, static_cast<double>(d));
}

double zp_upper_recursive(Prime p, Int d) {
  if (d < 0) throw std::domain_error("needs d >= 0");
  double last = 1.0;
  double partial = 1.0;  // sum of the bound over [0, g)
  for (Int g = 1; g <= d; ++g) {
    const double lg = log_base(static_cast<double>(p.value()),
                               static_cast<double>(g));
    last = 1.0 + (lg + 2.0) * partial;
    partial += last;
  }
  return last;
}

double x_lower_bound(Prime p, Int k) {
  if (k < 10) throw std::domain_error("needs k >= 10");
  const double lg = log_base(static_cast<double>(p.value()) + 1.0,
                             static_cast<double>(k));
  return sandwich_constant_lower(p) *
         std::exp((0.5 * lg - 6.0) * std::log(static_cast<double>(k)) -
                  std::lgamma(lg + 1.0));
}

double x_upper_bound(Prime p, Int k) {
  if (k < 0) throw std::domain_error("needs k >= 0");
  const double kk = static_cast<double>(k);
  const double lg = log_base(static_cast<double>(p.value()), kk + 1.0);
  return std::pow(kk + 4.0, 3.0) * std::pow(32.0 * lg + 96.0, kk);
}

Int lower_bound_witness(Prime p, Int k, Int m) {
  const Int pv = p.value();
  if (pv >= 3)
    return m + 2 * pv * (pv * pv - 1) * floor_div(k, 5) +
           2 * (pv - 1) * floor_div(k, 2);
  return m + 16 * floor_div(k, 5) + k;
}

std::vector<BoundValue> bounds_for_d(Prime p, Int d) {
  std::vector<BoundValue> out;
  const double x = static_cast<double>(d);
  out.push_back({"series_lower", sandwich_series_lower(p, x)});
  out.push_back({"series_upper", sandwich_series_upper(p, x)});
  out.push_back({"damped_exp_p", damped_exp_series(p.value(), x)});
  out.push_back({"damped_exp_p_plus_1", damped_exp_series(p.value() + 1, x)});
  out.push_back({"c1", sandwich_constant_lower(p)});
  out.push_back({"c2", sandwich_constant_upper(p)});
  if (d >= 1) {
    out.push_back({"rdd_lower", rdd_lower_bound(p, d)});
    out.push_back({"rdd_upper", rdd_upper_bound(p, d)});
    out.push_back({"zp_lower", zp_lower_bound(p, d)});
  }
  out.push_back({"zp_upper", zp_upper_bound(p, d)});
  out.push_back({"zp_upper_recursive", zp_upper_recursive(p, d)});
  return out;
}

std::vector<BoundValue> bounds_for_k(Prime p, Int k) {
  std::vector<BoundValue> out;
  out.push_back({"x_upper", x_upper_bound(p, k)});
  if (k >= 10) out.push_back({"x_lower", x_lower_bound(p, k)});
  return out;
}

}  // namespace weylext
