#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "ptchain/error.hpp"

namespace ptchain::detail {

inline constexpr int kMaxBisections = 400;
inline constexpr int kMaxNewtonSteps = 50;

/// Bisection on `sign_fn` over [lo, hi] down to width `tol`, then Newton on
/// `newton_fn` (returns {value, derivative}) kept inside the final bracket.
/// Falls back to the bracket midpoint when Newton misbehaves.
template <class SignFn, class NewtonFn>
double bracketed_root(SignFn&& sign_fn, NewtonFn&& newton_fn, double lo, double hi, double tol) {
  double flo = sign_fn(lo);
  if (flo == 0.0) return lo;
  if (sign_fn(hi) == 0.0) return hi;

  int iter = 0;
  while (hi - lo > tol) {
    if (++iter > kMaxBisections) throw NonConvergence("bisection did not reach the requested tolerance");
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // interval at machine resolution
    const double fmid = sign_fn(mid);
    if (fmid == 0.0) return mid;
    if ((fmid < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }

  const double mid = 0.5 * (lo + hi);
  const double slack = hi - lo;
  double x = mid;
  for (int k = 0; k < kMaxNewtonSteps; ++k) {
    const auto [value, slope] = newton_fn(x);
    if (value == 0.0) return x;
    const double step = value / slope;
    if (!std::isfinite(step)) return mid;
    const double next = x - step;
    if (next < lo - slack || next > hi + slack) return mid;
    if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(next))) {
      return next;
    }
    x = next;
  }
  return std::abs(newton_fn(x).first) < std::abs(newton_fn(mid).first) ? x : mid;
}

}  // namespace ptchain::detail
