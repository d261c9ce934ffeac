#pragma once

#include "geocheck/error.hpp"

#include <cmath>
#include <vector>

namespace geocheck {

/// Bisection on [lo, hi] given f(lo) and f(hi) of opposite sign. Runs until
/// the interval is narrower than x_tol or can no longer be split in double
/// precision.
template <class F>
double bisect(F&& f, double lo, double hi, double f_lo, double x_tol = 0.0) {
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi || hi - lo <= x_tol) break;
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// One root per sign change of f over n_samples equal subintervals of
/// [lo, hi], each refined by bisection; sorted ascending. Exact zeros at
/// sample points are reported once. Empty when no sign change is seen.
template <class F>
std::vector<double> bracketed_roots(F&& f, double lo, double hi, int n_samples, double x_tol = 0.0) {
  if (!(hi > lo) || n_samples < 1) {
    throw Error(ErrorKind::kInvalidArgument, "bracketed_roots needs lo < hi and n_samples >= 1");
  }
  std::vector<double> roots;
  const double step = (hi - lo) / n_samples;
  double x_prev = lo;
  double f_prev = f(lo);
  if (f_prev == 0.0) roots.push_back(lo);
  for (int i = 1; i <= n_samples; ++i) {
    const double x = i == n_samples ? hi : lo + step * i;
    const double fx = f(x);
    if (fx == 0.0) {
      roots.push_back(x);
    } else if (f_prev != 0.0 && ((fx < 0.0) != (f_prev < 0.0))) {
      roots.push_back(bisect(f, x_prev, x, f_prev, x_tol));
    }
    x_prev = x;
    f_prev = fx;
  }
  return roots;
}

}  // namespace geocheck
