#pragma once

#include <algorithm>
#include <cmath>

namespace geocheck {

/// Mixed absolute/relative comparison: |x - y| <= absolute + relative * max(|x|, |y|).
struct Tolerance {
  double absolute = 1e-9;
  double relative = 1e-9;

  bool close(double x, double y) const {
    return std::abs(x - y) <= absolute + relative * std::max(std::abs(x), std::abs(y));
  }

  static constexpr Tolerance absolute_only(double abs) { return {abs, 0.0}; }
};

}  // namespace geocheck
