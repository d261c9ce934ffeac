#pragma once

#include "geocheck/fta/poly.hpp"

#include <span>
#include <vector>

namespace geocheck::fta {

/// disc(z⁴ + u z² + v z + w) as an exact polynomial in w.
RationalPoly quartic_discriminant_in_w(const Rational& u, const Rational& v);

struct SwallowtailPoint {
  double u = 0.0, v = 0.0, w = 0.0;
  /// Whether the double root of the quartic is real (a real sheet) rather than
  /// a complex-conjugate pair.
  bool real_double_root = false;
};

struct SwallowtailSlice {
  double u = 0.0, v = 0.0;
  std::vector<SwallowtailPoint> points;
  int real_sheets = 0;
};

/// Points of the discriminant surface over every (u, v) of the grid (u outer).
/// Grid values are converted to exact binary rationals before isolation.
std::vector<SwallowtailSlice> swallowtail_sample(std::span<const double> u_grid, std::span<const double> v_grid);

SwallowtailSlice swallowtail_slice(double u, double v);

}  // namespace geocheck::fta
