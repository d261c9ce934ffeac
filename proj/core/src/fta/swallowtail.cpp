#include "geocheck/fta/swallowtail.hpp"

#include "geocheck/fta/resultant.hpp"
#include "geocheck/linalg.hpp"
#include "geocheck/roots.hpp"

#include <algorithm>
#include <cmath>

namespace geocheck::fta {

RationalPoly quartic_discriminant_in_w(const Rational& u, const Rational& v) {
  // The discriminant is cubic in w: interpolate exactly at w = 0..3.
  RationalMatrix vandermonde;
  RationalVector values;
  for (int w = 0; w < 4; ++w) {
    const RationalPoly quartic({Rational(w), v, u, Rational(0), Rational(1)});
    values.push_back(discriminant(quartic));
    RationalVector row;
    Rational power = 1;
    for (int k = 0; k < 4; ++k) {
      row.push_back(power);
      power *= w;
    }
    vandermonde.push_back(std::move(row));
  }
  return RationalPoly(solve_linear_exact(vandermonde, values));
}

namespace {

/// Real critical points z of the quartic with |P(z)| tiny relative to the
/// size of its terms.
bool has_real_double_root(double u, double v, double w) {
  auto p = [&](double z) { return ((z * z + u) * z + v) * z + w; };
  auto dp = [&](double z) { return (4.0 * z * z + 2.0 * u) * z + v; };
  const double bound = 1.0 + std::max({std::abs(u), std::abs(v), std::abs(w)});
  std::vector<double> crit = bracketed_roots(dp, -bound, bound, 4096);
  // A double critical point (u = v = 0) shows no sign change of P′.
  if (u == 0.0 && v == 0.0) crit.push_back(0.0);
  for (double z : crit) {
    const double scale = z * z * z * z + std::abs(u) * z * z + std::abs(v * z) + std::abs(w) + 1e-300;
    if (std::abs(p(z)) <= 1e-8 * std::max(scale, 1e-12)) return true;
  }
  return false;
}

}  // namespace

SwallowtailSlice swallowtail_slice(double u, double v) {
  SwallowtailSlice slice;
  slice.u = u;
  slice.v = v;
  const RationalPoly disc = quartic_discriminant_in_w(exact_from_double(u), exact_from_double(v));
  std::vector<double> ws;
  if (disc.is_zero()) return slice;
  ws = real_roots(disc);
  for (double w : ws) {
    SwallowtailPoint pt{u, v, w, has_real_double_root(u, v, w)};
    if (pt.real_double_root) ++slice.real_sheets;
    slice.points.push_back(pt);
  }
  return slice;
}

std::vector<SwallowtailSlice> swallowtail_sample(std::span<const double> u_grid, std::span<const double> v_grid) {
  std::vector<SwallowtailSlice> out;
  for (double u : u_grid) {
    for (double v : v_grid) out.push_back(swallowtail_slice(u, v));
  }
  return out;
}

}  // namespace geocheck::fta
