#include "geocheck/curves/chords.hpp"

#include "geocheck/error.hpp"
#include "geocheck/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace geocheck::curves {

using std::numbers::pi;

double TangentChord::imbalance() const { return (ahead - tangency).squaredNorm() - (behind - tangency).squaredNorm(); }

TangentChord tangent_chord(const SupportOval& outer, const SupportOval& inner, double theta) {
  const Vec2 u = SupportOval::normal(theta);
  const double level = inner.support(theta);
  // f(φ) = P_out(φ)·u − level is positive at φ = θ and negative at θ ± π, and
  // monotone on each half by strict convexity.
  auto f = [&](double phi) { return outer.point(phi).dot(u) - level; };
  const double f_mid = f(theta);
  TangentChord c;
  c.theta = theta;
  c.tangency = inner.point(theta);
  c.ahead = outer.point(bisect(f, theta, theta + pi, f_mid));
  c.behind = outer.point(bisect(f, theta - pi, theta, f(theta - pi)));
  return c;
}

BalancedChords balanced_tangent_chords(const SupportOval& outer, const SupportOval& inner, int n_samples) {
  if (!nested(outer, inner)) throw Error(ErrorKind::kPrecondition, "inner oval is not strictly inside the outer one");
  if (n_samples < 8) throw Error(ErrorKind::kInvalidArgument, "need at least 8 samples");
  auto e = [&](double t) { return tangent_chord(outer, inner, t).imbalance(); };
  BalancedChords out;
  // Offset the grid so that symmetric zeros (axes of symmetric pairs) fall
  // strictly between samples.
  const double offset = 0.5 * (2.0 * pi / n_samples) * (std::sqrt(5.0) - 1.0);
  for (int i = 0; i < n_samples; ++i) out.max_imbalance = std::max(out.max_imbalance, std::abs(e(offset + 2.0 * pi * i / n_samples)));
  const double scale = outer.scale();
  if (out.max_imbalance < 1e-12 * scale * scale) {
    out.degenerate = true;
    return out;
  }
  for (double t : bracketed_roots(e, offset, offset + 2.0 * pi, n_samples)) {
    double r = std::fmod(t, 2.0 * pi);
    if (r < 0.0) r += 2.0 * pi;
    out.thetas.push_back(r);
  }
  std::sort(out.thetas.begin(), out.thetas.end());
  // The first and last grid points coincide modulo 2π.
  out.thetas.erase(std::unique(out.thetas.begin(), out.thetas.end(),
                               [](double a, double b) { return b - a < 1e-12; }),
                   out.thetas.end());
  if (out.thetas.size() >= 2 && out.thetas.front() + 2.0 * pi - out.thetas.back() < 1e-12) out.thetas.pop_back();
  return out;
}

namespace {

double cross(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

}  // namespace

Vec2 outer_billiard(const SupportOval& oval, const Vec2& x, Side side) {
  const auto [t1, t2] = tangent_parameters(oval, x);
  const Vec2 c = oval.centre();
  for (double t : {t1, t2}) {
    const Vec2 o = oval.point(t);
    const bool oval_on_left = cross(o - x, c - x) > 0.0;
    if (oval_on_left == (side == Side::kRight)) return 2.0 * o - x;
  }
  throw Error(ErrorKind::kSolverFailure, "outer billiard: tangent sides not separated");
}

double outer_billiard_jacobian(const SupportOval& oval, const Vec2& x, Side side, double step) {
  Eigen::Matrix2d jac;
  for (int c = 0; c < 2; ++c) {
    Vec2 up = x, dn = x;
    up[c] += step;
    dn[c] -= step;
    jac.col(c) = (outer_billiard(oval, up, side) - outer_billiard(oval, dn, side)) / (2.0 * step);
  }
  return jac.determinant();
}

}  // namespace geocheck::curves
