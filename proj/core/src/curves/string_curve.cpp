#include "geocheck/curves/string_curve.hpp"

#include "geocheck/error.hpp"
#include "geocheck/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace geocheck::curves {

using std::numbers::pi;

namespace {

double cross(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

double angle_between(const Vec2& a, const Vec2& b) { return std::atan2(std::abs(cross(a, b)), a.dot(b)); }

/// Boundary distance from the centre along direction φ. The polar angle of
/// p(ψ) − c increases monotonically with ψ, so bisect on ψ.
double boundary_radius(const SupportOval& oval, double phi) {
  const Vec2 c = oval.centre();
  const Vec2 e(std::cos(phi), std::sin(phi));
  auto f = [&](double psi) { return cross(e, oval.point(psi) - c); };
  // h > 0 keeps the polar angle of p(ψ) − c within π/2 of ψ, so the ends of
  // [φ − π/2, φ + π/2] straddle φ.
  const double psi = bisect(f, phi - pi / 2.0, phi + pi / 2.0, f(phi - pi / 2.0));
  return (oval.point(psi) - c).dot(e);
}

}  // namespace

double string_excess(const SupportOval& oval, const Vec2& x) {
  const auto [t1, t2] = tangent_parameters(oval, x);
  const Vec2 a = oval.point(t1);
  const Vec2 b = oval.point(t2);
  return (x - a).norm() + (x - b).norm() - oval.arc_length(t1, t2);
}

StringSample string_point(const SupportOval& oval, double slack, double direction) {
  if (!(slack > 0.0)) throw Error(ErrorKind::kInvalidArgument, "string slack must be positive");
  const Vec2 c = oval.centre();
  const Vec2 e(std::cos(direction), std::sin(direction));
  const double r0 = boundary_radius(oval, direction);
  auto f = [&](double t) { return string_excess(oval, c + t * e) - slack; };
  double hi = r0 + slack + 1.0;
  for (int i = 0; i < 60 && f(hi) <= 0.0; ++i) hi = r0 + 2.0 * (hi - r0);
  const double t = bisect(f, r0, hi, -slack);
  StringSample s;
  s.direction = direction;
  s.point = c + t * e;
  const auto [t1, t2] = tangent_parameters(oval, s.point);
  s.touch_a = oval.point(t1);
  s.touch_b = oval.point(t2);
  return s;
}

std::vector<StringSample> string_curve(const SupportOval& oval, double slack, int n_samples) {
  if (n_samples < 3) throw Error(ErrorKind::kInvalidArgument, "need at least 3 samples");
  std::vector<StringSample> out;
  out.reserve(n_samples);
  for (int i = 0; i < n_samples; ++i) out.push_back(string_point(oval, slack, 2.0 * pi * i / n_samples));
  return out;
}

double equal_angle_defect(const SupportOval& oval, double slack, double direction, double delta) {
  const StringSample s = string_point(oval, slack, direction);
  const Vec2 tangent =
      string_point(oval, slack, direction + delta).point - string_point(oval, slack, direction - delta).point;
  return std::abs(angle_between(tangent, s.touch_a - s.point) + angle_between(tangent, s.touch_b - s.point) - pi);
}

ConfocalFit fit_confocal_ellipse(std::span<const StringSample> samples, double a, double b) {
  if (samples.empty()) throw Error(ErrorKind::kInvalidArgument, "no samples to fit");
  const double a2 = a * a, b2 = b * b;
  double sum = 0.0;
  for (const auto& s : samples) {
    const double x2 = s.point.x() * s.point.x(), y2 = s.point.y() * s.point.y();
    // λ² + (a² + b² − x² − y²)λ + a²b² − x²b² − y²a² = 0, larger root.
    const double p = a2 + b2 - x2 - y2;
    const double q = a2 * b2 - x2 * b2 - y2 * a2;
    sum += 0.5 * (-p + std::sqrt(std::max(0.0, p * p - 4.0 * q)));
  }
  ConfocalFit fit;
  fit.lambda = sum / static_cast<double>(samples.size());
  const double A = a2 + fit.lambda, B = b2 + fit.lambda;
  for (const auto& s : samples) {
    const double x = s.point.x(), y = s.point.y();
    const double g = x * x / A + y * y / B - 1.0;
    const double grad = std::hypot(2.0 * x / A, 2.0 * y / B);
    fit.max_deviation = std::max(fit.max_deviation, std::abs(g) / grad);
  }
  return fit;
}

bool is_convex_polygon(std::span<const Vec2> pts) {
  const std::size_t n = pts.size();
  if (n < 3) return false;
  double total = 0.0;
  int sign = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 e0 = pts[(i + 1) % n] - pts[i];
    const Vec2 e1 = pts[(i + 2) % n] - pts[(i + 1) % n];
    const double turn = std::atan2(cross(e0, e1), e0.dot(e1));
    const int s = turn > 0.0 ? 1 : (turn < 0.0 ? -1 : 0);
    if (s != 0) {
      if (sign == 0) sign = s;
      if (s != sign) return false;
    }
    total += turn;
  }
  return std::abs(std::abs(total) - 2.0 * pi) < 1e-6;
}

}  // namespace geocheck::curves
