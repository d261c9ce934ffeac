#pragma once

#include "geocheck/curves/support_oval.hpp"

#include <span>
#include <vector>

namespace geocheck::curves {

/// Excess of the taut string loop through x over the perimeter:
/// |XA| + |XB| − arc(A, B), with A, B the tangency points and the arc the
/// part of the boundary visible from x. Zero on the oval, increasing outward.
double string_excess(const SupportOval& oval, const Vec2& x);

struct StringSample {
  double direction = 0.0;  // ray angle from the oval's centre
  Vec2 point;
  Vec2 touch_a;            // tangency points of the string
  Vec2 touch_b;
};

/// Points with string_excess = slack on n rays from the centre, found by
/// bisection along each ray. Throws Error(kInvalidArgument) for slack <= 0.
std::vector<StringSample> string_curve(const SupportOval& oval, double slack, int n_samples);

/// Single ray of string_curve.
StringSample string_point(const SupportOval& oval, double slack, double direction);

/// |angle(T, A − X) + angle(T, B − X) − π| with T the curve tangent from
/// neighbouring rays at ±delta.
double equal_angle_defect(const SupportOval& oval, double slack, double direction, double delta = 1e-5);

/// Best-fit member x²/(a²+λ) + y²/(b²+λ) = 1 of the confocal family of an
/// axis-aligned ellipse centred at the origin.
struct ConfocalFit {
  double lambda = 0.0;
  /// max |G(X) − 1| / |∇G(X)|, a first-order distance to the member.
  double max_deviation = 0.0;
};

ConfocalFit fit_confocal_ellipse(std::span<const StringSample> samples, double a, double b);

/// Discrete turning-angle convexity of a closed polygon (all turns of one
/// sign, total 2π).
bool is_convex_polygon(std::span<const Vec2> pts);

}  // namespace geocheck::curves
