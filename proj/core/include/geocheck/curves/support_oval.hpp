#pragma once

#include "geocheck/linalg.hpp"

#include <utility>
#include <vector>

namespace geocheck::curves {

/// Smooth strictly convex oval given by its support function about a centre c:
/// H(θ) = h(θ) + c·u(θ), u = (cos θ, sin θ). Either a truncated Fourier series
/// h = c₀ + Σ_{k≥2} (aₖ cos kθ + bₖ sin kθ) or an axis-aligned ellipse.
class SupportOval {
 public:
  /// cos_terms[i], sin_terms[i] are the coefficients of harmonic k = i + 2.
  static SupportOval harmonic(double c0, std::vector<double> cos_terms = {}, std::vector<double> sin_terms = {},
                              Vec2 centre = Vec2::Zero());
  static SupportOval circle(double r, Vec2 centre = Vec2::Zero());
  static SupportOval ellipse(double a, double b, Vec2 centre = Vec2::Zero());

  bool is_ellipse() const { return ellipse_; }
  /// Semi-axes of the ellipse variant.
  double semi_a() const { return a_; }
  double semi_b() const { return b_; }
  const Vec2& centre() const { return centre_; }

  /// Support function about the centre, and its first two derivatives.
  double h(double theta) const;
  double dh(double theta) const;
  double d2h(double theta) const;
  /// Radius of curvature h + h″.
  double curvature_radius(double theta) const { return h(theta) + d2h(theta); }

  /// Support function in absolute coordinates.
  double support(double theta) const;
  /// Boundary point with outward normal u(θ).
  Vec2 point(double theta) const;
  /// Unit tangent, counter-clockwise.
  static Vec2 tangent(double theta);
  static Vec2 normal(double theta);

  /// Arc length of the boundary for θ from t0 to t1 (t1 may exceed t0 + 2π).
  double arc_length(double t0, double t1) const;
  double perimeter() const { return arc_length(0.0, 2.0 * 3.14159265358979323846); }

  /// Strict convexity on an n-point grid; the constructors check 2048 points.
  bool strictly_convex(int n = 2048) const;

  /// Largest |p|, used for scale-relative tolerances.
  double scale() const;

 private:
  SupportOval() = default;
  void validate() const;
  /// ∫₀^θ h(t) dt.
  double integral_h(double theta) const;

  bool ellipse_ = false;
  double c0_ = 0.0;
  std::vector<double> cos_, sin_;
  double a_ = 0.0, b_ = 0.0;
  Vec2 centre_ = Vec2::Zero();
};

/// True when H_outer(θ) > H_inner(θ) at every point of an n-point grid.
bool nested(const SupportOval& outer, const SupportOval& inner, int n = 2048);

/// Margin max_θ (x·u(θ) − H(θ)); positive exactly for exterior points.
double exterior_margin(const SupportOval& oval, const Vec2& x);

/// Tangency parameters (θ₁, θ₂) of the two tangent lines from an exterior
/// point, with θ₁ < θ₂ < θ₁ + 2π and x·u − H > 0 on (θ₁, θ₂), i.e. the arc
/// visible from x. Throws Error(kPrecondition) when x is not exterior.
std::pair<double, double> tangent_parameters(const SupportOval& oval, const Vec2& x);

}  // namespace geocheck::curves
