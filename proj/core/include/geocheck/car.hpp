#pragma once

#include "geocheck/linalg.hpp"

#include <functional>
#include <string>

namespace geocheck::car {

/// Rear-axle midpoint (x, y) in meters, heading θ and steering angle φ in
/// radians, with φ restricted to (−π/4, π/4).
struct CarState {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;
  double phi = 0.0;

  Vec4 vec() const { return {x, y, theta, phi}; }
  static CarState from(const Vec4& v) { return {v[0], v[1], v[2], v[3]}; }
  bool in_domain() const;
};

inline constexpr double kSteeringLimit = 0.78539816339744830962;  // π/4

/// Tangent vectors at a state; wheelbase ℓ > 0.
Vec4 steer(const CarState& s);
Vec4 drive(const CarState& s, double wheelbase = 1.0);
Vec4 turn(const CarState& s, double wheelbase = 1.0);
Vec4 park(const CarState& s, double wheelbase = 1.0);

/// A named vector field on the state space.
struct ControlField {
  std::string name;
  std::function<Vec4(const Vec4&)> evaluate;

  Vec4 operator()(const Vec4& s) const { return evaluate(s); }
};

ControlField steer_field();
ControlField drive_field(double wheelbase = 1.0);
ControlField turn_field(double wheelbase = 1.0);
ControlField park_field(double wheelbase = 1.0);

/// [X, Y] = (DY)X − (DX)Y with both Jacobians by central differences.
/// Throws Error(kStepTooLarge) if s ± h leaves the steering domain.
Vec4 lie_bracket_numeric(const ControlField& x, const ControlField& y, const CarState& s, double h = 1e-4);

/// Φ_Y^{−t}∘Φ_X^{−t}∘Φ_Y^{t}∘Φ_X^{t}(s) with classical RK4, 64 steps per leg.
/// Throws Error(kManeuverInfeasible) if the steering limit is reached.
CarState commutator_flow(const ControlField& x, const ControlField& y, double t, const CarState& s);

/// Flow of one field for time t (negative allowed), RK4 with `steps` steps.
CarState flow(const ControlField& field, double t, const CarState& s, int steps = 64);

/// turn at s expanded in span{steer, drive} by least squares. A positive
/// residual means turn leaves the control distribution, so the distribution
/// is not integrable.
struct FrobeniusWitness {
  Vec4 turn;
  double coeff_steer = 0.0;
  double coeff_drive = 0.0;
  double residual = 0.0;
  double park_magnitude = 0.0;  // 1/(ℓ cos²φ)
};

FrobeniusWitness frobenius_witness(const CarState& s, double wheelbase = 1.0);

}  // namespace geocheck::car
