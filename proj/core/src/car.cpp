#include "geocheck/car.hpp"

#include "geocheck/error.hpp"

#include <cmath>

namespace geocheck::car {

bool CarState::in_domain() const {
  return std::abs(phi) < kSteeringLimit && std::isfinite(x) && std::isfinite(y) && std::isfinite(theta);
}

namespace {

void check_wheelbase(double l) {
  if (!(l > 0.0)) throw Error(ErrorKind::kInvalidArgument, "wheelbase must be positive");
}

}  // namespace

Vec4 steer(const CarState&) { return {0.0, 0.0, 0.0, 1.0}; }

Vec4 drive(const CarState& s, double l) {
  check_wheelbase(l);
  return {std::cos(s.theta), std::sin(s.theta), std::tan(s.phi) / l, 0.0};
}

Vec4 turn(const CarState& s, double l) {
  check_wheelbase(l);
  const double c = std::cos(s.phi);
  return {0.0, 0.0, 1.0 / (l * c * c), 0.0};
}

Vec4 park(const CarState& s, double l) {
  check_wheelbase(l);
  const double c = std::cos(s.phi);
  const double k = 1.0 / (l * c * c);
  return {k * std::sin(s.theta), -k * std::cos(s.theta), 0.0, 0.0};
}

ControlField steer_field() {
  return {"steer", [](const Vec4& v) { return steer(CarState::from(v)); }};
}
ControlField drive_field(double l) {
  check_wheelbase(l);
  return {"drive", [l](const Vec4& v) { return drive(CarState::from(v), l); }};
}
ControlField turn_field(double l) {
  check_wheelbase(l);
  return {"turn", [l](const Vec4& v) { return turn(CarState::from(v), l); }};
}
ControlField park_field(double l) {
  check_wheelbase(l);
  return {"park", [l](const Vec4& v) { return park(CarState::from(v), l); }};
}

namespace {

Eigen::Matrix4d jacobian(const ControlField& f, const Vec4& s, double h) {
  Eigen::Matrix4d j;
  for (int k = 0; k < 4; ++k) {
    Vec4 plus = s;
    Vec4 minus = s;
    plus[k] += h;
    minus[k] -= h;
    j.col(k) = (f(plus) - f(minus)) / (2.0 * h);
  }
  return j;
}

}  // namespace

Vec4 lie_bracket_numeric(const ControlField& x, const ControlField& y, const CarState& s, double h) {
  if (!(h > 0.0)) throw Error(ErrorKind::kInvalidArgument, "step must be positive");
  if (!s.in_domain()) throw Error(ErrorKind::kInvalidArgument, "state outside the steering domain");
  if (std::abs(s.phi) + h >= kSteeringLimit) {
    throw Error(ErrorKind::kStepTooLarge, "difference stencil crosses the steering limit");
  }
  const Vec4 v = s.vec();
  return jacobian(y, v, h) * x(v) - jacobian(x, v, h) * y(v);
}

CarState flow(const ControlField& field, double t, const CarState& s, int steps) {
  if (steps < 1) throw Error(ErrorKind::kInvalidArgument, "flow needs at least one step");
  if (!s.in_domain()) throw Error(ErrorKind::kManeuverInfeasible, "state outside the steering domain");
  const double dt = t / steps;
  Vec4 v = s.vec();
  auto guard = [](const Vec4& w) {
    if (!(std::abs(w[3]) < kSteeringLimit) || !w.allFinite()) {
      throw Error(ErrorKind::kManeuverInfeasible, "flow reaches the steering limit");
    }
    return w;
  };
  for (int i = 0; i < steps; ++i) {
    const Vec4 k1 = field(v);
    const Vec4 k2 = field(guard(v + 0.5 * dt * k1));
    const Vec4 k3 = field(guard(v + 0.5 * dt * k2));
    const Vec4 k4 = field(guard(v + dt * k3));
    v = guard(v + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
  }
  return CarState::from(v);
}

CarState commutator_flow(const ControlField& x, const ControlField& y, double t, const CarState& s) {
  constexpr int kStepsPerLeg = 64;
  CarState c = flow(x, t, s, kStepsPerLeg);
  c = flow(y, t, c, kStepsPerLeg);
  c = flow(x, -t, c, kStepsPerLeg);
  return flow(y, -t, c, kStepsPerLeg);
}

FrobeniusWitness frobenius_witness(const CarState& s, double l) {
  FrobeniusWitness w;
  w.turn = turn(s, l);
  Eigen::Matrix<double, 4, 2> basis;
  basis.col(0) = steer(s);
  basis.col(1) = drive(s, l);
  const Eigen::Vector2d coeff = basis.colPivHouseholderQr().solve(w.turn);
  w.coeff_steer = coeff[0];
  w.coeff_drive = coeff[1];
  w.residual = (basis * coeff - w.turn).norm();
  const double c = std::cos(s.phi);
  w.park_magnitude = 1.0 / (l * c * c);
  return w;
}

}  // namespace geocheck::car
