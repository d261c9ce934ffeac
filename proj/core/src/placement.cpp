#include "geocheck/placement.hpp"

#include "geocheck/error.hpp"
#include "geocheck/linalg.hpp"
#include "geocheck/roots.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>

namespace geocheck::placement {

using std::numbers::pi;

Floor flat_floor(double level) {
  return {"flat", [level](double, double) { return level; }};
}

Floor saddle_floor(double c) {
  return {"saddle", [c](double x, double y) { return c * x * y; }};
}

Floor sine_floor(double c) {
  return {"sine", [c](double x, double y) { return c * std::sin(x) * std::sin(y); }};
}

GridFloor::GridFloor(int nx, int ny, double x_min, double x_max, double y_min, double y_max,
                     std::vector<double> heights)
    : nx_(nx), ny_(ny), x_min_(x_min), x_max_(x_max), y_min_(y_min), y_max_(y_max), h_(std::move(heights)) {
  if (nx < 2 || ny < 2 || !(x_max > x_min) || !(y_max > y_min)) {
    throw Error(ErrorKind::kInvalidArgument, "grid needs nx, ny >= 2 and increasing ranges");
  }
  if (h_.size() != static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny)) {
    throw Error(ErrorKind::kInvalidArgument, "grid height count does not match nx*ny");
  }
  for (double v : h_) {
    if (!std::isfinite(v)) throw Error(ErrorKind::kInvalidArgument, "grid heights must be finite");
  }
}

GridFloor GridFloor::parse(std::istream& in) {
  int nx = 0, ny = 0;
  double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  if (!(in >> nx >> ny >> x0 >> x1 >> y0 >> y1)) throw Error(ErrorKind::kParse, "malformed grid header");
  if (nx < 2 || ny < 2 || nx > 100000 || ny > 100000) throw Error(ErrorKind::kParse, "grid dimensions out of range");
  std::vector<double> h(static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny));
  for (double& v : h) {
    if (!(in >> v)) throw Error(ErrorKind::kParse, "grid ended before nx*ny heights");
  }
  return GridFloor(nx, ny, x0, x1, y0, y1, std::move(h));
}

GridFloor GridFloor::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, "cannot open grid file " + path);
  return parse(in);
}

double GridFloor::at(int i, int j) const {
  i = std::clamp(i, 0, nx_ - 1);
  j = std::clamp(j, 0, ny_ - 1);
  return h_[static_cast<std::size_t>(j) * nx_ + i];
}

namespace {

double catmull_rom(double p0, double p1, double p2, double p3, double t) {
  return p1 + 0.5 * t * (p2 - p0 + t * (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3 + t * (3.0 * (p1 - p2) + p3 - p0)));
}

}  // namespace

double GridFloor::operator()(double x, double y) const {
  const double gx = std::clamp((x - x_min_) / (x_max_ - x_min_) * (nx_ - 1), 0.0, double(nx_ - 1));
  const double gy = std::clamp((y - y_min_) / (y_max_ - y_min_) * (ny_ - 1), 0.0, double(ny_ - 1));
  const int i = std::min(static_cast<int>(gx), nx_ - 2);
  const int j = std::min(static_cast<int>(gy), ny_ - 2);
  const double tx = gx - i;
  const double ty = gy - j;
  double rows[4];
  for (int k = 0; k < 4; ++k) {
    const int jj = j - 1 + k;
    rows[k] = catmull_rom(at(i - 1, jj), at(i, jj), at(i + 1, jj), at(i + 2, jj), tx);
  }
  return catmull_rom(rows[0], rows[1], rows[2], rows[3], ty);
}

Floor GridFloor::as_floor(std::string name) const {
  return {std::move(name), [grid = *this](double x, double y) { return grid(x, y); }};
}

std::array<double, 4> leg_distances(const Floor& floor, const TableSetup& setup, const TablePose& pose) {
  const double r = setup.side / std::numbers::sqrt2;
  const Mat3 tilt = (Eigen::AngleAxisd(pose.tilt_x, Vec3::UnitX()) * Eigen::AngleAxisd(pose.tilt_y, Vec3::UnitY()))
                        .toRotationMatrix();
  const Vec3 centre(setup.x0, setup.y0, pose.height);
  std::array<double, 4> d{};
  for (int k = 0; k < 4; ++k) {
    const double a = pose.theta + k * pi / 2.0;
    const Vec3 leg = centre + tilt * Vec3(r * std::cos(a), r * std::sin(a), 0.0);
    d[k] = leg.z() - floor(leg.x(), leg.y());
  }
  return d;
}

namespace {

Vec3 constraint(const Floor& floor, const TableSetup& setup, double theta, const Vec3& u) {
  const auto d = leg_distances(floor, setup, {theta, u[0], u[1], u[2]});
  return {d[0], d[2], d[1] - d[3]};
}

}  // namespace

TablePose constrain_legs(const Floor& floor, const TableSetup& setup, double theta) {
  if (!(setup.side > 0.0)) throw Error(ErrorKind::kInvalidArgument, "table side must be positive");
  Vec3 u(0.0, 0.0, floor(setup.x0, setup.y0));
  Vec3 f = constraint(floor, setup, theta, u);
  constexpr double h = 1e-7;
  for (int it = 0; it < 100; ++it) {
    if (f.cwiseAbs().maxCoeff() < 1e-14) break;
    Mat3 jac;
    for (int c = 0; c < 3; ++c) {
      Vec3 up = u, dn = u;
      up[c] += h;
      dn[c] -= h;
      jac.col(c) = (constraint(floor, setup, theta, up) - constraint(floor, setup, theta, dn)) / (2.0 * h);
    }
    const Vec3 step = jac.fullPivLu().solve(-f);
    if (!step.allFinite()) throw Error(ErrorKind::kSolverFailure, "table Newton: singular Jacobian");
    double lambda = 1.0;
    Vec3 trial = u + step;
    Vec3 f_trial = constraint(floor, setup, theta, trial);
    while (f_trial.norm() > f.norm() && lambda > 1e-6) {
      lambda *= 0.5;
      trial = u + lambda * step;
      f_trial = constraint(floor, setup, theta, trial);
    }
    if (lambda <= 1e-6 && f_trial.norm() > f.norm()) {
      if (f.cwiseAbs().maxCoeff() < 1e-12) break;
      throw Error(ErrorKind::kSolverFailure, "table Newton: no descent (floor too wild)");
    }
    if (std::abs(u[0]) > pi / 2.0 || std::abs(u[1]) > pi / 2.0) {
      throw Error(ErrorKind::kSolverFailure, "table Newton: diverged");
    }
    u = trial;
    f = f_trial;
  }
  if (!(f.cwiseAbs().maxCoeff() < 1e-11)) {
    throw Error(ErrorKind::kSolverFailure, "table Newton did not converge");
  }
  return {theta, u[0], u[1], u[2]};
}

double table_gap(const Floor& floor, const TableSetup& setup, double theta) {
  const TablePose pose = constrain_legs(floor, setup, theta);
  return leg_distances(floor, setup, pose)[1];
}

TablePlacement balance_square_table(const Floor& floor, const TableSetup& setup) {
  TablePlacement out;
  auto g = [&](double t) { return table_gap(floor, setup, t); };
  out.g0 = g(0.0);
  out.g_quarter = g(pi / 2.0);
  double theta = 0.0;
  if (out.g0 == 0.0) {
    theta = 0.0;
  } else if (out.g_quarter == 0.0) {
    theta = pi / 2.0;
  } else if ((out.g0 < 0.0) == (out.g_quarter < 0.0)) {
    throw Error(ErrorKind::kAssumptionViolation, "g(0) and g(pi/2) have the same sign");
  } else {
    theta = bisect(g, 0.0, pi / 2.0, out.g0);
  }
  out.pose = constrain_legs(floor, setup, theta);
  out.residuals = leg_distances(floor, setup, out.pose);
  for (double d : out.residuals) out.max_residual = std::max(out.max_residual, std::abs(d));
  return out;
}

Cone::Cone(double alpha_, double rho_) : alpha(alpha_), rho(rho_) {
  if (!(alpha > 0.0 && alpha < pi / 2.0)) throw Error(ErrorKind::kInvalidArgument, "cone half-angle must be in (0, pi/2)");
  if (!(rho > 0.0)) throw Error(ErrorKind::kInvalidArgument, "knot distance must be positive");
}

double cone_sector_angle(double alpha) {
  if (!(alpha >= 0.0 && alpha <= pi / 2.0)) throw Error(ErrorKind::kInvalidArgument, "half-angle must be in [0, pi/2]");
  return 2.0 * pi * std::sin(alpha);
}

double PiMultiple::value() const { return to_double(coefficient) * pi; }

std::string PiMultiple::str() const {
  const BigInt num = numerator(coefficient);
  const BigInt den = denominator(coefficient);
  std::string s = num == 1 ? "pi" : num.str() + "*pi";
  if (den != 1) s += "/" + den.str();
  return s;
}

PiMultiple critical_half_angle() { return {make_rational(1, 6)}; }

bool loop_slips(const Cone& cone) { return 2.0 * std::sin(cone.alpha) >= 1.0 - 1e-12; }

double tight_loop_length(const Cone& cone) {
  const double s = std::sin(cone.alpha);
  if (2.0 * s > 1.0 + 1e-12) throw Error(ErrorKind::kNoTightLoop, "loop slips off the cone");
  return 2.0 * cone.rho * std::sin(pi * std::min(s, 0.5));
}

}  // namespace geocheck::placement
