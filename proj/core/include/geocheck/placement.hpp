#pragma once

#include "geocheck/rational.hpp"

#include <array>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace geocheck::placement {

/// Floor as a single-valued graph z = height(x, y).
struct Floor {
  std::string name;
  std::function<double(double, double)> height;

  double operator()(double x, double y) const { return height(x, y); }
};

Floor flat_floor(double level = 0.0);
/// z = c·x·y
Floor saddle_floor(double c);
/// z = c·sin x·sin y
Floor sine_floor(double c);

/// Regular height grid with Catmull-Rom bicubic interpolation, clamped at the
/// border.
class GridFloor {
 public:
  GridFloor(int nx, int ny, double x_min, double x_max, double y_min, double y_max, std::vector<double> heights);

  /// Text format: header "nx ny xmin xmax ymin ymax", then nx·ny heights in
  /// row-major order (y outer, x inner). Throws Error(kParse).
  static GridFloor parse(std::istream& in);
  static GridFloor load(const std::string& path);

  double operator()(double x, double y) const;
  Floor as_floor(std::string name = "grid") const;

 private:
  double at(int i, int j) const;

  int nx_, ny_;
  double x_min_, x_max_, y_min_, y_max_;
  std::vector<double> h_;
};

/// Legs A, B, C, D sit at the corners of a square of side s, centred on the
/// vertical axis through (x0, y0): A at angle θ, then B, C, D every π/2.
struct TablePose {
  double theta = 0.0;
  double tilt_x = 0.0;  // rotation about the x axis (applied second)
  double tilt_y = 0.0;  // rotation about the y axis (applied first)
  double height = 0.0;  // z of the square's centre
};

struct TableSetup {
  double side = 1.0;
  double x0 = 0.0;
  double y0 = 0.0;
};

/// Signed vertical distances leg-tip minus floor, in order A, B, C, D.
std::array<double, 4> leg_distances(const Floor& floor, const TableSetup& setup, const TablePose& pose);

/// Solves d_A = d_C = 0 and d_B = d_D for (tilt_x, tilt_y, height) at fixed θ by
/// damped Newton. Throws Error(kSolverFailure) on divergence.
TablePose constrain_legs(const Floor& floor, const TableSetup& setup, double theta);

/// g(θ): the common distance d_B = d_D of the constrained configuration.
double table_gap(const Floor& floor, const TableSetup& setup, double theta);

struct TablePlacement {
  TablePose pose;
  std::array<double, 4> residuals{};
  double max_residual = 0.0;
  double g0 = 0.0;
  double g_quarter = 0.0;
};

/// Bisection for g(θ*) = 0 on [0, π/2]. Throws Error(kAssumptionViolation)
/// when g(0) and g(π/2) are nonzero with the same sign.
TablePlacement balance_square_table(const Floor& floor, const TableSetup& setup);

/// Right circular cone with half-angle α at the apex and a knot at slant
/// distance ρ.
struct Cone {
  double alpha;
  double rho = 1.0;

  /// Throws Error(kInvalidArgument) unless 0 < α < π/2 and ρ > 0.
  explicit Cone(double alpha_, double rho_ = 1.0);
};

/// 2π·sin α, the angle of the unrolled sector. Accepts α ∈ [0, π/2].
double cone_sector_angle(double alpha);

/// Rational multiple of π, kept symbolic.
struct PiMultiple {
  Rational coefficient;
  double value() const;
  std::string str() const;
};

/// π/6.
PiMultiple critical_half_angle();

/// True when the sector angle is at least π. The comparison allows 1e-12 of
/// slack so that α = π/6 in double precision is classified as slipping.
bool loop_slips(const Cone& cone);

/// Chord 2ρ·sin(π sin α) between the two copies of the knot on the unrolled
/// sector. The boundary α = π/6 gives 2ρ; beyond it throws Error(kNoTightLoop).
double tight_loop_length(const Cone& cone);

}  // namespace geocheck::placement
