#include <geocheck/error.hpp>
#include <geocheck/placement.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

using namespace geocheck;
using namespace geocheck::placement;

namespace {

constexpr double kPi = std::numbers::pi;

/// Leg tips from explicit rotation matrices, without Eigen.
std::array<double, 4> legs_by_hand(const Floor& floor, const TableSetup& s, const TablePose& p) {
  const double cx = std::cos(p.tilt_x), sx = std::sin(p.tilt_x);
  const double cy = std::cos(p.tilt_y), sy = std::sin(p.tilt_y);
  const double r = s.side / std::sqrt(2.0);
  std::array<double, 4> d{};
  for (int k = 0; k < 4; ++k) {
    const double a = p.theta + k * kPi / 2;
    const double u = r * std::cos(a), v = r * std::sin(a);
    // Ry then Rx applied to (u, v, 0).
    const double x1 = cy * u, y1 = v, z1 = -sy * u;
    const double x2 = x1, y2 = cx * y1 - sx * z1, z2 = sx * y1 + cx * z1;
    d[k] = p.height + z2 - floor(s.x0 + x2, s.y0 + y2);
  }
  return d;
}

double max_abs(const std::array<double, 4>& d) {
  double m = 0;
  for (double v : d) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace

TEST(Table, LegDistancesMatchHandRotation) {
  const Floor f = sine_floor(0.3);
  const TableSetup s{1.2, 0.4, -0.3};
  const TablePose p{0.7, 0.05, -0.08, 0.2};
  const auto a = leg_distances(f, s, p);
  const auto b = legs_by_hand(f, s, p);
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(a[k], b[k], 1e-14);
}

TEST(Table, FlatFloorHasZeroResidual) {
  const TablePlacement t = balance_square_table(flat_floor(0.25), {});
  EXPECT_EQ(t.max_residual, 0.0);
  EXPECT_EQ(t.pose.height, 0.25);
}

TEST(Table, SaddleAndSineFloorsBalance) {
  for (const Floor& f : {saddle_floor(0.4), sine_floor(0.3), saddle_floor(-1.0)}) {
    for (const TableSetup& s : {TableSetup{1.0, 0.0, 0.0}, TableSetup{0.8, 0.3, -0.2}}) {
      const TablePlacement t = balance_square_table(f, s);
      EXPECT_LT(t.max_residual, 1e-9) << f.name;
      EXPECT_LT(max_abs(legs_by_hand(f, s, t.pose)), 1e-9) << f.name;
      EXPECT_GE(t.pose.theta, 0.0);
      EXPECT_LE(t.pose.theta, kPi / 2);
      EXPECT_LE(t.g0 * t.g_quarter, 0.0);
    }
  }
}

TEST(Table, ConstrainedLegsSatisfyThreeEquations) {
  const Floor f = sine_floor(0.25);
  const TableSetup s{1.0, 0.1, 0.2};
  for (double theta = 0; theta < kPi / 2; theta += 0.3) {
    const auto d = leg_distances(f, s, constrain_legs(f, s, theta));
    EXPECT_LT(std::abs(d[0]), 1e-11);
    EXPECT_LT(std::abs(d[2]), 1e-11);
    EXPECT_LT(std::abs(d[1] - d[3]), 1e-11);
    EXPECT_NEAR(table_gap(f, s, theta), d[1], 1e-11);
  }
}

TEST(Table, SaddleGapFlipsSignUnderQuarterTurn) {
  const Floor f = saddle_floor(0.5);
  const TableSetup s{};
  EXPECT_NEAR(table_gap(f, s, 0.0), -table_gap(f, s, kPi / 2), 1e-9);
  EXPECT_THROW(constrain_legs(f, {0.0, 0, 0}, 0.0), Error);
}

TEST(GridFloor, ParsesAndInterpolates) {
  // z = 0.3x − 0.2y + 0.1 on a 5×4 grid over [0,4]×[0,3].
  std::ostringstream text;
  text << "5 4 0 4 0 3\n";
  for (int j = 0; j < 4; ++j) {
    for (int i = 0; i < 5; ++i) text << 0.3 * i - 0.2 * j + 0.1 << ' ';
  }
  std::istringstream in(text.str());
  const GridFloor g = GridFloor::parse(in);
  EXPECT_NEAR(g(2, 1), 0.3 * 2 - 0.2 + 0.1, 1e-14);
  // Catmull-Rom reproduces linear data away from the clamped border.
  EXPECT_NEAR(g(1.5, 1.25), 0.3 * 1.5 - 0.2 * 1.25 + 0.1, 1e-13);
  EXPECT_NEAR(g(2.7, 1.9), 0.3 * 2.7 - 0.2 * 1.9 + 0.1, 1e-13);
  const TablePlacement t = balance_square_table(g.as_floor(), {1.0, 2.0, 1.5});
  EXPECT_LT(t.max_residual, 1e-9);
}

TEST(GridFloor, RejectsMalformedInput) {
  std::istringstream short_body("3 3 0 1 0 1\n1 2 3");
  EXPECT_THROW(GridFloor::parse(short_body), Error);
  std::istringstream bad_header("3 x");
  EXPECT_THROW(GridFloor::parse(bad_header), Error);
  EXPECT_THROW(GridFloor(1, 3, 0, 1, 0, 1, {1, 2, 3}), Error);
  EXPECT_THROW(GridFloor::load("/nonexistent/grid.txt"), Error);
}

TEST(Cone, CriticalAngleIsExactSixth) {
  const PiMultiple c = critical_half_angle();
  EXPECT_EQ(c.coefficient, make_rational(1, 6));
  EXPECT_DOUBLE_EQ(c.value(), kPi / 6);
  EXPECT_DOUBLE_EQ(cone_sector_angle(kPi / 6), kPi);
}

TEST(Cone, SlipPredicateMatchesSectorAngleOnGrid) {
  for (int i = 1; i < 90; ++i) {
    const double alpha = i * kPi / 180;
    const bool expected = 2 * kPi * std::sin(alpha) >= kPi - 1e-12;
    EXPECT_EQ(loop_slips(Cone(alpha)), expected) << i;
  }
  EXPECT_TRUE(loop_slips(Cone(kPi / 6)));
  EXPECT_THROW(Cone(0.0), Error);
  EXPECT_THROW(Cone(kPi / 2), Error);
  EXPECT_THROW(Cone(0.3, -1), Error);
}

TEST(Cone, TightLoopLength) {
  EXPECT_NEAR(tight_loop_length(Cone(kPi / 6, 1.5)), 3.0, 1e-12);
  const double a = 0.2;
  EXPECT_NEAR(tight_loop_length(Cone(a, 2.0)), 4 * std::sin(kPi * std::sin(a)), 1e-14);
  try {
    tight_loop_length(Cone(0.6));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNoTightLoop);
  }
}
