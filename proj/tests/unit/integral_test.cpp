#include <geocheck/error.hpp>
#include <geocheck/integral.hpp>

#include <gtest/gtest.h>

#include "oracles.hpp"

#include <cmath>
#include <numbers>
#include <vector>

using namespace geocheck;
using namespace geocheck::integral;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(Box, ValidatesEdges) {
  EXPECT_THROW(Box(0, 1, 1), Error);
  EXPECT_THROW(Box(1, -1, 1), Error);
  const Box b(1, 2, 3);
  EXPECT_DOUBLE_EQ(b.volume(), 6.0);
  EXPECT_DOUBLE_EQ(b.surface(), 22.0);
  EXPECT_DOUBLE_EQ(b.edge_sum(), 6.0);
}

TEST(Pose, RejectsNonRotations) {
  EXPECT_THROW(Pose(Mat3::Identity() * 1.01, Vec3::Zero()), Error);
  Mat3 reflection = Mat3::Identity();
  reflection(2, 2) = -1;
  EXPECT_THROW(Pose(reflection, Vec3::Zero()), Error);
}

TEST(TubeVolume, MatchesSliceIntegration) {
  for (const Box& b : {Box(1, 1, 1), Box(1, 2, 3), Box(0.1, 5, 0.7)}) {
    for (double eps : {0.0, 0.05, 0.4, 2.0}) {
      const double oracle_value = oracle::tube_volume_by_slices(b.a, b.b, b.c, eps);
      EXPECT_NEAR(tube_volume(b, eps), oracle_value, 1e-10 * oracle_value) << b.a << " " << eps;
    }
  }
  EXPECT_THROW(tube_volume(Box(), -0.1), Error);
}

TEST(TubeVolume, QuadraticTermIsPiTimesEdgeSum) {
  const Box b(1, 2, 3);
  // Second finite difference at ε = 0 isolates 2·πL.
  const double h = 1e-3;
  const double second = (tube_volume(b, 2 * h) - 2 * tube_volume(b, h) + tube_volume(b, 0)) / (h * h);
  EXPECT_NEAR(second / 2 - 4 * kPi * h, kPi * b.edge_sum(), 1e-6);
}

TEST(DistanceToBox, Examples) {
  const Box b(1, 1, 1);
  EXPECT_EQ(distance_to_box(b, {0.5, 0.5, 0.5}), 0.0);
  EXPECT_DOUBLE_EQ(distance_to_box(b, {2, 0.5, 0.5}), 1.0);
  EXPECT_DOUBLE_EQ(distance_to_box(b, {2, 2, 0.5}), std::sqrt(2.0));
}

TEST(MonteCarlo, TubeVolumeWithinFourSigma) {
  const Box b(1, 2, 0.5);
  for (double eps : {0.1, 0.5}) {
    const Estimate e = mc_tube_volume(b, eps, 200000, 17);
    EXPECT_GT(e.std_error, 0.0);
    EXPECT_LT(std::abs(e.value - tube_volume(b, eps)), 4 * e.std_error);
  }
  EXPECT_THROW(mc_tube_volume(b, 0.1, 100, 1), Error);
}

TEST(MonteCarlo, ThreadCountDoesNotChangeResult) {
  const Box b(1, 1, 1);
  McOptions one{1u << 14, 1}, three{1u << 14, 3};
  const Estimate a = mc_tube_volume(b, 0.3, 100000, 99, one);
  const Estimate c = mc_tube_volume(b, 0.3, 100000, 99, three);
  EXPECT_EQ(a.value, c.value);
  EXPECT_EQ(a.std_error, c.std_error);
}

TEST(MonteCarlo, RegressionPrefersPiOverSixPi) {
  const Box b(1, 1, 1);
  const std::vector<double> grid = {0.2, 0.4, 0.6, 0.8, 1.0};
  const SteinerFit fit = fit_steiner_coefficients(b, grid, 200000, 5);
  const double pi_l = kPi * b.edge_sum();
  EXPECT_LT(std::abs(fit.quadratic - pi_l), std::abs(fit.quadratic - 6 * pi_l));
  EXPECT_NEAR(fit.linear, b.surface(), 0.5);
  EXPECT_EQ(fit.samples.size(), grid.size());
}

TEST(Containment, IdentityAndRotatedCube) {
  const Box cube(1, 1, 1);
  EXPECT_TRUE(containment_check(cube, Pose(), cube));
  const Mat3 r = Eigen::AngleAxisd(kPi / 4, Vec3::UnitZ()).toRotationMatrix();
  EXPECT_FALSE(containment_check(cube, Pose(r, Vec3(0.5, 0.5, 0)), Box(1.2, 1.2, 1)));
  EXPECT_TRUE(containment_check(cube, Pose(r, Vec3(0.75, 0.05, 0)), Box(1.5, 1.5, 1)));
}

TEST(Containment, DiagonalRodLongerThanAnyEdgeFits) {
  // The rod's longest edge exceeds every edge of the cube, but its edge sum does not.
  const Box outer(1, 1, 1);
  const Box rod(1.6, 0.05, 0.05);
  const Vec3 d = Vec3(1, 1, 1).normalized();
  const Mat3 r = Eigen::Quaterniond::FromTwoVectors(Vec3::UnitX(), d).toRotationMatrix();
  const Vec3 start = Vec3(0.5, 0.5, 0.5) - r * Vec3(0.8, 0.025, 0.025);
  ASSERT_TRUE(containment_check(rod, Pose(r, start), outer));
  EXPECT_LE(rod.edge_sum(), outer.edge_sum());
}

TEST(Containment, RandomSearchFindsNoEdgeViolation) {
  const ContainmentSearch s = containment_search(5000, 11);
  EXPECT_EQ(s.trials, 5000u);
  EXPECT_GT(s.contained, 0u);
  EXPECT_EQ(s.edge_violations, 0u);
  EXPECT_EQ(s.surface_violations, 0u);
}

TEST(Crofton, SilhouetteClosedForms) {
  const Box cube(1, 1, 1);
  EXPECT_NEAR(silhouette_area(cube, Vec3::UnitZ()), 1.0, 1e-15);
  EXPECT_NEAR(silhouette_area(cube, Vec3(1, 1, 1).normalized()), std::sqrt(3.0), 1e-14);
  const Box b(1, 2, 3);
  EXPECT_NEAR(silhouette_area(b, Vec3::UnitX()), 6.0, 1e-14);
}

TEST(Crofton, CubeAreaWithinOnePercent) {
  const Estimate e = crofton_area(Box(1, 1, 1), 100000, 3);
  EXPECT_NEAR(e.value, 6.0, 0.06);
  const Estimate f = crofton_area(Box(1, 2, 3), 100000, 4);
  EXPECT_NEAR(f.value, 22.0, 0.22);
}
