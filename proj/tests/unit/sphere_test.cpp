#include <geocheck/error.hpp>
#include <geocheck/random.hpp>
#include <geocheck/sphere.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace geocheck;
using namespace geocheck::sphere;

TEST(AltitudePole, OctantTriangleIsDegenerate) {
  // (A×B)×C = C×C = 0: each vertex is the pole of its opposite side, so every
  // great circle through C is perpendicular to AB and the altitude is undetermined.
  const SphericalTriangle t({1, 0, 0}, {0, 1, 0}, {0, 0, 1});
  EXPECT_THROW(altitude_pole(t, Vertex::kC), Error);
}

TEST(AltitudePole, OrthogonalToVertexAndSide) {
  Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    const SphericalTriangle t(random_unit_vector(rng), random_unit_vector(rng), random_unit_vector(rng));
    const Vec3 p = altitude_pole(t, Vertex::kC);
    EXPECT_NEAR(p.norm(), 1.0, 1e-14);
    EXPECT_NEAR(p.dot(t.c()), 0.0, 1e-12);
    // The altitude circle is perpendicular to AB: its pole lies in the plane of AB.
    EXPECT_NEAR(p.dot(t.a().cross(t.b()).normalized()), 0.0, 1e-12);
  }
}

TEST(AltitudePole, EquilateralAboutNorthPole) {
  const double lat = 0.3;
  auto at = [&](double lon) { return Vec3(std::cos(lat) * std::cos(lon), std::cos(lat) * std::sin(lon), std::sin(lat)); };
  const SphericalTriangle t(at(0), at(2 * std::numbers::pi / 3), at(4 * std::numbers::pi / 3));
  std::array<Vec3, 3> p = {altitude_pole(t, Vertex::kA), altitude_pole(t, Vertex::kB), altitude_pole(t, Vertex::kC)};
  for (const auto& v : p) EXPECT_NEAR(v.z(), 0.0, 1e-14);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(std::abs(p[i].dot(p[(i + 1) % 3])), 0.5, 1e-13);
}

TEST(SphericalTriangle, RejectsDegenerateInput) {
  EXPECT_THROW(SphericalTriangle({1, 0, 0}, {0, 1, 0}, {1, 1, 0}), Error);
  EXPECT_THROW(SphericalTriangle({1, 0, 0}, {-1, 0, 0}, {0, 0, 1}), Error);
  EXPECT_THROW(SphericalTriangle({1, 0, 0}, {1, 0, 0}, {0, 0, 1}), Error);
}

TEST(Concurrency, JacobiSumIsExactlyZero) {
  auto r = [](long long n) { return make_rational(n); };
  const ExactVec3 a{r(1), r(0), r(0)}, b{r(0), r(1), r(0)}, c{r(1), r(1), r(1)};
  for (const auto& x : jacobi_sum_exact(a, b, c)) EXPECT_EQ(x, 0);
  for (const auto& x : median_sum_exact(a, b, c)) EXPECT_EQ(x, 0);

  Rng rng(4);
  std::uniform_int_distribution<long long> num(-40, 40), den(1, 17);
  for (int i = 0; i < 300; ++i) {
    ExactVec3 u, v, w;
    for (auto* vec : {&u, &v, &w}) {
      for (auto& x : *vec) x = make_rational(num(rng), den(rng));
    }
    for (const auto& x : jacobi_sum_exact(u, v, w)) EXPECT_EQ(x, 0);
    for (const auto& x : median_sum_exact(u, v, w)) EXPECT_EQ(x, 0);
  }
}

TEST(Concurrency, RandomTrianglesAreConcurrent) {
  Rng rng(1000);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const SphericalTriangle t(random_unit_vector(rng), random_unit_vector(rng), random_unit_vector(rng));
    for (auto kind : {CevianKind::kAltitudes, CevianKind::kMedians}) {
      const Concurrency c = concurrency_check(t, kind);
      worst = std::max(worst, c.residual);
      // The common point lies on all three great circles.
      for (const auto& p : c.poles) EXPECT_NEAR(c.point.dot(p), 0.0, 1e-10 * std::max(1.0, p.norm()));
    }
  }
  EXPECT_LT(worst, 1e-12);
}

TEST(Tent, LatitudesFollowTheFormula) {
  const double R = 6371.0, d = 10.0;
  const TentLocus locus = tent_locus(R, d, 10);
  ASSERT_EQ(locus.latitudes.size(), 10u);
  EXPECT_TRUE(locus.north_pole);
  for (int k = 1; k <= 10; ++k) {
    const double lat = locus.latitudes[static_cast<std::size_t>(k - 1)];
    // The parallel d further south has circumference d/k.
    const double south = lat - d / R;
    EXPECT_NEAR(2.0 * std::numbers::pi * R * std::cos(south), d / k, 1e-9);
  }
  EXPECT_NEAR(locus.accumulation, -std::numbers::pi / 2 + d / R, 1e-15);
  for (std::size_t k = 1; k < locus.latitudes.size(); ++k) EXPECT_LT(locus.latitudes[k], locus.latitudes[k - 1]);
  EXPECT_GT(locus.latitudes.back(), locus.accumulation);
}

TEST(Tent, WalkClosesOnTheLocusOnly) {
  const double d = 10.0;
  const TentLocus locus = tent_locus(kEarthRadiusKm, d, 10);
  for (double lat : locus.latitudes) {
    for (double lon : {0.0, 1.0, -2.5}) {
      EXPECT_LT(verify_walk({lat, lon}, d), 1e-6);
    }
    EXPECT_GT(verify_walk({lat + 1e-3, 0.0}, d), 1e-2);
  }
  EXPECT_LT(verify_walk({std::numbers::pi / 2, 0.0}, d), 1e-9);
  EXPECT_GT(verify_walk({0.0, 0.0}, d), 1.0);
}

TEST(Tent, JsonCarriesBothUnits) {
  const auto j = to_json(tent_locus(kEarthRadiusKm, 10.0, 3));
  ASSERT_EQ(j.at("latitudes").size(), 3u);
  const auto& first = j.at("latitudes")[0];
  EXPECT_NEAR(first.at("degrees").get<double>(), first.at("radians").get<double>() * 180.0 / std::numbers::pi, 1e-12);
  EXPECT_FALSE(j.at("accumulation").at("is_solution").get<bool>());
}
