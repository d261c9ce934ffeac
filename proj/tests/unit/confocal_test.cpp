#include <geocheck/confocal.hpp>
#include <geocheck/error.hpp>
#include <geocheck/random.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

using namespace geocheck;
using namespace geocheck::confocal;

namespace {

constexpr double kPi = std::numbers::pi;

/// Cartesian point from elliptic coordinates by the textbook closed form.
Vec2 elliptic_to_cartesian(double a, double b, double le, double lh) {
  const double c2 = a * a - b * b;
  return {std::sqrt((a * a + le) * (a * a + lh) / c2), std::sqrt(-(b * b + le) * (b * b + lh) / c2)};
}

Vec2 on_member(double a, double b, double lambda, double t) {
  return {std::sqrt(a * a + lambda) * std::cos(t), std::sqrt(b * b + lambda) * std::sin(t)};
}

}  // namespace

TEST(Family, ValidatesAxes) {
  EXPECT_THROW(ConfocalFamily(1, 1), Error);
  EXPECT_THROW(ConfocalFamily(1, 2), Error);
  const ConfocalFamily f(5, 3);
  EXPECT_DOUBLE_EQ(f.focal_distance(), 4.0);
  EXPECT_TRUE(f.is_ellipse(0));
  EXPECT_TRUE(f.is_hyperbola(-16));
  EXPECT_FALSE(f.is_hyperbola(-30));
}

TEST(EllipticCoords, RoundTripAndClosedForm) {
  const ConfocalFamily f(2, 1);
  Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    const Vec2 p(uniform(rng, 0.05, 4), uniform(rng, 0.05, 4));
    const EllipticCoords ec = elliptic_coords(f, p);
    EXPECT_TRUE(f.is_ellipse(ec.lambda_e));
    EXPECT_TRUE(f.is_hyperbola(ec.lambda_h));
    EXPECT_NEAR(f.member_residual(ec.lambda_e, p), 0.0, 1e-13);
    EXPECT_NEAR(f.member_residual(ec.lambda_h, p), 0.0, 1e-13);
    EXPECT_LT((elliptic_to_cartesian(2, 1, ec.lambda_e, ec.lambda_h) - p).norm(), 1e-10);
    EXPECT_LT((from_elliptic(f, ec.lambda_e, ec.lambda_h) - p).norm(), 1e-10);
  }
  EXPECT_THROW(elliptic_coords(f, Vec2(0.5, 0.0)), Error);
}

TEST(EllipticCoords, NetIsOrthogonal) {
  const ConfocalFamily f(3, 2);
  const Vec2 p(1.3, 0.9);
  const EllipticCoords ec = elliptic_coords(f, p);
  const Vec2 ge(p.x() / (9 + ec.lambda_e), p.y() / (4 + ec.lambda_e));
  const Vec2 gh(p.x() / (9 + ec.lambda_h), p.y() / (4 + ec.lambda_h));
  EXPECT_NEAR(ge.dot(gh), 0.0, 1e-12);
}

TEST(Ivory, DiagonalsAreEqual) {
  const ConfocalFamily f(2, 1);
  Rng rng(21);
  for (int i = 0; i < 100; ++i) {
    const double e1 = uniform(rng, -0.9, 3), e2 = uniform(rng, -0.9, 3);
    const double h1 = uniform(rng, -3.9, -1.1), h2 = uniform(rng, -3.9, -1.1);
    const IvoryQuadrilateral q = ivory_quadrilateral(f, e1, e2, h1, h2, 1 + i % 4);
    EXPECT_LT(std::abs(q.diagonal_1 - q.diagonal_2), 1e-9 * f.scale());
    if (i % 4 == 0) {
      EXPECT_LT((q.vertex[0][1] - elliptic_to_cartesian(2, 1, e1, h2)).norm(), 1e-10);
    }
  }
  EXPECT_THROW(ivory_quadrilateral(f, 0.5, 1.0, -2, -3, 5), Error);
  EXPECT_THROW(ivory_quadrilateral(f, -2.0, 1.0, -2, -3), Error);
}

TEST(Tangents, TouchTheMemberAndPassThroughPoint) {
  const ConfocalFamily f(2, 1);
  const Vec2 p(3.0, 2.0);
  for (double lambda : {0.0, 1.0, -0.5}) {
    const auto ts = tangents_from_point(f, lambda, p);
    ASSERT_EQ(ts.size(), 2u);
    for (const Tangent& t : ts) {
      EXPECT_LT(t.residual, 1e-12);
      EXPECT_NEAR(f.member_residual(lambda, t.touch), 0.0, 1e-12);
      const Vec3 l = t.line.coords();
      EXPECT_NEAR(l.x() * p.x() + l.y() * p.y() + l.z(), 0.0, 1e-10 * l.head<2>().norm());
    }
  }
  EXPECT_THROW(tangents_from_point(f, 0.0, Vec2(0.1, 0.1)), Error);
  EXPECT_EQ(tangents_from_point(f, 0.0, Vec2(2.0, 0.0)).size(), 1u);
}

TEST(Tangents, PairSidesFollowOrientation) {
  const ConfocalFamily f(2, 1);
  const Vec2 p(0.0, 3.0);
  const TangentPair tp = tangent_pair(f, 0.0, p);
  auto cross = [](const Vec2& u, const Vec2& v) { return u.x() * v.y() - u.y() * v.x(); };
  // On the right tangent the centre is to the left of p → touch.
  EXPECT_GT(cross(tp.right.touch - p, -p), 0.0);
  EXPECT_LT(cross(tp.left.touch - p, -p), 0.0);
}

TEST(Chasles, HyperbolaIncircleAndPitotOrExcircle) {
  const ConfocalFamily f(2, 1);
  Rng rng(4);
  int inscribed = 0;
  for (int i = 0; i < 300; ++i) {
    const double lo = uniform(rng, 0.2, 4), li = uniform(rng, -0.9, lo - 0.1);
    const Vec2 a = on_member(2, 1, lo, uniform(rng, 0, 2 * kPi));
    const Vec2 b = on_member(2, 1, lo, uniform(rng, 0, 2 * kPi));
    const ChaslesReport r = chasles_reye(f, lo, li, a, b);
    EXPECT_LT(r.hyperbola_defect, 1e-9);
    EXPECT_LT(r.incircle_defect, 1e-8);
    EXPECT_TRUE(f.is_hyperbola(r.lambda_h_c));
    if (r.inscribed) {
      ++inscribed;
      EXPECT_LT(r.pitot_defect, 1e-9);
    } else {
      EXPECT_LT(r.excircle_defect, 1e-9);
    }
  }
  EXPECT_GT(inscribed, 50);
  EXPECT_LT(inscribed, 300);
}

TEST(Chasles, NearbyPointsGiveInscribedQuadrilateral) {
  const ConfocalFamily f(2, 1);
  const ChaslesReport r = chasles_reye(f, 1.5, 0.0, on_member(2, 1, 1.5, 0.9), on_member(2, 1, 1.5, 1.3));
  EXPECT_TRUE(r.inscribed);
  EXPECT_LT(r.pitot_defect, 1e-12);
  EXPECT_THROW(chasles_reye(f, 1.5, 0.0, Vec2(5, 5), on_member(2, 1, 1.5, 1.3)), Error);
  EXPECT_THROW(chasles_reye(f, 0.0, 1.5, on_member(2, 1, 0, 0.3), on_member(2, 1, 0, 1.3)), Error);
}

TEST(Billiard, CausticParameterIsInvariant) {
  const ConfocalFamily f(2, 1);
  Rng rng(77);
  for (int orbit = 0; orbit < 10; ++orbit) {
    const double t = uniform(rng, 0, 2 * kPi);
    BilliardState s{on_member(2, 1, 0, t), Vec2::Zero()};
    s.direction = (Vec2(uniform(rng, -0.5, 0.5), uniform(rng, -0.5, 0.5)) - s.point).normalized();
    std::vector<double> cs;
    for (int k = 0; k < 100; ++k) {
      s = billiard_step(f, s);
      EXPECT_NEAR(f.member_residual(0, s.point), 0.0, 1e-14);
      cs.push_back(caustic_parameter(f, line_through(s.point, s.direction)));
    }
    double mean = 0, var = 0;
    for (double c : cs) mean += c;
    mean /= cs.size();
    for (double c : cs) var += (c - mean) * (c - mean);
    EXPECT_LT(std::sqrt(var / cs.size()), 1e-9);
  }
}

TEST(Billiard, CausticOfLineTangentToMember) {
  const ConfocalFamily f(2, 1);
  // Tangent to x²/(4+λ) + y²/(1+λ) = 1 at (√(4+λ), 0) is x = √(4+λ).
  const double lambda = 0.7;
  EXPECT_NEAR(caustic_parameter(f, Vec3(1, 0, -std::sqrt(4 + lambda))), lambda, 1e-14);
  EXPECT_THROW(caustic_parameter(f, Vec3(0, 0, 1)), Error);
  EXPECT_THROW(billiard_step(f, {Vec2(2, 0), Vec2(1, 0)}), Error);
}
