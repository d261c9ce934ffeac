#include <geocheck/car.hpp>
#include <geocheck/error.hpp>
#include <geocheck/random.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace geocheck;
using namespace geocheck::car;

namespace {

// Closed forms written out independently of the library.
Vec4 turn_formula(const CarState& s, double l) { return {0, 0, 1.0 / (l * std::pow(std::cos(s.phi), 2)), 0}; }
Vec4 park_formula(const CarState& s, double l) {
  const double k = 1.0 / (l * std::pow(std::cos(s.phi), 2));
  return {k * std::sin(s.theta), -k * std::cos(s.theta), 0, 0};
}

CarState random_state(Rng& rng) {
  return {uniform(rng, -5, 5), uniform(rng, -5, 5), uniform(rng, -std::numbers::pi, std::numbers::pi),
          uniform(rng, -0.7, 0.7)};
}

double rel_error(const Vec4& a, const Vec4& b) { return (a - b).norm() / std::max(1.0, b.norm()); }

}  // namespace

TEST(Fields, Examples) {
  EXPECT_LT((park({0, 0, 0, 0}, 1.0) - Vec4(0, -1, 0, 0)).norm(), 1e-15);
  EXPECT_LT((drive({0, 0, std::numbers::pi / 2, 0}, 1.0) - Vec4(0, 1, 0, 0)).norm(), 1e-15);
  EXPECT_LT((turn({0, 0, 0, 0}, 2.0) - Vec4(0, 0, 0.5, 0)).norm(), 1e-15);
  EXPECT_THROW(drive({}, 0.0), Error);
}

TEST(Fields, ParkIsOrthogonalToAxle) {
  Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    const CarState s = random_state(rng);
    const Vec4 p = park(s, 1.3);
    EXPECT_NEAR(p[0] * std::cos(s.theta) + p[1] * std::sin(s.theta), 0.0, 1e-15);
  }
}

TEST(LieBracket, MatchesClosedForms) {
  Rng rng(31);
  double worst_turn = 0.0, worst_park = 0.0;
  for (int i = 0; i < 100; ++i) {
    const CarState s = random_state(rng);
    const double l = uniform(rng, 0.5, 3.0);
    worst_turn = std::max(worst_turn, rel_error(lie_bracket_numeric(steer_field(), drive_field(l), s), turn_formula(s, l)));
    worst_park = std::max(worst_park, rel_error(lie_bracket_numeric(drive_field(l), turn_field(l), s), park_formula(s, l)));
  }
  EXPECT_LT(worst_turn, 1e-6);
  EXPECT_LT(worst_park, 1e-6);
}

TEST(LieBracket, SecondOrderConvergence) {
  const CarState s{0.3, -0.2, 0.9, 0.5};
  const double e1 = rel_error(lie_bracket_numeric(steer_field(), drive_field(), s, 1e-2), turn_formula(s, 1.0));
  const double e2 = rel_error(lie_bracket_numeric(steer_field(), drive_field(), s, 5e-3), turn_formula(s, 1.0));
  EXPECT_NEAR(e1 / e2, 4.0, 0.2);
}

TEST(LieBracket, SelfBracketVanishesAndDomainIsChecked) {
  const CarState s{0, 0, 0.4, 0.2};
  EXPECT_LT(lie_bracket_numeric(drive_field(), drive_field(), s).norm(), 1e-12);
  try {
    lie_bracket_numeric(steer_field(), drive_field(), {0, 0, 0, kSteeringLimit - 1e-5}, 1e-4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kStepTooLarge);
  }
}

TEST(CommutatorFlow, DisplacementApproachesParkTimesTSquared) {
  const CarState s{0, 0, 0, 0};
  const double t = 1e-2;
  const Vec4 disp = commutator_flow(drive_field(), turn_field(), t, s).vec() - s.vec();
  const Vec4 expected = t * t * park_formula(s, 1.0);
  EXPECT_LT((disp - expected).norm() / expected.norm(), 0.02);

  const Vec4 half = commutator_flow(drive_field(), turn_field(), t / 2, s).vec() - s.vec();
  EXPECT_NEAR(disp.norm() / half.norm(), 4.0, 0.1);
}

TEST(CommutatorFlow, ConvergesAtFirstOrderOrBetter) {
  const CarState s{1.0, 2.0, 0.7, 0.3};
  const Vec4 bracket = park_formula(s, 1.0);
  auto err = [&](double t) {
    return ((commutator_flow(drive_field(), turn_field(), t, s).vec() - s.vec()) / (t * t) - bracket).norm();
  };
  const double e1 = err(2e-2), e2 = err(1e-2);
  EXPECT_GE(std::log2(e1 / e2), 0.9);
}

TEST(CommutatorFlow, SameFieldReturnsToStart) {
  const CarState s{1, 1, 0.2, 0.1};
  EXPECT_LT((commutator_flow(drive_field(), drive_field(), 0.1, s).vec() - s.vec()).norm(), 1e-12);
}

TEST(CommutatorFlow, SteeringLimitIsInfeasible) {
  try {
    commutator_flow(steer_field(), drive_field(), 1.0, {0, 0, 0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kManeuverInfeasible);
  }
}

TEST(Frobenius, TurnLeavesTheDistribution) {
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    const CarState s = random_state(rng);
    const FrobeniusWitness w = frobenius_witness(s);
    EXPECT_GT(w.residual, 0.5);
    EXPECT_NEAR(w.park_magnitude, 1.0 / std::pow(std::cos(s.phi), 2), 1e-12);
  }
}
