#pragma once

#include "geocheck/linalg.hpp"
#include "geocheck/projective.hpp"

#include <array>
#include <utility>
#include <vector>

namespace geocheck::confocal {

/// Conics x²/(a²+λ) + y²/(b²+λ) = 1 sharing the foci (±√(a²−b²), 0).
/// Ellipses for λ > −b², hyperbolas for −a² < λ < −b².
class ConfocalFamily {
 public:
  /// Throws Error(kInvalidArgument) unless a > b > 0.
  ConfocalFamily(double a, double b);

  double a() const { return a_; }
  double b() const { return b_; }
  double focal_distance() const;
  double scale() const { return a_ + b_; }

  bool is_ellipse(double lambda) const { return lambda > -b_ * b_; }
  bool is_hyperbola(double lambda) const { return lambda > -a_ * a_ && lambda < -b_ * b_; }

  /// Cleared-denominator residual (a²+λ)(b²+λ) − x²(b²+λ) − y²(a²+λ), divided
  /// by (a+b)⁴ so it is dimensionless.
  double member_residual(double lambda, const Vec2& p) const;

  /// Point-conic matrix diag(1/(a²+λ), 1/(b²+λ), −1).
  Mat3 conic_matrix(double lambda) const;
  /// Dual (line) conic diag(a²+λ, b²+λ, −1).
  Mat3 dual_matrix(double lambda) const;

 private:
  double a_, b_;
};

struct EllipticCoords {
  double lambda_e = 0.0;
  double lambda_h = 0.0;
};

/// Roots of the member equation in λ, larger one first. Throws
/// Error(kDegenerateInput) on the closed focal segment.
EllipticCoords elliptic_coords(const ConfocalFamily& fam, const Vec2& p);

/// Point with the given elliptic coordinates in the quadrant (±1, ±1).
Vec2 from_elliptic(const ConfocalFamily& fam, double lambda_e, double lambda_h, int sign_x = 1, int sign_y = 1);

struct IvoryQuadrilateral {
  /// vertex[i][j] lies on ellipse λE_i and hyperbola λH_j.
  std::array<std::array<Vec2, 2>, 2> vertex;
  double diagonal_1 = 0.0;  // |P₁₁P₂₂|
  double diagonal_2 = 0.0;  // |P₁₂P₂₁|
};

/// Throws Error(kInvalidArgument) when a parameter is outside its range or
/// quadrant is not 1..4.
IvoryQuadrilateral ivory_quadrilateral(const ConfocalFamily& fam, double lambda_e1, double lambda_e2,
                                       double lambda_h1, double lambda_h2, int quadrant = 1);

struct Tangent {
  HomogeneousTriple line;
  Vec2 touch;        // tangency point
  double residual;   // |lᵀ D l| with unit l and unit-Frobenius D
};

/// Tangent lines from p to member λ (one for p on the conic, two outside).
/// Throws Error(kNoTangent) when p is inside.
std::vector<Tangent> tangents_from_point(const ConfocalFamily& fam, double lambda, const Vec2& p);

/// The two tangents from an exterior point of an ellipse member labelled by
/// side: on the right tangent the conic's centre lies to the left when looking
/// from p towards the tangency point.
struct TangentPair {
  Tangent right;
  Tangent left;
};
TangentPair tangent_pair(const ConfocalFamily& fam, double lambda, const Vec2& p);

struct ChaslesReport {
  Vec2 a, b, c, d;
  double lambda_h_c = 0.0;
  double lambda_h_d = 0.0;
  double hyperbola_defect = 0.0;  // |λ_h(C) − λ_h(D)| / (a+b)²
  double pitot_defect = 0.0;      // ||AD| + |BC| − |AC| − |BD|| / (a+b)
  Vec2 incenter;
  double inradius = 0.0;
  double incircle_defect = 0.0;   // max deviation of the four line distances / (a+b)
  /// The tangent circle lies inside A C B D. The Pitot identity holds exactly
  /// in this case; otherwise the circle is an excircle and
  /// |AC| + |AD| = |BC| + |BD| holds instead.
  bool inscribed = false;
  double excircle_defect = 0.0;   // ||AC| + |AD| − |BC| − |BD|| / (a+b)
};

/// Quadrilateral A C B D cut out by the tangents from A and B (on member
/// λ_outer) to member λ_inner, with C = left(A) ∧ right(B) and
/// D = right(A) ∧ left(B). Throws Error(kPrecondition) for A = B or points off
/// the outer member, Error(kDegenerateInput) when tangents are parallel.
ChaslesReport chasles_reye(const ConfocalFamily& fam, double lambda_outer, double lambda_inner, const Vec2& a,
                           const Vec2& b);

struct BilliardState {
  Vec2 point;
  Vec2 direction;  // unit
};

/// One reflection inside the member λ_table. Throws Error(kGrazing) when the
/// direction is tangent or points outward.
BilliardState billiard_step(const ConfocalFamily& fam, const BilliardState& s, double lambda_table = 0.0);

/// λ of the member tangent to the line u₁x + u₂y + u₃ = 0. Throws
/// Error(kInvalidLine) for the line at infinity.
double caustic_parameter(const ConfocalFamily& fam, const Vec3& u);

/// Line through a point with a direction, as (u₁, u₂, u₃).
Vec3 line_through(const Vec2& p, const Vec2& direction);

}  // namespace geocheck::confocal
