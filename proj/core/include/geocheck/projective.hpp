#pragma once

#include "geocheck/linalg.hpp"

#include <array>
#include <optional>

namespace geocheck {

/// A point or line of the real projective plane. Stored normalized: unit
/// Euclidean norm with the first nonzero coordinate positive, so two triples
/// describing the same element compare equal up to rounding.
class HomogeneousTriple {
 public:
  /// Throws Error(kDegenerateInput) for the zero vector.
  explicit HomogeneousTriple(const Vec3& coords);
  HomogeneousTriple(double x, double y, double z) : HomogeneousTriple(Vec3(x, y, z)) {}

  static HomogeneousTriple from_affine(const Vec2& p) { return HomogeneousTriple(p.x(), p.y(), 1.0); }

  const Vec3& coords() const { return coords_; }
  double operator[](int i) const { return coords_[i]; }

  /// Affine chart z = 1. Throws for points at infinity.
  Vec2 affine() const;
  bool at_infinity(double eps = 1e-14) const { return std::abs(coords_.z()) <= eps; }

  /// Sine of the angle between representatives; 0 iff the same element.
  double distance(const HomogeneousTriple& other) const;
  bool equivalent(const HomogeneousTriple& other, double tol = 1e-12) const {
    return distance(other) <= tol;
  }

  /// Join of two points (the line through them) or meet of two lines.
  /// Throws Error(kDegenerateInput) when the two elements coincide.
  HomogeneousTriple cross(const HomogeneousTriple& other) const;

 private:
  Vec3 coords_;
};

inline HomogeneousTriple join(const HomogeneousTriple& p, const HomogeneousTriple& q) { return p.cross(q); }
inline HomogeneousTriple meet(const HomogeneousTriple& l, const HomogeneousTriple& m) { return l.cross(m); }

/// Determinant of three triples; zero iff collinear (points) or concurrent (lines).
double incidence_det(const HomogeneousTriple& a, const HomogeneousTriple& b, const HomogeneousTriple& c);

/// Cross-ratio ((a-c)(b-d))/((a-d)(b-c)) of four collinear points or four
/// concurrent lines. The value is computed from 3x3 determinants against an
/// auxiliary vector off the pencil, so it is independent of the chart.
/// Throws Error(kDegenerateInput) for coincident or non-collinear input.
double cross_ratio(const HomogeneousTriple& a, const HomogeneousTriple& b, const HomogeneousTriple& c,
                   const HomogeneousTriple& d, double tol = 1e-9);

/// A conic pᵀ M p = 0 with symmetric M, defined up to scale (stored with unit
/// Frobenius norm).
class Conic {
 public:
  explicit Conic(const Mat3& m);

  const Mat3& matrix() const { return m_; }
  bool degenerate(double tol = 1e-12) const;

  /// |pᵀ M p| for unit p and unit-norm M.
  double point_residual(const HomogeneousTriple& p) const;
  /// Tangency residual |lᵀ M* l| of a line against the adjugate (dual) conic.
  double line_residual(const HomogeneousTriple& line) const;

  /// The adjugate conic; for a nondegenerate conic its points are the tangent lines.
  Conic dual() const;
  /// Tangent line at a point on the conic (polar of p).
  HomogeneousTriple polar(const HomogeneousTriple& p) const;
  /// Point of tangency of a tangent line (pole of the line).
  HomogeneousTriple pole(const HomogeneousTriple& line) const;

  /// Circle (x-cx)² + (y-cy)² = r².
  static Conic circle(const Vec2& center, double radius);

  /// Same conic up to scale and sign.
  bool equivalent(const Conic& other, double tol = 1e-9) const;

 private:
  Mat3 m_;
};

Mat3 adjugate(const Mat3& m);

/// A triple over the prime field F_q, normalized so the first nonzero entry is 1.
class FieldTriple {
 public:
  FieldTriple(std::array<int, 3> coords, int modulus);

  const std::array<int, 3>& coords() const { return c_; }
  int modulus() const { return q_; }
  /// Dot product mod q; zero iff the point lies on the line.
  int dot(const FieldTriple& other) const;
  bool operator==(const FieldTriple& other) const = default;
  auto operator<=>(const FieldTriple& other) const = default;

 private:
  std::array<int, 3> c_;
  int q_;
};

}  // namespace geocheck
