#pragma once

#include "geocheck/linalg.hpp"
#include "geocheck/rational.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <string>
#include <vector>

namespace geocheck::sphere {

inline constexpr double kEarthRadiusKm = 6371.0;

/// Vertices are stored as unit vectors. Construction rejects coincident,
/// antipodal, and co-great-circle vertices.
class SphericalTriangle {
 public:
  SphericalTriangle(const Vec3& a, const Vec3& b, const Vec3& c);

  const Vec3& a() const { return v_[0]; }
  const Vec3& b() const { return v_[1]; }
  const Vec3& c() const { return v_[2]; }
  const Vec3& vertex(int i) const { return v_[i]; }

 private:
  std::array<Vec3, 3> v_;
};

enum class Vertex { kA = 0, kB = 1, kC = 2 };

/// Pole of the altitude great circle from a vertex: (A×B)×C for C, cyclic
/// for the others, normalized. Throws Error(kDegenerateInput) when the
/// altitude is undetermined (the vertex is a pole of the opposite side).
Vec3 altitude_pole(const SphericalTriangle& t, Vertex vertex);

enum class CevianKind { kAltitudes, kMedians };

struct Concurrency {
  std::array<Vec3, 3> poles;  // unnormalized
  Vec3 pole_sum;              // Jacobi / skew-symmetry sum, zero up to rounding
  Vec3 point;                 // common point of the three great circles
  double residual = 0.0;      // |det[p1 p2 p3]|
};

/// Altitude poles (A×B)×C, (B×C)×A, (C×A)×B or median poles (A+B)×C, …;
/// concurrent great circles ⇔ collinear poles ⇔ zero determinant.
Concurrency concurrency_check(const SphericalTriangle& t, CevianKind kind);

using ExactVec3 = std::array<Rational, 3>;

ExactVec3 cross(const ExactVec3& u, const ExactVec3& v);
ExactVec3 operator+(const ExactVec3& u, const ExactVec3& v);

/// (A×B)×C + (B×C)×A + (C×A)×B in exact arithmetic; inputs need not be unit.
ExactVec3 jacobi_sum_exact(const ExactVec3& a, const ExactVec3& b, const ExactVec3& c);
/// (A+B)×C + (B+C)×A + (C+A)×B in exact arithmetic.
ExactVec3 median_sum_exact(const ExactVec3& a, const ExactVec3& b, const ExactVec3& c);

struct SpherePosition {
  double latitude = 0.0;   // radians in [-π/2, π/2]
  double longitude = 0.0;  // radians
  double radius = kEarthRadiusKm;

  Vec3 unit() const;
};

/// Tent latitudes φ_k = d/R − arccos(d / (2πkR)): the tent sits d north of a
/// southern parallel of circumference d/k. The north pole is always a solution.
struct TentLocus {
  double radius = kEarthRadiusKm;
  double leg = 10.0;
  bool north_pole = true;
  std::vector<double> latitudes;      // radians, k = 1, 2, …
  double accumulation = 0.0;          // −π/2 + d/R, not itself a solution
  bool truncated = false;
  std::string notice;
};

/// Stops early (truncated = true) once consecutive latitudes are no longer
/// distinct in double precision.
TentLocus tent_locus(double radius, double leg, int count);

nlohmann::json to_json(const TentLocus& locus);

/// Walks d south, d west, d north on the round sphere in closed form and
/// returns the great-circle distance (km) from the start to the end point.
/// Throws Error(kInvalidWalk) if a leg would pass over a pole.
double verify_walk(const SpherePosition& start, double leg);

}  // namespace geocheck::sphere
