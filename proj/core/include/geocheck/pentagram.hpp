#pragma once

#include "geocheck/projective.hpp"
#include "geocheck/random.hpp"

#include <vector>

namespace geocheck::pentagram {

/// Cyclic polygon of n >= 5 points of the real projective plane (or, for a
/// dual polygon, of lines read as points).
class ProjPolygon {
 public:
  /// Throws Error(kDegenerateInput) when two consecutive vertices coincide or
  /// three consecutive vertices are collinear (|det| <= 1e-12), and
  /// Error(kInvalidArgument) for n < 5.
  explicit ProjPolygon(std::vector<HomogeneousTriple> vertices);
  static ProjPolygon from_affine(const std::vector<Vec2>& pts);

  std::size_t size() const { return v_.size(); }
  /// Cyclic access; any integer index.
  const HomogeneousTriple& operator[](long i) const;
  const std::vector<HomogeneousTriple>& vertices() const { return v_; }
  std::vector<Vec2> affine() const;
  /// Largest pairwise distance in the affine chart.
  double diameter() const;

 private:
  std::vector<HomogeneousTriple> v_;
};

/// Vertex i of the image is (v_{i−1} ∨ v_{i+1}) ∧ (v_i ∨ v_{i+2}).
ProjPolygon pentagram_map(const ProjPolygon& p);

/// Vertex i of the dual is the side v_i ∨ v_{i+1}.
ProjPolygon dual_polygon(const ProjPolygon& p);

/// Image of every vertex under x ↦ H x.
ProjPolygon transform(const Mat3& h, const ProjPolygon& p);

/// The projective map sending src[i] to dst[i], up to scale (unit Frobenius
/// norm). Throws Error(kDegenerateInput) if three points of either quadruple
/// are collinear.
Mat3 projective_transform_from(const std::array<HomogeneousTriple, 4>& src,
                               const std::array<HomogeneousTriple, 4>& dst);

/// Vertex i of P corresponds to vertex shift + i (or shift − i when reflected)
/// of Q.
struct Alignment {
  long shift = 0;
  bool reflected = false;
};

struct Equivalence {
  bool equivalent = false;
  /// Max sine of the angle between H·P_i and the aligned Q vertex.
  double residual = 0.0;
  Alignment alignment;
};

/// Builds the map from the first four vertices and measures the rest. With
/// try_all_alignments every cyclic shift and reflection is tried and the best
/// one is returned; otherwise only `alignment`.
Equivalence projectively_equivalent(const ProjPolygon& p, const ProjPolygon& q, bool try_all_alignments,
                                    Alignment alignment = {}, double tol = 1e-8);

/// Alignment under which a pentagon matches its pentagram image: vertex j
/// goes to the image vertex opposite it, j + 2.
inline constexpr Alignment kOppositeVertex{2, false};

/// Alignment of a pentagon with its dual polygon, and of a hexagon with its
/// image under the square of the pentagram map. Both were found by searching
/// all shifts and reflections on seeded polygons; the match is unique.
inline constexpr Alignment kSelfDualAlignment{2, false};
inline constexpr Alignment kHexagonSquareAlignment{2, false};

/// Cross-ratio of the pencil [v_i v_{i+1}, v_i v_{i+2}, v_i v_{i+3}, v_i v_{i+4}]
/// at a pentagon vertex. Throws Error(kUnsupportedOrder) for n ≠ 5.
double vertex_cross_ratio(const ProjPolygon& p, long i);

/// Conic through five points (null space of the 5×6 incidence system).
/// Throws Error(kNoUniqueConic) when the system has a larger kernel.
Conic conic_through_points(const std::array<HomogeneousTriple, 5>& pts);
/// Point conic tangent to five lines, via the dual system.
Conic conic_tangent_to_lines(const std::array<HomogeneousTriple, 5>& lines);

/// Vertex i is the point where the conic inscribed in the pentagon touches side
/// v_i ∨ v_{i+1}. Throws Error(kNoUniqueConic) for a degenerate conic.
ProjPolygon kasner_inscribed(const ProjPolygon& p);

/// Max affine distance between T(I(P))_i and I(T(P))_{i + shift}, over i.
double kasner_commutation_defect(const ProjPolygon& p, long shift);

/// Index shift between T(I(P)) and I(T(P)).
inline constexpr long kKasnerShift = 0;

/// Convex n-gon with vertex i at angle (i + U(−0.35, 0.35))·2π/n plus a random
/// offset and radius 1 ± 0.3·min(1, 36/n²), redrawn until strictly convex.
/// Throws Error(kSolverFailure) after 10000 draws.
ProjPolygon random_convex_polygon(std::size_t n, Rng& rng);

/// Random projective map close enough to the identity that the seeded
/// polygons stay in the affine chart.
Mat3 random_projective_map(Rng& rng);

}  // namespace geocheck::pentagram
