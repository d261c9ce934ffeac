#pragma once

#include "geocheck/curves/support_oval.hpp"

#include <vector>

namespace geocheck::curves {

/// A tangent line to the inner oval at parameter θ, tangency point O, meeting
/// the outer oval at A (ahead along the CCW tangent) and B (behind).
struct TangentChord {
  double theta = 0.0;
  Vec2 tangency;
  Vec2 ahead;
  Vec2 behind;
  /// |A − O|² − |B − O|².
  double imbalance() const;
};

TangentChord tangent_chord(const SupportOval& outer, const SupportOval& inner, double theta);

struct BalancedChords {
  /// Sorted parameters in [0, 2π) where the imbalance changes sign.
  std::vector<double> thetas;
  /// Set when the imbalance vanishes identically (to 1e-12 of scale²).
  bool degenerate = false;
  double max_imbalance = 0.0;
};

/// Throws Error(kPrecondition) unless inner is strictly inside outer.
BalancedChords balanced_tangent_chords(const SupportOval& outer, const SupportOval& inner, int n_samples = 720);

enum class Side { kRight, kLeft };

/// y = 2·O − x, O the tangency point of the chosen tangent from x. On the
/// right side the oval is to the left when looking from x towards O.
/// Throws Error(kPrecondition) when x is not outside the oval.
Vec2 outer_billiard(const SupportOval& oval, const Vec2& x, Side side);

/// Central-difference Jacobian determinant of the outer billiard map.
double outer_billiard_jacobian(const SupportOval& oval, const Vec2& x, Side side, double step = 1e-5);

}  // namespace geocheck::curves
