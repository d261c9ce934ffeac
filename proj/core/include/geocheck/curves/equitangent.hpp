#pragma once

#include "geocheck/linalg.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace geocheck::curves {

/// Discrete chord state on a labelled convex polygon (labels 1..n, CCW):
/// endpoints at vertices a and b, support directions along edges
/// dir_a → dir_a+1 and dir_b → dir_b+1.
struct ChordState {
  int a = 1;
  int b = 1;
  int dir_a = 1;
  int dir_b = 1;

  /// "(15,12,56)" form; single-digit labels.
  static ChordState parse(std::string_view text);
  std::string str() const;
  bool operator==(const ChordState&) const = default;
};

/// Six-fold symmetric dodecagon: vertex k at angle (k − 1)π/6, radius r_odd
/// for odd k and r_even for even k. Convex iff r_even/r_odd ∈ (cos π/6, 1/cos π/6).
std::vector<Vec2> symmetric_dodecagon(double r_odd, double r_even);

/// The eight transitions for one sixth of the motion, starting at (15,12,56)
/// and ending at (37,34,78).
std::vector<ChordState> default_equitangent_schedule();

/// The dodecagon used by default; the radius ratio is the fixture knob.
inline constexpr double kDefaultEvenRadius = 0.93;

struct EquitangentSample {
  int step = 0;       // 0-based index of the transition
  double s = 0.0;     // progress within the step, [0, 1]
  Vec2 a, b, c;       // endpoints and the support-line intersection
  double segment_a = 0.0;  // |AC|
  double segment_b = 0.0;  // |BC|
  double margin = 0.0;     // ∠ABC − ∠BAC
};

struct EquitangentTrace {
  std::vector<EquitangentSample> samples;
  double min_margin = 0.0;
  /// Max distance/angle mismatch between the terminal state and the initial
  /// state rotated by π/3.
  double closure_residual = 0.0;
};

/// Replays the schedule on the polygon with `samples_per_step` samples per
/// transition. Throws Error(kInvalidSchedule) naming the first bad step when a
/// transition changes other than one element by one position, or when a
/// support line fails to support the polygon at a sample.
EquitangentTrace equitangent_replay(const std::vector<Vec2>& polygon, const std::vector<ChordState>& schedule,
                                    int samples_per_step = 64);

}  // namespace geocheck::curves
