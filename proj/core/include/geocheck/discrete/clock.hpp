#pragma once

#include "geocheck/rational.hpp"

#include <vector>

namespace geocheck::discrete {

/// A moment t (hours in [0, 12)) whose hand positions also read as a
/// different valid time `partner` when the hands are swapped.
struct AmbiguousMoment {
  Rational time;
  Rational partner;
};

struct ClockAmbiguity {
  std::vector<AmbiguousMoment> moments;  // ascending in time, one 12-hour cycle
  std::vector<Rational> coincidences;    // hands overlap: swapping changes nothing
  std::size_t intersections = 0;         // moments + coincidences
  std::size_t per_twelve_hours() const { return moments.size(); }
  std::size_t per_day() const { return 2 * moments.size(); }
};

/// Hour hand at x = t, minute hand at y = 12t (mod 12), both in hours. The
/// swapped reading is realizable iff x ≡ 12y (mod 12), i.e. 143t ≡ 0 (mod 12).
ClockAmbiguity ambiguous_clock_times();

/// Minute-hand position 12t mod 12.
Rational minute_hand(const Rational& t);

/// Reduces x into [0, m).
Rational mod_rational(const Rational& x, const Rational& m);

}  // namespace geocheck::discrete
