#include "geocheck/discrete/clock.hpp"

namespace geocheck::discrete {

Rational mod_rational(const Rational& x, const Rational& m) {
  const Rational q = x / m;
  BigInt fl = boost::multiprecision::numerator(q) / boost::multiprecision::denominator(q);
  if (Rational(fl) > q) fl -= 1;  // integer division truncates toward zero
  return x - Rational(fl) * m;
}

Rational minute_hand(const Rational& t) { return mod_rational(12 * t, Rational(12)); }

ClockAmbiguity ambiguous_clock_times() {
  ClockAmbiguity out;
  const Rational twelve(12);
  // 143t ≡ 0 (mod 12) with t in [0, 12): t = 12k/143 for k = 0..142.
  for (int k = 0; k < 143; ++k) {
    const Rational t = make_rational(12 * k, 143);
    const Rational y = minute_hand(t);
    // The swapped reading (y as hour hand) needs its minute hand at x.
    if (minute_hand(y) != t) continue;
    ++out.intersections;
    if (y == t) {
      out.coincidences.push_back(t);
    } else {
      out.moments.push_back({t, y});
    }
  }
  return out;
}

}  // namespace geocheck::discrete
