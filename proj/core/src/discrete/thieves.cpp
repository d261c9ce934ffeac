#include "geocheck/discrete/thieves.hpp"

#include "geocheck/error.hpp"
#include "geocheck/random.hpp"

namespace geocheck::discrete {

ThievesReport thieves_protocol(std::uint64_t seed, std::uint64_t items) {
  if (items == 0) throw Error(ErrorKind::kInvalidArgument, "simulation needs at least one item");
  ThievesReport r;
  const Rational outcome = make_rational(1, 4);  // each of HH, HT, TH, TT
  const Rational retry = outcome;
  const Rational resolve = 1 - retry;
  // Σ_k retry^(k-1) · outcome = outcome / (1 - retry)
  for (auto& p : r.win_probability) p = outcome / resolve;
  // Attempts are geometric with success probability `resolve`: E = 1/resolve.
  r.expected_tosses = 2 / resolve;

  Rng rng(seed);
  std::bernoulli_distribution coin(0.5);
  r.simulated_items = items;
  for (std::uint64_t i = 0; i < items; ++i) {
    for (;;) {
      const bool first_heads = coin(rng);
      const bool second_heads = coin(rng);
      r.simulated_tosses += 2;
      if (first_heads && second_heads) {
        ++r.simulated_wins[0];
      } else if (first_heads) {
        ++r.simulated_wins[1];
      } else if (second_heads) {
        ++r.simulated_wins[2];
      } else {
        continue;
      }
      break;
    }
  }
  return r;
}

}  // namespace geocheck::discrete
