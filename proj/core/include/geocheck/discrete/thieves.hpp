#pragma once

#include "geocheck/rational.hpp"

#include <array>
#include <cstdint>

namespace geocheck::discrete {

/// Two tosses per attempt: HH -> thief A, HT -> B, TH -> C, TT -> start over.
struct ThievesReport {
  std::array<Rational, 3> win_probability;
  Rational expected_tosses;

  std::uint64_t simulated_items = 0;
  std::array<std::uint64_t, 3> simulated_wins{};
  std::uint64_t simulated_tosses = 0;

  double frequency(std::size_t thief) const {
    return static_cast<double>(simulated_wins[thief]) / static_cast<double>(simulated_items);
  }
};

/// Exact probabilities from the geometric series over retries, plus a seeded
/// simulation of `items` lotteries.
ThievesReport thieves_protocol(std::uint64_t seed, std::uint64_t items = 1'000'000);

}  // namespace geocheck::discrete
