#pragma once

#include "geocheck/projective.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <string>
#include <vector>

namespace geocheck::discrete {

bool is_prime(int n);

/// PG(2, q) for prime q: q²+q+1 points and as many lines, each triple
/// normalized so its first nonzero coordinate is 1.
struct FinitePlane {
  int q = 0;
  std::vector<FieldTriple> points;
  std::vector<FieldTriple> lines;
  /// line_points[l] lists the indices of the points on line l, ascending.
  std::vector<std::vector<int>> line_points;

  bool incident(std::size_t point, std::size_t line) const { return points[point].dot(lines[line]) == 0; }
};

/// Throws Error(kUnsupportedOrder) unless q is prime.
FinitePlane build_plane(int q);

struct PlaneAxioms {
  bool cardinality = false;       // |points| = |lines| = q²+q+1
  bool points_per_line = false;   // every line has q+1 points
  bool lines_meet_once = false;   // two distinct lines share exactly one point
  bool points_join_once = false;  // two distinct points lie on exactly one line
  bool all() const { return cardinality && points_per_line && lines_meet_once && points_join_once; }
};

/// Exhaustive check of the four incidence axioms.
PlaneAxioms verify_axioms(const FinitePlane& plane);

struct Deck {
  std::vector<std::vector<int>> cards;
  std::map<int, std::string> symbol_names;
};

/// Cards are lines, symbols are the points on them.
Deck deck_from_plane(const FinitePlane& plane);

struct PairDefect {
  std::size_t first = 0;
  std::size_t second = 0;
  std::size_t shared = 0;
};

struct DeckReport {
  std::size_t cards = 0;
  std::size_t card_size = 0;   // size of the first card
  bool uniform_size = true;
  std::size_t pairs_checked = 0;
  std::vector<PairDefect> defects;  // pairs not sharing exactly one symbol
  bool valid() const { return uniform_size && defects.empty(); }
};

DeckReport validate_deck(const Deck& deck);

/// {"cards": [[ids...], ...], "symbols": {"id": "name", ...}}; the name table
/// is omitted when empty.
nlohmann::json deck_to_json(const Deck& deck);
/// Accepts the object form above or a bare array of cards.
Deck deck_from_json(const nlohmann::json& j);

}  // namespace geocheck::discrete
