#include "geocheck/discrete/finite_plane.hpp"

#include "geocheck/error.hpp"

#include <algorithm>
#include <set>

namespace geocheck::discrete {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

std::vector<FieldTriple> normalized_triples(int q) {
  // Leading-1 representatives: (1,*,*), (0,1,*), (0,0,1).
  std::vector<FieldTriple> out;
  out.reserve(static_cast<std::size_t>(q) * q + q + 1);
  for (int y = 0; y < q; ++y) {
    for (int z = 0; z < q; ++z) out.emplace_back(std::array<int, 3>{1, y, z}, q);
  }
  for (int z = 0; z < q; ++z) out.emplace_back(std::array<int, 3>{0, 1, z}, q);
  out.emplace_back(std::array<int, 3>{0, 0, 1}, q);
  return out;
}

}  // namespace

FinitePlane build_plane(int q) {
  if (!is_prime(q)) {
    throw Error(ErrorKind::kUnsupportedOrder,
                "order " + std::to_string(q) + " is not prime; only prime fields are supported");
  }
  FinitePlane plane;
  plane.q = q;
  plane.points = normalized_triples(q);
  plane.lines = plane.points;
  plane.line_points.resize(plane.lines.size());
  for (std::size_t l = 0; l < plane.lines.size(); ++l) {
    for (std::size_t p = 0; p < plane.points.size(); ++p) {
      if (plane.incident(p, l)) plane.line_points[l].push_back(static_cast<int>(p));
    }
  }
  return plane;
}

PlaneAxioms verify_axioms(const FinitePlane& plane) {
  PlaneAxioms ax;
  const std::size_t q = static_cast<std::size_t>(plane.q);
  const std::size_t n = q * q + q + 1;
  ax.cardinality = plane.points.size() == n && plane.lines.size() == n &&
                   std::set<FieldTriple>(plane.points.begin(), plane.points.end()).size() == n &&
                   std::set<FieldTriple>(plane.lines.begin(), plane.lines.end()).size() == n;

  ax.points_per_line = true;
  for (std::size_t l = 0; l < plane.lines.size(); ++l) {
    std::size_t count = 0;
    for (std::size_t p = 0; p < plane.points.size(); ++p) count += plane.incident(p, l) ? 1 : 0;
    if (count != q + 1) ax.points_per_line = false;
  }

  ax.lines_meet_once = true;
  for (std::size_t a = 0; a < plane.lines.size(); ++a) {
    for (std::size_t b = a + 1; b < plane.lines.size(); ++b) {
      std::size_t common = 0;
      for (std::size_t p = 0; p < plane.points.size(); ++p) {
        common += (plane.incident(p, a) && plane.incident(p, b)) ? 1 : 0;
      }
      if (common != 1) ax.lines_meet_once = false;
    }
  }

  ax.points_join_once = true;
  for (std::size_t a = 0; a < plane.points.size(); ++a) {
    for (std::size_t b = a + 1; b < plane.points.size(); ++b) {
      std::size_t common = 0;
      for (std::size_t l = 0; l < plane.lines.size(); ++l) {
        common += (plane.incident(a, l) && plane.incident(b, l)) ? 1 : 0;
      }
      if (common != 1) ax.points_join_once = false;
    }
  }
  return ax;
}

Deck deck_from_plane(const FinitePlane& plane) {
  Deck deck;
  deck.cards = plane.line_points;
  for (std::size_t p = 0; p < plane.points.size(); ++p) {
    const auto& c = plane.points[p].coords();
    deck.symbol_names[static_cast<int>(p)] =
        "(" + std::to_string(c[0]) + ":" + std::to_string(c[1]) + ":" + std::to_string(c[2]) + ")";
  }
  return deck;
}

DeckReport validate_deck(const Deck& deck) {
  DeckReport report;
  report.cards = deck.cards.size();
  if (deck.cards.empty()) return report;
  report.card_size = deck.cards.front().size();

  std::vector<std::vector<int>> sorted = deck.cards;
  for (auto& card : sorted) {
    std::sort(card.begin(), card.end());
    card.erase(std::unique(card.begin(), card.end()), card.end());
  }
  for (std::size_t i = 0; i < deck.cards.size(); ++i) {
    if (deck.cards[i].size() != report.card_size || sorted[i].size() != deck.cards[i].size()) {
      report.uniform_size = false;
    }
  }
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      std::vector<int> common;
      std::set_intersection(sorted[i].begin(), sorted[i].end(), sorted[j].begin(), sorted[j].end(),
                            std::back_inserter(common));
      ++report.pairs_checked;
      if (common.size() != 1) report.defects.push_back({i, j, common.size()});
    }
  }
  return report;
}

nlohmann::json deck_to_json(const Deck& deck) {
  nlohmann::json j;
  j["cards"] = deck.cards;
  if (!deck.symbol_names.empty()) {
    nlohmann::json names = nlohmann::json::object();
    for (const auto& [id, name] : deck.symbol_names) names[std::to_string(id)] = name;
    j["symbols"] = names;
  }
  return j;
}

Deck deck_from_json(const nlohmann::json& j) {
  Deck deck;
  try {
    const nlohmann::json& cards = j.is_array() ? j : j.at("cards");
    deck.cards = cards.get<std::vector<std::vector<int>>>();
    if (j.is_object() && j.contains("symbols")) {
      for (const auto& [key, value] : j.at("symbols").items()) {
        deck.symbol_names[std::stoi(key)] = value.get<std::string>();
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParse, std::string("malformed deck JSON: ") + e.what());
  } catch (const std::logic_error& e) {
    throw Error(ErrorKind::kParse, std::string("malformed deck symbol id: ") + e.what());
  }
  return deck;
}

}  // namespace geocheck::discrete
