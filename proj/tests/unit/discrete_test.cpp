#include "oracles.hpp"

#include <geocheck/discrete/clock.hpp>
#include <geocheck/discrete/family.hpp>
#include <geocheck/discrete/finite_plane.hpp>
#include <geocheck/discrete/flux.hpp>
#include <geocheck/discrete/thieves.hpp>
#include <geocheck/error.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace geocheck;
using namespace geocheck::discrete;

TEST(FinitePlane, CountsMatchBruteForce) {
  for (int q : {2, 3, 5, 7, 11}) {
    const FinitePlane plane = build_plane(q);
    const auto expected = static_cast<std::size_t>(oracle::count_projective_points(q));
    EXPECT_EQ(plane.points.size(), expected) << "q = " << q;
    EXPECT_EQ(plane.lines.size(), expected);
    for (const auto& pts : plane.line_points) EXPECT_EQ(pts.size(), static_cast<std::size_t>(q + 1));
    EXPECT_TRUE(verify_axioms(plane).all()) << "q = " << q;
  }
}

TEST(FinitePlane, RejectsNonPrimeOrders) {
  for (int q : {0, 1, 4, 6, 9}) {
    try {
      build_plane(q);
      FAIL() << q;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kUnsupportedOrder);
    }
  }
}

TEST(Deck, OrderSevenDeck) {
  const Deck deck = deck_from_plane(build_plane(7));
  const DeckReport r = validate_deck(deck);
  EXPECT_EQ(r.cards, 57u);
  EXPECT_EQ(r.card_size, 8u);
  EXPECT_EQ(r.pairs_checked, 1596u);
  EXPECT_TRUE(r.valid());
}

TEST(Deck, SmallPlanesAndSubsets) {
  const DeckReport fano = validate_deck(deck_from_plane(build_plane(2)));
  EXPECT_EQ(fano.cards, 7u);
  EXPECT_EQ(fano.card_size, 3u);
  EXPECT_TRUE(fano.valid());
  const DeckReport q3 = validate_deck(deck_from_plane(build_plane(3)));
  EXPECT_EQ(q3.cards, 13u);
  EXPECT_EQ(q3.card_size, 4u);

  Deck deck = deck_from_plane(build_plane(7));
  deck.cards.resize(55);
  EXPECT_TRUE(validate_deck(deck).valid());

  deck.cards.push_back(deck.cards.front());
  const DeckReport dup = validate_deck(deck);
  EXPECT_FALSE(dup.valid());
  ASSERT_EQ(dup.defects.size(), 1u);
  EXPECT_EQ(dup.defects[0].shared, 8u);
}

TEST(Deck, JsonRoundTrip) {
  const Deck deck = deck_from_plane(build_plane(3));
  const Deck back = deck_from_json(deck_to_json(deck));
  EXPECT_EQ(back.cards, deck.cards);
  const Deck bare = deck_from_json(nlohmann::json::parse("[[1,2],[2,3],[3,1]]"));
  EXPECT_TRUE(validate_deck(bare).valid());
  EXPECT_THROW(deck_from_json(nlohmann::json::parse("{\"cards\": 3}")), Error);
}

TEST(Clock, CountsAgainstIntegerOracle) {
  // Hands at x (hour) and 12x mod 12 (minute); the swap is valid iff
  // 143x ≡ 0 (mod 12): x = 12k/143. Coincidences are the k divisible by 13.
  int moments = 0, coincidences = 0;
  for (int k = 0; k < 143; ++k) (k % 13 == 0 ? coincidences : moments)++;
  const ClockAmbiguity c = ambiguous_clock_times();
  EXPECT_EQ(c.per_twelve_hours(), static_cast<std::size_t>(moments));
  EXPECT_EQ(c.per_twelve_hours(), 132u);
  EXPECT_EQ(c.per_day(), 264u);
  EXPECT_EQ(c.coincidences.size(), static_cast<std::size_t>(coincidences));
  EXPECT_EQ(c.coincidences.size(), 11u);
  EXPECT_EQ(c.intersections, 143u);
  ASSERT_FALSE(c.moments.empty());
  EXPECT_EQ(c.moments[0].time, make_rational(12, 143));
  EXPECT_EQ(c.moments[0].partner, make_rational(144, 143));
}

TEST(Clock, SwappingIsAnInvolution) {
  for (const auto& m : ambiguous_clock_times().moments) {
    EXPECT_EQ(minute_hand(m.time), m.partner);
    EXPECT_EQ(minute_hand(m.partner), m.time);
    EXPECT_NE(m.time, m.partner);
  }
}

TEST(Family, ExactProbabilities) {
  // With T equally likely types of which B are boys and one is distinguished,
  // P(two boys | at least one distinguished) = (2B − 1)/(2T − 1).
  auto formula = [](long long boys, long long types) { return make_rational(2 * boys - 1, 2 * types - 1); };
  EXPECT_EQ(family_probability(sex_space(), FamilyCondition::kAtLeastOneDistinguished), formula(1, 2));
  EXPECT_EQ(family_probability(weekday_space(), FamilyCondition::kAtLeastOneDistinguished), formula(7, 14));
  EXPECT_EQ(family_probability(hour_space(), FamilyCondition::kAtLeastOneDistinguished), formula(168, 336));
  EXPECT_EQ(family_probability(weekday_space(), FamilyCondition::kAtLeastOneDistinguished), make_rational(13, 27));
  EXPECT_EQ(family_probability(hour_space(), FamilyCondition::kAtLeastOneDistinguished), make_rational(335, 671));
  EXPECT_EQ(family_probability(sex_space(), FamilyCondition::kAtLeastOneDistinguished), make_rational(1, 3));
  EXPECT_EQ(family_probability(sex_space(), FamilyCondition::kFirstChildBoy), make_rational(1, 2));
  EXPECT_EQ(family_probability(weekday_space(), FamilyCondition::kFirstChildBoy), make_rational(1, 2));
}

TEST(Family, UndefinedConditional) {
  ChildTypeSpace s{{"G1", "G2"}, {}, 0};
  EXPECT_THROW(family_probability(s, FamilyCondition::kFirstChildBoy), Error);
}

TEST(Flux, FeedbackNetwork) {
  const FluxNetwork net = four_way_feedback_network();
  const FluxSolution sol = solve_flux(net);
  for (const char* sink : {"sink-a", "sink-b", "sink-c"}) EXPECT_EQ(sol.inflow(net, net.node(sink)), make_rational(1, 3));
  EXPECT_EQ(sol.outflow(net, net.node("trunk")), make_rational(4, 3));
  EXPECT_TRUE(conserves_flux(net, sol));
}

TEST(Flux, SingleSplitter) {
  FluxNetwork net;
  const auto src = net.add_node(NodeKind::kSource, "source");
  const auto s = net.add_node(NodeKind::kSplitter, "split");
  const auto a = net.add_node(NodeKind::kSink, "a");
  const auto b = net.add_node(NodeKind::kSink, "b");
  net.add_edge(src, s);
  net.add_edge(s, a);
  net.add_edge(s, b);
  const FluxSolution sol = solve_flux(net);
  EXPECT_EQ(sol.inflow(net, a), make_rational(1, 2));
  EXPECT_EQ(sol.inflow(net, b), make_rational(1, 2));

}

TEST(Flux, TotalFeedbackIsIllPosed) {
  FluxNetwork loop;
  const auto src = loop.add_node(NodeKind::kSource, "source");
  const auto m = loop.add_node(NodeKind::kMerger, "merge");
  const auto sp = loop.add_node(NodeKind::kSplitter, "split");
  loop.add_edge(src, m);
  loop.add_edge(m, sp);
  loop.add_edge(sp, m);
  loop.add_edge(sp, m);
  try {
    solve_flux(loop);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kIllPosedNetwork);
  }
}

TEST(Flux, DesignerIsExactForAllFractions) {
  for (int q = 2; q <= 16; ++q) {
    for (int p = 1; p < q; ++p) {
      const DividerDesign d = design_divider_network(p, q);
      const FluxSolution sol = solve_flux(d.network);
      EXPECT_EQ(sol.inflow(d.network, d.output_sink), make_rational(p, q)) << p << "/" << q;
      EXPECT_TRUE(conserves_flux(d.network, sol));
      int n = 0;
      while ((1 << n) < q) ++n;
      EXPECT_EQ(d.levels, n);
      EXPECT_EQ(d.feedback_streams, (1 << n) - q);
    }
  }
}

TEST(Flux, ThreeFifths) {
  const DividerDesign d = design_divider_network(3, 5);
  EXPECT_EQ(d.levels, 3);
  EXPECT_EQ(d.feedback_streams, 3);
  EXPECT_EQ(solve_flux(d.network).inflow(d.network, d.output_sink), make_rational(3, 5));
  EXPECT_THROW(design_divider_network(0, 5), Error);
  EXPECT_THROW(design_divider_network(5, 5), Error);
}

TEST(Thieves, ExactAndSimulated) {
  const ThievesReport r = thieves_protocol(2024, 1'000'000);
  // Geometric series: each outcome has probability (1/4) Σ (1/4)^k = 1/3 and
  // attempts are geometric with success 3/4, two tosses each.
  for (const auto& p : r.win_probability) EXPECT_EQ(p, make_rational(1, 3));
  EXPECT_EQ(r.expected_tosses, make_rational(8, 3));
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(r.frequency(i), 1.0 / 3.0, 0.002);
  EXPECT_NEAR(static_cast<double>(r.simulated_tosses) / static_cast<double>(r.simulated_items), 8.0 / 3.0, 0.01);
}
