#include "command.hpp"

#include <geocheck/discrete/clock.hpp>
#include <geocheck/discrete/family.hpp>
#include <geocheck/discrete/finite_plane.hpp>
#include <geocheck/discrete/flux.hpp>
#include <geocheck/discrete/thieves.hpp>
#include <geocheck/error.hpp>

#include <cmath>
#include <fstream>
#include <map>
#include <memory>
#include <queue>

namespace geocheck::cli {

namespace {

using namespace geocheck::discrete;

Report run_spotit(int q, const std::string& deck_in, const std::string& deck_out) {
  Report r("spotit", "finite projective plane deck");
  Deck deck;
  if (deck_in.empty()) {
    r.inputs()["q"] = q;
    const FinitePlane plane = build_plane(q);
    const PlaneAxioms ax = verify_axioms(plane);
    r.check_flag("plane axioms", ax.all());
    deck = deck_from_plane(plane);
    const long long n = static_cast<long long>(q) * q + q + 1;
    r.check_exact("cards", static_cast<long long>(deck.cards.size()), n);
    r.check_exact("symbols_per_card", static_cast<long long>(deck.cards.front().size()), q + 1LL);
  } else {
    r.inputs()["deck"] = deck_in;
    std::ifstream in(deck_in);
    if (!in) throw Error(ErrorKind::kParse, "cannot open deck file " + deck_in);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::kParse, std::string("deck file is not JSON: ") + e.what());
    }
    deck = deck_from_json(j);
  }
  const DeckReport dr = validate_deck(deck);
  r.outputs()["cards"] = dr.cards;
  r.outputs()["symbols_per_card"] = dr.card_size;
  r.outputs()["pairs_checked"] = dr.pairs_checked;
  r.outputs()["defective_pairs"] = dr.defects.size();
  r.check_flag("uniform card size", dr.uniform_size);
  r.check_exact("pairs sharing other than one symbol", static_cast<long long>(dr.defects.size()), 0);
  if (!deck_out.empty()) {
    std::ofstream out(deck_out, std::ios::binary);
    if (!out) throw Error(ErrorKind::kInvalidArgument, "cannot write deck file " + deck_out);
    out << deck_to_json(deck).dump() << '\n';
  }
  return r;
}

Report run_clock() {
  Report r("clock", "clock hands ambiguity");
  const ClockAmbiguity a = ambiguous_clock_times();
  r.outputs()["per_twelve_hours"] = a.per_twelve_hours();
  r.outputs()["per_day"] = a.per_day();
  r.outputs()["coincidences"] = a.coincidences.size();
  Json first = Json::array();
  for (std::size_t i = 0; i < std::min<std::size_t>(5, a.moments.size()); ++i) {
    first.push_back({{"time_hours", exact(a.moments[i].time)}, {"partner_hours", exact(a.moments[i].partner)}});
  }
  r.outputs()["first_moments"] = first;
  r.check_exact("ambiguous moments per 12 h", static_cast<long long>(a.per_twelve_hours()), 132);
  r.check_exact("ambiguous moments per day", static_cast<long long>(a.per_day()), 264);
  r.check_exact("coincidences per 12 h", static_cast<long long>(a.coincidences.size()), 11);
  // Swapping the hands of t gives exactly the hands of its partner.
  const Rational twelve(12);
  std::size_t bad = 0;
  for (const AmbiguousMoment& m : a.moments) {
    if (mod_rational(m.partner, twelve) != minute_hand(m.time) || minute_hand(m.partner) != mod_rational(m.time, twelve)) {
      ++bad;
    }
  }
  r.check_exact("partners with swapped hands mismatching", static_cast<long long>(bad), 0);
  return r;
}

/// Layered drawing: x is the breadth-first depth from the source.
void draw_network(const FluxNetwork& net, const FluxSolution& sol, Svg& svg) {
  const std::size_t n = net.nodes().size();
  std::vector<int> depth(n, -1);
  std::queue<std::size_t> todo;
  for (std::size_t i = 0; i < n; ++i) {
    if (net.nodes()[i].kind == NodeKind::kSource) {
      depth[i] = 0;
      todo.push(i);
    }
  }
  while (!todo.empty()) {
    const std::size_t u = todo.front();
    todo.pop();
    for (std::size_t e : net.out_edges(u)) {
      const std::size_t v = net.edges()[e].to;
      if (depth[v] < 0) {
        depth[v] = depth[u] + 1;
        todo.push(v);
      }
    }
  }
  std::map<int, int> used;
  std::vector<Vec2> pos(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int d = std::max(depth[i], 0);
    pos[i] = Vec2(2.0 * d, -1.0 * used[d]++);
  }
  for (std::size_t e = 0; e < net.edges().size(); ++e) {
    const FluxEdge& edge = net.edges()[e];
    Svg::Style s;
    s.dashed = depth[edge.to] <= depth[edge.from];
    s.stroke = s.dashed ? "firebrick" : "black";
    svg.line(pos[edge.from], pos[edge.to], s);
    svg.label(0.5 * (pos[edge.from] + pos[edge.to]) + Vec2(0, 0.1), exact(sol.edge_flux[e]));
  }
  for (std::size_t i = 0; i < n; ++i) {
    svg.dot(pos[i], net.nodes()[i].kind == NodeKind::kSink ? "steelblue" : "black");
    svg.label(pos[i] + Vec2(0.1, -0.25), net.nodes()[i].label);
  }
}

Report run_flux(int p, int q, std::uint64_t seed, std::uint64_t items, Svg* figure) {
  Report r("flux", "exact flow splitting");
  r.inputs()["p"] = p;
  r.inputs()["q"] = q;
  r.inputs()["thieves_items"] = items;

  const FluxNetwork net = four_way_feedback_network();
  const FluxSolution sol = solve_flux(net);
  const Rational third = make_rational(1, 3);
  for (const char* sink : {"sink-a", "sink-b", "sink-c"}) {
    r.outputs()["feedback_network"][sink] = exact(sol.inflow(net, net.node(sink)));
    r.check_exact(std::string("feedback network ") + sink, sol.inflow(net, net.node(sink)), third);
  }
  r.outputs()["feedback_network"]["trunk"] = exact(sol.outflow(net, net.node("trunk")));
  r.check_exact("feedback network trunk", sol.outflow(net, net.node("trunk")), make_rational(4, 3));
  r.check_flag("feedback network conserves flux", conserves_flux(net, sol));

  const DividerDesign d = design_divider_network(p, q);
  const FluxSolution dsol = solve_flux(d.network);
  r.outputs()["divider"] = {{"levels", d.levels},
                            {"feedback_streams", d.feedback_streams},
                            {"output", exact(dsol.inflow(d.network, d.output_sink))}};
  r.check_exact("divider output", dsol.inflow(d.network, d.output_sink), make_rational(p, q));

  // Every fraction with denominator up to 16.
  int wrong = 0, designs = 0;
  for (int qq = 2; qq <= 16; ++qq) {
    for (int pp = 1; pp < qq; ++pp) {
      const DividerDesign dd = design_divider_network(pp, qq);
      const FluxSolution s = solve_flux(dd.network);
      ++designs;
      if (s.inflow(dd.network, dd.output_sink) != make_rational(pp, qq) || !conserves_flux(dd.network, s)) ++wrong;
    }
  }
  r.outputs()["designs_checked"] = designs;
  r.check_exact("designs with inexact output, q <= 16", wrong, 0);

  const ThievesReport t = thieves_protocol(seed, items);
  Json probs = Json::array();
  for (const Rational& w : t.win_probability) probs.push_back(exact(w));
  r.outputs()["thieves"] = {{"win_probability", probs},
                            {"expected_tosses", exact(t.expected_tosses)},
                            {"simulated_frequency", {t.frequency(0), t.frequency(1), t.frequency(2)}},
                            {"simulated_mean_tosses",
                             static_cast<double>(t.simulated_tosses) / static_cast<double>(t.simulated_items)}};
  for (int i = 0; i < 3; ++i) {
    r.check_exact("thief " + std::string(1, static_cast<char>('A' + i)) + " probability", t.win_probability[i], third);
  }
  r.check_exact("expected tosses", t.expected_tosses, make_rational(8, 3));
  // Binomial standard error of a 1/3 frequency.
  const double se = std::sqrt((1.0 / 3.0) * (2.0 / 3.0) / static_cast<double>(t.simulated_items));
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) worst = std::max(worst, std::abs(t.frequency(i) - 1.0 / 3.0));
  r.check_residual("simulated frequency deviation (5 standard errors)", worst, 5 * se);

  if (figure) draw_network(d.network, dsol, *figure);
  return r;
}

Report run_family(const std::string& granularity, const std::string& condition) {
  Report r("family", "conditional probability of two boys");
  struct Case {
    std::string granularity, condition;
    Rational expected;
  };
  std::vector<Case> cases;
  auto expected_for = [](const ChildTypeSpace& s, FamilyCondition c) {
    if (c == FamilyCondition::kFirstChildBoy) return make_rational(1, 2);
    // With T equally likely types of which B are boys and one distinguished.
    const long long t = static_cast<long long>(s.types.size()), b = static_cast<long long>(s.boy_types.size());
    return make_rational(2 * b - 1, 2 * t - 1);
  };
  const std::vector<std::string> grains =
      granularity.empty() ? std::vector<std::string>{"sex", "weekday", "hour"} : std::vector<std::string>{granularity};
  const std::vector<std::string> conds = condition.empty()
                                             ? std::vector<std::string>{"at-least-one"}
                                             : std::vector<std::string>{condition};
  Json results = Json::array();
  for (const auto& gname : grains) {
    const ChildTypeSpace space = gname == "sex" ? sex_space() : gname == "weekday" ? weekday_space() : hour_space();
    for (const auto& cname : conds) {
      const FamilyCondition c =
          cname == "first-boy" ? FamilyCondition::kFirstChildBoy : FamilyCondition::kAtLeastOneDistinguished;
      const Rational p = family_probability(space, c);
      results.push_back({{"granularity", gname}, {"condition", cname}, {"probability", exact(p)}});
      r.check_exact(gname + ", " + cname, p, expected_for(space, c));
    }
  }
  if (granularity.empty() && condition.empty()) {
    const Rational p = family_probability(sex_space(), FamilyCondition::kFirstChildBoy);
    results.push_back({{"granularity", "sex"}, {"condition", "first-boy"}, {"probability", exact(p)}});
    r.check_exact("sex, first-boy", p, make_rational(1, 2));
  }
  r.inputs()["granularity"] = granularity.empty() ? Json("all") : Json(granularity);
  r.inputs()["condition"] = condition.empty() ? Json("default") : Json(condition);
  r.outputs()["results"] = results;
  return r;
}

}  // namespace

void add_discrete_commands(CLI::App& app, Registry& reg) {
  {
    auto q = std::make_shared<int>(7);
    auto deck_in = std::make_shared<std::string>();
    auto deck_out = std::make_shared<std::string>();
    CLI::App* sub = add_subcommand(app, "spotit", "Build and validate a Spot-it deck from PG(2, q)");
    sub->add_option("--q", *q, "Prime order of the plane")->check(CLI::Range(2, 97));
    sub->add_option("--deck", *deck_in, "Validate this deck JSON instead of building one");
    sub->add_option("--deck-out", *deck_out, "Write the deck as JSON");
    reg.push_back({sub, [=](const Globals&, Svg* fig) {
                     reject_figure(fig, "spotit");
                     return run_spotit(*q, *deck_in, *deck_out);
                   }});
  }
  {
    CLI::App* sub = add_subcommand(app, "clock", "Count moments whose swapped hands read a valid time");
    reg.push_back({sub, [](const Globals&, Svg* fig) {
                     reject_figure(fig, "clock");
                     return run_clock();
                   }});
  }
  {
    auto p = std::make_shared<int>(3);
    auto q = std::make_shared<int>(5);
    auto items = std::make_shared<std::uint64_t>(1'000'000);
    CLI::App* sub = add_subcommand(app, "flux", "Exact flux through divider networks with feedback");
    sub->add_option("--p", *p, "Numerator of the fraction to separate");
    sub->add_option("--q", *q, "Denominator of the fraction to separate");
    sub->add_option("--items", *items, "Simulated lotteries for the thieves' protocol")->check(CLI::Range(1, 100'000'000));
    reg.push_back({sub, [=](const Globals& g, Svg* fig) { return run_flux(*p, *q, g.seed, *items, fig); }});
  }
  {
    auto granularity = std::make_shared<std::string>();
    auto condition = std::make_shared<std::string>();
    CLI::App* sub = add_subcommand(app, "family", "Probability that both children are boys");
    sub->add_option("--granularity", *granularity, "Child types: sex, weekday or hour")
        ->check(CLI::IsMember({"sex", "weekday", "hour"}));
    sub->add_option("--condition", *condition, "at-least-one (distinguished boy) or first-boy")
        ->check(CLI::IsMember({"at-least-one", "first-boy"}));
    reg.push_back({sub, [=](const Globals&, Svg* fig) {
                     reject_figure(fig, "family");
                     return run_family(*granularity, *condition);
                   }});
  }
}

}  // namespace geocheck::cli
