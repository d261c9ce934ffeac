#include "command.hpp"

#include <geocheck/error.hpp>
#include <geocheck/placement.hpp>

#include <cmath>
#include <memory>
#include <numbers>

namespace geocheck::cli {

namespace {

using namespace geocheck::placement;

struct TableArgs {
  std::string floor;  // empty: the three analytic floors
  double c = 0.0;
  bool c_given = false;
  std::string grid;
  TableSetup setup;
};

Report run_table(const TableArgs& a, const Globals& g) {
  Report r("table", "balancing a square table");
  r.inputs()["floor"] = a.floor.empty() ? Json("flat, saddle, sine") : Json(a.floor);
  r.inputs()["side"] = a.setup.side;
  r.inputs()["centre"] = {a.setup.x0, a.setup.y0};
  std::vector<Floor> floors;
  if (a.floor.empty()) {
    floors = {flat_floor(0.0), saddle_floor(a.c_given ? a.c : 0.4), sine_floor(a.c_given ? a.c : 0.3)};
  } else if (a.floor == "flat") {
    floors = {flat_floor(a.c)};
  } else if (a.floor == "saddle") {
    floors = {saddle_floor(a.c_given ? a.c : 0.4)};
  } else if (a.floor == "sine") {
    floors = {sine_floor(a.c_given ? a.c : 0.3)};
  } else {
    if (a.grid.empty()) throw Error(ErrorKind::kInvalidArgument, "--floor grid needs --grid PATH");
    floors = {GridFloor::load(a.grid).as_floor("grid")};
  }
  Json rows = Json::array();
  for (const Floor& f : floors) {
    const TablePlacement t = balance_square_table(f, a.setup);
    rows.push_back({{"floor", f.name},
                    {"theta", t.pose.theta},
                    {"tilt_x", t.pose.tilt_x},
                    {"tilt_y", t.pose.tilt_y},
                    {"height", t.pose.height},
                    {"g0", t.g0},
                    {"g_quarter", t.g_quarter},
                    {"residuals", {t.residuals[0], t.residuals[1], t.residuals[2], t.residuals[3]}}});
    if (f.name.rfind("flat", 0) == 0) {
      r.check_residual(f.name + " max leg residual", t.max_residual, 0.0);
    } else {
      r.check_residual(f.name + " max leg residual", t.max_residual, g.bound(1e-9));
    }
  }
  r.outputs()["placements"] = rows;
  return r;
}

Report run_cone(double alpha_deg, bool alpha_given, double rho) {
  Report r("cone", "lasso on a cone");
  r.inputs()["rho"] = rho;
  const PiMultiple crit = critical_half_angle();
  r.outputs()["critical_half_angle"] = crit.str();
  r.outputs()["critical_half_angle_rad"] = crit.value();
  r.check_exact("critical half-angle / pi", crit.coefficient, make_rational(1, 6));

  int mismatches = 0;
  for (int i = 1; i < 180; ++i) {
    const double alpha = i * std::numbers::pi / 360.0;
    const bool expected = 2 * std::numbers::pi * std::sin(alpha) >= std::numbers::pi - 1e-12;
    if (loop_slips(Cone(alpha, rho)) != expected) ++mismatches;
  }
  r.check_exact("slip predicate mismatches on a 0.5 degree grid", mismatches, 0);
  const double boundary = tight_loop_length(Cone(crit.value(), rho));
  r.outputs()["boundary_loop_length"] = boundary;
  r.check_residual("tight loop at the critical angle vs 2 rho", std::abs(boundary - 2 * rho), 1e-12 * rho);

  if (alpha_given) {
    const Cone cone(alpha_deg * std::numbers::pi / 180.0, rho);
    r.inputs()["alpha_deg"] = alpha_deg;
    r.outputs()["sector_angle"] = cone_sector_angle(cone.alpha);
    r.outputs()["slips"] = loop_slips(cone);
    if (!loop_slips(cone) || std::abs(2 * std::sin(cone.alpha) - 1) <= 1e-12) {
      r.outputs()["tight_loop_length"] = tight_loop_length(cone);
    }
  }
  return r;
}

}  // namespace

void add_placement_commands(CLI::App& app, Registry& reg) {
  {
    auto a = std::make_shared<TableArgs>();
    CLI::App* sub = add_subcommand(app, "table", "Rotate a square table until all four legs touch the floor");
    sub->add_option("--floor", a->floor, "flat, saddle, sine or grid (default: the three analytic floors)")
        ->check(CLI::IsMember({"flat", "saddle", "sine", "grid"}));
    sub->add_option("--c", a->c, "Floor amplitude (level for flat)");
    sub->add_option("--grid", a->grid, "Height grid file for --floor grid");
    sub->add_option("--side", a->setup.side, "Table side")->check(CLI::PositiveNumber);
    sub->add_option("--x0", a->setup.x0, "Table centre x");
    sub->add_option("--y0", a->setup.y0, "Table centre y");
    reg.push_back({sub, [=](const Globals& g, Svg* fig) {
                     reject_figure(fig, "table");
                     TableArgs args = *a;
                     args.c_given = sub->count("--c") > 0;
                     return run_table(args, g);
                   }});
  }
  {
    auto alpha = std::make_shared<double>(0.0);
    auto rho = std::make_shared<double>(1.0);
    CLI::App* sub = add_subcommand(app, "cone", "When a lasso slips off a cone");
    sub->add_option("--alpha", *alpha, "Half-angle in degrees to classify")->check(CLI::Range(0.0, 90.0));
    sub->add_option("--rho", *rho, "Slant distance of the knot")->check(CLI::PositiveNumber);
    reg.push_back({sub, [=](const Globals&, Svg* fig) {
                     reject_figure(fig, "cone");
                     return run_cone(*alpha, sub->count("--alpha") > 0, *rho);
                   }});
  }
}

}  // namespace geocheck::cli
