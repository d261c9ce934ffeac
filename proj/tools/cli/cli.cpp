#include "cli.hpp"

#include "command.hpp"

#include <geocheck/error.hpp>

#include <algorithm>
#include <ostream>

namespace geocheck::cli {

CLI::App* add_subcommand(CLI::App& app, const std::string& name, const std::string& description) {
  CLI::App* sub = app.add_subcommand(name, description);
  sub->fallthrough();
  return sub;
}

void reject_figure(const Svg* figure, const std::string& command) {
  if (figure) throw Error(ErrorKind::kInvalidArgument, "'" + command + "' has no planar figure; drop --svg");
}

namespace {

/// Errors that mean a computation did not verify, as opposed to bad input.
bool is_verification_failure(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kSolverFailure:
    case ErrorKind::kAssumptionViolation:
    case ErrorKind::kTrackingFailure:
    case ErrorKind::kInvalidSchedule:
      return true;
    default:
      return false;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verifies geometry and combinatorics problems numerically and exactly.", "geocheck"};
  Globals g;
  app.add_flag("--json", g.json, "Print the machine-readable report");
  app.add_option("--svg", g.svg_path, "Write the planar figure to PATH");
  app.add_option("--seed", g.seed, "Seed for every random draw");
  app.add_option("--tol", g.tol, "Override the default numerical tolerances")->check(CLI::PositiveNumber);
  app.require_subcommand(1);

  Registry reg;
  add_discrete_commands(app, reg);
  add_frame_sphere_commands(app, reg);
  add_car_commands(app, reg);
  add_integral_commands(app, reg);
  add_placement_commands(app, reg);
  add_curves_commands(app, reg);
  add_confocal_commands(app, reg);
  add_pentagram_commands(app, reg);
  add_fta_commands(app, reg);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  const auto cmd = std::find_if(reg.begin(), reg.end(), [](const Command& c) { return c.app->parsed(); });
  if (cmd == reg.end()) {
    err << app.help();
    return 2;
  }
  Svg figure;
  Svg* fig = g.svg_path.empty() ? nullptr : &figure;
  try {
    const Report report = cmd->run(g, fig);
    if (fig) figure.write(g.svg_path);
    if (g.json) {
      out << report.to_json(g.seed, g.tol).dump(2) << '\n';
    } else {
      report.print_text(out);
    }
    return report.passed() ? 0 : 1;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return is_verification_failure(e.kind()) ? 1 : 2;
  }
}

}  // namespace geocheck::cli
