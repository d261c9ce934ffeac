#pragma once

#include "report.hpp"
#include "svg.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace geocheck::cli {

/// Flags shared by every subcommand.
struct Globals {
  bool json = false;
  std::string svg_path;
  std::uint64_t seed = 1;
  std::optional<double> tol;

  /// Residual bound: --tol when given, otherwise the subcommand's default.
  double bound(double fallback) const { return tol ? *tol : fallback; }
};

/// A subcommand fills a report; `figure` is non-null when --svg was given and
/// must then be drawn on (commands without a figure reject the flag).
using CommandFn = std::function<Report(const Globals&, Svg* figure)>;

struct Command {
  CLI::App* app = nullptr;
  CommandFn run;
};

using Registry = std::vector<Command>;

/// Adds a subcommand that accepts the global flags after its own.
CLI::App* add_subcommand(CLI::App& app, const std::string& name, const std::string& description);

/// Throws Error(kInvalidArgument) for commands that have no figure.
void reject_figure(const Svg* figure, const std::string& command);

void add_discrete_commands(CLI::App& app, Registry& reg);
void add_frame_sphere_commands(CLI::App& app, Registry& reg);
void add_car_commands(CLI::App& app, Registry& reg);
void add_integral_commands(CLI::App& app, Registry& reg);
void add_placement_commands(CLI::App& app, Registry& reg);
void add_curves_commands(CLI::App& app, Registry& reg);
void add_confocal_commands(CLI::App& app, Registry& reg);
void add_pentagram_commands(CLI::App& app, Registry& reg);
void add_fta_commands(CLI::App& app, Registry& reg);

}  // namespace geocheck::cli
