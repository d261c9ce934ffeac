#pragma once

#include <geocheck/rational.hpp>

#include <nlohmann/json.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace geocheck::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "geocheck-report/1";
inline constexpr const char* kToolVersion = "0.1.0";

/// One named verification. Residual checks carry the measured value and the
/// bound it was held to; exact checks carry the exact value as a string.
struct Check {
  std::string name;
  bool passed = false;
  std::optional<double> residual;
  std::optional<double> threshold;
  std::optional<std::string> exact;
};

/// Verification report of one subcommand run. Keys keep insertion order so
/// that serialisation is byte-stable for a given input.
class Report {
 public:
  Report(std::string problem, std::string topic);

  Json& inputs() { return inputs_; }
  Json& outputs() { return outputs_; }

  /// Passes when residual <= threshold (NaN fails).
  void check_residual(const std::string& name, double residual, double threshold);
  /// Passes when `value` equals `expected`.
  void check_exact(const std::string& name, const std::string& value, const std::string& expected);
  void check_exact(const std::string& name, const Rational& value, const Rational& expected);
  void check_exact(const std::string& name, long long value, long long expected);
  void check_flag(const std::string& name, bool ok);

  const std::vector<Check>& checks() const { return checks_; }
  bool passed() const;

  Json to_json(std::uint64_t seed, std::optional<double> tol) const;
  void print_text(std::ostream& out) const;

 private:
  std::string problem_;
  std::string topic_;
  Json inputs_ = Json::object();
  Json outputs_ = Json::object();
  std::vector<Check> checks_;
};

/// Rationals serialise as "p/q" strings.
std::string exact(const Rational& r);

}  // namespace geocheck::cli
