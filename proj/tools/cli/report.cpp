#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace geocheck::cli {

std::string exact(const Rational& r) { return to_string(r); }

Report::Report(std::string problem, std::string topic) : problem_(std::move(problem)), topic_(std::move(topic)) {}

void Report::check_residual(const std::string& name, double residual, double threshold) {
  Check c;
  c.name = name;
  c.passed = residual <= threshold;
  c.residual = residual;
  c.threshold = threshold;
  checks_.push_back(std::move(c));
}

void Report::check_exact(const std::string& name, const std::string& value, const std::string& expected) {
  Check c;
  c.name = name;
  c.passed = value == expected;
  c.exact = value;
  checks_.push_back(std::move(c));
}

void Report::check_exact(const std::string& name, const Rational& value, const Rational& expected) {
  check_exact(name, exact(value), exact(expected));
}

void Report::check_exact(const std::string& name, long long value, long long expected) {
  check_exact(name, std::to_string(value), std::to_string(expected));
}

void Report::check_flag(const std::string& name, bool ok) {
  Check c;
  c.name = name;
  c.passed = ok;
  checks_.push_back(std::move(c));
}

bool Report::passed() const {
  for (const Check& c : checks_) {
    if (!c.passed) return false;
  }
  return !checks_.empty();
}

namespace {

/// JSON has no NaN or infinity; those become strings.
Json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

}  // namespace

Json Report::to_json(std::uint64_t seed, std::optional<double> tol) const {
  Json j;
  j["schema"] = kReportSchema;
  j["version"] = kToolVersion;
  j["problem"] = problem_;
  j["topic"] = topic_;
  j["seed"] = seed;
  j["tol"] = tol ? Json(*tol) : Json(nullptr);
  j["inputs"] = inputs_;
  j["outputs"] = outputs_;
  Json checks = Json::array();
  for (const Check& c : checks_) {
    Json e;
    e["name"] = c.name;
    e["passed"] = c.passed;
    if (c.residual) e["residual"] = number(*c.residual);
    if (c.threshold) e["threshold"] = *c.threshold;
    if (c.exact) e["exact"] = *c.exact;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  j["passed"] = passed();
  return j;
}

void Report::print_text(std::ostream& out) const {
  out << problem_ << " (" << topic_ << ")\n";
  char buf[64];
  for (const Check& c : checks_) {
    out << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name;
    if (c.exact) out << " = " << *c.exact;
    if (c.residual) {
      std::snprintf(buf, sizeof buf, " residual %.3e", *c.residual);
      out << buf;
      if (c.threshold) {
        std::snprintf(buf, sizeof buf, " <= %.1e", *c.threshold);
        out << buf;
      }
    }
    out << '\n';
  }
  out << (passed() ? "PASS" : "FAIL") << '\n';
}

}  // namespace geocheck::cli
