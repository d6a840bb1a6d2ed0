#pragma once

// Trial and suite records shared by the verification engines and the CLI.

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace clrlab {

/// One verification trial: left side, right side, their ratio and a pass flag.
struct TrialReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, double>> params;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 1.0;
  bool pass = true;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::vector<std::pair<std::string, double>> params;
  std::vector<TrialReport> trials;
  double max_ratio = 0.0;
  int violations = 0;
  int resamples = 0;
};

inline double safe_ratio(double lhs, double rhs) {
  if (rhs == 0.0) return lhs == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
  return lhs / rhs;
}

inline SuiteResult aggregate(std::string name,
                             std::vector<std::pair<std::string, double>> params,
                             std::vector<TrialReport> trials, int resamples = 0) {
  SuiteResult out;
  out.name = std::move(name);
  out.params = std::move(params);
  out.trials = std::move(trials);
  out.resamples = resamples;
  for (const auto& t : out.trials) {
    if (!t.pass) ++out.violations;
    if (std::isfinite(t.ratio) && t.ratio > out.max_ratio) out.max_ratio = t.ratio;
  }
  return out;
}

}  // namespace clrlab
