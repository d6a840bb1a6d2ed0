#pragma once

// Report writers: JSON (canonical field order), CSV (one row per trial), and
// a human-readable text summary.  All floating-point values are printed with
// 17 significant digits so reruns compare byte-for-byte.

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "clrlab/report.hpp"

namespace clrlab {

struct RunReport {
  std::string version = "1.0";
  std::uint64_t master_seed = 0;
  std::string timestamp;  // empty = omitted
  std::vector<SuiteResult> suites;

  int total_violations() const {
    int v = 0;
    for (const auto& s : suites) v += s.violations;
    return v;
  }
};

namespace detail {

inline std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

inline void write_params_json(std::ostream& os,
                              const std::vector<std::pair<std::string, double>>& params) {
  os << "{";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) os << ",";
    os << "\"" << json_escape(params[i].first) << "\":" << fmt_double(params[i].second);
  }
  os << "}";
}

}  // namespace detail

inline void write_json(std::ostream& os, const RunReport& r) {
  os << "{\n";
  os << "  \"version\": \"" << detail::json_escape(r.version) << "\",\n";
  os << "  \"masterSeed\": " << r.master_seed << ",\n";
  if (!r.timestamp.empty()) os << "  \"timestamp\": \"" << detail::json_escape(r.timestamp) << "\",\n";
  os << "  \"violations\": " << r.total_violations() << ",\n";
  os << "  \"suites\": [\n";
  for (std::size_t s = 0; s < r.suites.size(); ++s) {
    const auto& suite = r.suites[s];
    os << "    {\n";
    os << "      \"name\": \"" << detail::json_escape(suite.name) << "\",\n";
    os << "      \"params\": ";
    detail::write_params_json(os, suite.params);
    os << ",\n";
    os << "      \"maxRatio\": " << detail::fmt_double(suite.max_ratio) << ",\n";
    os << "      \"violations\": " << suite.violations << ",\n";
    os << "      \"resamples\": " << suite.resamples << ",\n";
    os << "      \"trials\": [\n";
    for (std::size_t t = 0; t < suite.trials.size(); ++t) {
      const auto& trial = suite.trials[t];
      os << "        {\"seed\": " << trial.seed << ", \"params\": ";
      detail::write_params_json(os, trial.params);
      os << ", \"lhs\": " << detail::fmt_double(trial.lhs)
         << ", \"rhs\": " << detail::fmt_double(trial.rhs)
         << ", \"ratio\": " << detail::fmt_double(trial.ratio)
         << ", \"pass\": " << (trial.pass ? "true" : "false")
         << ", \"detail\": \"" << detail::json_escape(trial.detail) << "\"}";
      os << (t + 1 < suite.trials.size() ? ",\n" : "\n");
    }
    os << "      ]\n";
    os << "    }" << (s + 1 < r.suites.size() ? ",\n" : "\n");
  }
  os << "  ]\n";
  os << "}\n";
}

inline void write_csv(std::ostream& os, const RunReport& r) {
  os << "suite,seed,lhs,rhs,ratio,pass,detail\n";
  for (const auto& suite : r.suites) {
    for (const auto& t : suite.trials) {
      std::string detail = t.detail;
      for (auto& c : detail)
        if (c == ',' || c == '\n') c = ';';
      os << suite.name << "," << t.seed << "," << detail::fmt_double(t.lhs) << ","
         << detail::fmt_double(t.rhs) << "," << detail::fmt_double(t.ratio) << ","
         << (t.pass ? "1" : "0") << "," << detail << "\n";
    }
  }
}

inline void write_text(std::ostream& os, const RunReport& r) {
  if (!r.timestamp.empty()) os << "run at " << r.timestamp << "\n";
  os << "master seed " << r.master_seed << "\n";
  for (const auto& suite : r.suites) {
    os << suite.name << ": " << suite.trials.size() << " trials, " << suite.violations
       << " violations, max ratio " << detail::fmt_double(suite.max_ratio);
    if (suite.resamples) os << ", " << suite.resamples << " resamples";
    os << "\n";
  }
  os << (r.total_violations() == 0 ? "ALL PASS" : "VIOLATIONS FOUND") << "\n";
}

}  // namespace clrlab
