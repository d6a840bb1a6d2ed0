// clrlab: run verification suites for the CLR / Cwikel inequality circle and
// emit the constants table.  Exit 0 = all checks pass, 1 = violations,
// 2 = usage or configuration error.

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "clrlab/constants.hpp"
#include "clrlab/serialize.hpp"
#include "clrlab/verify.hpp"

namespace {

std::string now_string() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[64];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct Config {
  std::string format = "text";
  std::string output;
  bool no_timestamp = false;
  clrlab::RunOptions opts;
};

int write_out(const Config& cfg, const std::function<void(std::ostream&)>& writer) {
  if (cfg.output.empty()) {
    writer(std::cout);
    return 0;
  }
  std::ofstream f(cfg.output);
  if (!f) {
    std::cerr << "cannot open output path: " << cfg.output << "\n";
    return 2;
  }
  writer(f);
  return 0;
}

int emit_constants(const Config& cfg) {
  const auto table = clrlab::constants::constants_table();
  auto writer = [&](std::ostream& os) {
    if (cfg.format == "csv") {
      os << "name,parameters,value,source\n";
      for (const auto& rec : table) {
        os << rec.name << ",";
        for (std::size_t i = 0; i < rec.parameters.size(); ++i) {
          if (i) os << " ";
          os << rec.parameters[i].first << "=" << clrlab::detail::fmt_double(rec.parameters[i].second);
        }
        os << "," << clrlab::detail::fmt_double(rec.value) << ",\"" << rec.source << "\"\n";
      }
    } else if (cfg.format == "json") {
      os << "{\n  \"constants\": [\n";
      for (std::size_t r = 0; r < table.size(); ++r) {
        const auto& rec = table[r];
        os << "    {\"name\": \"" << rec.name << "\", \"parameters\": ";
        clrlab::detail::write_params_json(os, rec.parameters);
        os << ", \"value\": " << clrlab::detail::fmt_double(rec.value) << ", \"source\": \""
           << clrlab::detail::json_escape(rec.source) << "\"}"
           << (r + 1 < table.size() ? ",\n" : "\n");
      }
      os << "  ]\n}\n";
    } else {
      for (const auto& rec : table) {
        os << rec.name << "(";
        for (std::size_t i = 0; i < rec.parameters.size(); ++i) {
          if (i) os << ", ";
          os << rec.parameters[i].first << "=" << rec.parameters[i].second;
        }
        os << ") = " << clrlab::detail::fmt_double(rec.value) << "   [" << rec.source << "]\n";
      }
    }
  };
  return write_out(cfg, writer);
}

int run_verify(const Config& cfg, const std::string& suite) {
  std::vector<std::string> names;
  if (suite == "all") {
    names = clrlab::suite_names();
  } else {
    bool known = false;
    for (const auto& s : clrlab::suite_names()) known = known || s == suite;
    if (!known) {
      std::cerr << "unknown suite '" << suite << "'; valid:";
      for (const auto& s : clrlab::suite_names()) std::cerr << " " << s;
      std::cerr << " all\n";
      return 2;
    }
    names.push_back(suite);
  }

  clrlab::RunReport report;
  report.master_seed = cfg.opts.seed;
  if (!cfg.no_timestamp) report.timestamp = now_string();
  try {
    for (const auto& name : names) report.suites.push_back(clrlab::run_suite(name, cfg.opts));
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  }

  auto writer = [&](std::ostream& os) {
    if (cfg.format == "json") {
      clrlab::write_json(os, report);
    } else if (cfg.format == "csv") {
      clrlab::write_csv(os, report);
    } else {
      clrlab::write_text(os, report);
    }
  };
  const int wstatus = write_out(cfg, writer);
  if (wstatus != 0) return wstatus;
  return report.total_violations() == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification laboratory for the CLR / Cwikel circle of inequalities"};
  app.require_subcommand(1);

  Config cfg;
  std::string suite = "all";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", cfg.format, "output format: text, json, csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--output", cfg.output, "write to file instead of stdout");
  };
  auto add_run = [&](CLI::App* cmd) {
    add_common(cmd);
    cmd->add_option("--seed", cfg.opts.seed, "master seed");
    cmd->add_option("--trials", cfg.opts.trials, "trials per suite")->check(CLI::PositiveNumber);
    cmd->add_option("--tol", cfg.opts.slack, "relative slack for inequality checks");
    cmd->add_option("--d", cfg.opts.d, "dimension (0 = rotate over defaults)");
    cmd->add_option("--n", cfg.opts.n, "grid points per axis (0 = defaults)");
    cmd->add_option("--L", cfg.opts.L, "torus side length (0 = default)");
    cmd->add_option("--p", cfg.opts.p, "exponent p (0 = rotate)");
    cmd->add_option("--q", cfg.opts.q, "exponent q (0 = rotate)");
    cmd->add_option("--s", cfg.opts.s, "fractional power s (0 = rotate)");
    cmd->add_option("--nu", cfg.opts.nu, "CLR exponent nu (0 = rotate)");
    cmd->add_option("--m", cfg.opts.m, "auxiliary dimension m (0 = rotate)");
    cmd->add_flag("--no-timestamp", cfg.no_timestamp, "omit timestamp for reproducible reports");
  };

  auto* c_const = app.add_subcommand("constants", "emit the constants table");
  add_common(c_const);

  auto* c_verify = app.add_subcommand("verify", "run one suite or all of them");
  c_verify->add_option("suite", suite, "suite name or 'all'");
  add_run(c_verify);

  auto* c_all = app.add_subcommand("all", "constants table plus every suite");
  add_run(c_all);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  // basic domain screening before any computation
  if (cfg.opts.d < 0 || cfg.opts.n < 0 || cfg.opts.m < 0 || cfg.opts.L < 0.0 ||
      (cfg.opts.p != 0.0 && cfg.opts.p <= 1.0) || (cfg.opts.q != 0.0 && cfg.opts.q <= 2.0) ||
      (cfg.opts.nu != 0.0 && cfg.opts.nu <= 2.0) || cfg.opts.s < 0.0 || !(cfg.opts.slack >= 0.0)) {
    std::cerr << "configuration error: parameter outside its domain "
                 "(need p > 1, q > 2, nu > 2, d/n/m/L/s >= 0)\n";
    return 2;
  }
  if (cfg.opts.d > 0 && cfg.opts.n > 0) {
    double total = 1.0;
    for (int j = 0; j < cfg.opts.d; ++j) total *= cfg.opts.n;
    if (total > 512) {
      std::cerr << "configuration error: n^d exceeds the size cap 512\n";
      return 2;
    }
  }

  if (c_const->parsed()) return emit_constants(cfg);
  if (c_verify->parsed()) return run_verify(cfg, suite);
  if (c_all->parsed()) {
    Config ccfg = cfg;
    ccfg.output.clear();  // constants go to stdout; --output captures the report
    const int a = emit_constants(ccfg);
    if (a != 0) return a;
    return run_verify(cfg, "all");
  }
  return 2;
}
