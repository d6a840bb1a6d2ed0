// Acceptance gate: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "clrlab/serialize.hpp"
#include "clrlab/verify.hpp"
#include "oracles.hpp"

using namespace clrlab;

namespace {

int failures = 0;

class Criterion {
 public:
  Criterion(int number, std::string description)
      : number_(number), description_(std::move(description)),
        start_(std::chrono::steady_clock::now()) {}

  void require(bool ok, const std::string& note = "") {
    if (!ok) {
      pass_ = false;
      if (!note.empty() && note_.empty()) note_ = note;
    }
  }

  void finish(double budget_seconds) {
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (elapsed > budget_seconds) {
      pass_ = false;
      if (note_.empty()) {
        std::ostringstream os;
        os << "over time budget " << budget_seconds << "s";
        note_ = os.str();
      }
    }
    std::printf("criterion %d: %s — %s (%.2fs)%s%s\n", number_, pass_ ? "PASS" : "FAIL",
                description_.c_str(), elapsed, note_.empty() ? "" : ": ",
                note_.c_str());
    if (!pass_) ++failures;
  }

 private:
  int number_;
  std::string description_;
  std::string note_;
  bool pass_ = true;
  std::chrono::steady_clock::time_point start_;
};

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

void criterion1() {
  Criterion c(1, "example constants match the published digits to 5e-4");
  const auto e1 = constants::clr_example_constants(3, 1.0);
  const auto ehalf = constants::clr_example_constants(3, 0.5);
  c.require(close(e1.scalar_bound, 0.196, 5e-4), "scalar d=3 s=1");
  c.require(close(e1.opval_bound, 0.228, 5e-4), "operator-valued d=3 s=1");
  c.require(close(ehalf.scalar_bound, 0.228, 5e-4), "scalar d=3 s=1/2");
  c.finish(1.0);
}

void criterion2() {
  Criterion c(2, "exact constant identities hold to 1e-12 over 50 random draws");
  const Sampler sampler{2};
  for (int t = 0; t < 50; ++t) {
    Rng rng = sampler.rng_for(static_cast<std::uint64_t>(t));
    const double q = 2.0 + rng.log_uniform(1e-3, 10.0);
    const double rel1 = std::abs(constants::hundertmark_constant(q, 1.0) /
                                     constants::cwikelop_constant(q, 1.0) -
                                 std::pow(2.0, 2.0 * q - 5.0) * q) /
                        (std::pow(2.0, 2.0 * q - 5.0) * q);
    c.require(rel1 <= 1e-12, "hundertmark/cwikelop ratio");

    const int d = 1 + rng.uniform_int(4);
    const double factor = constants::cwikelop_constant(q, 1.0) * std::pow(2.0 * constants::pi, -d) /
                          constants::cwikel_constant(q, d);
    c.require(close(factor, constants::corollary_vs_opval_factor(q),
                    1e-12 * constants::corollary_vs_opval_factor(q)),
              "corollary vs operator-valued factor");

    const double p = 1.0 + rng.log_uniform(1e-2, 6.0);
    const double dd = rng.log_uniform(0.01, 50.0);
    const double k = constants::dual_transform(p, dd);
    c.require(close(constants::dual_transform_inv(p, k), dd, 1e-12 * dd), "dual round trip");

    const int kd = 1 + rng.uniform_int(5);
    const double s = 0.5 * kd * rng.uniform(0.05, 0.95);
    const auto b = constants::ksd_bounds(s, kd);
    c.require(close(b.sc_upper / b.lower, (kd + 2.0 * s) / (kd - 2.0 * s),
                    1e-12 * (kd + 2.0 * s) / (kd - 2.0 * s)),
              "ksd upper/lower ratio");
  }
  c.finish(1.0);
}

void criterion3() {
  Criterion c(3, "ten inequality suites, 200 trials each, zero violations");
  RunOptions opt;
  opt.seed = 1;
  opt.trials = 200;
  for (const char* name : {"theorem_main", "corollary_cwikel", "rumin", "cwikelop",
                           "pointwise_young", "clr", "lemma_ass", "diamagnetic", "phase_space",
                           "sobolev_rank_one"}) {
    const auto res = run_suite(name, opt);
    if (res.violations != 0) c.require(false, std::string(name) + " violated");
  }
  c.finish(300.0);
}

void criterion4() {
  Criterion c(4, "identity suites birman_schwinger/variational/equiv_sandwich at 200 trials");
  RunOptions opt;
  opt.seed = 1;
  opt.trials = 200;
  for (const char* name : {"birman_schwinger", "variational", "equiv_sandwich"}) {
    const auto res = run_suite(name, opt);
    if (res.violations != 0) c.require(false, std::string(name) + " violated");
  }
  c.finish(30.0);
}

void criterion5() {
  Criterion c(5, "closed forms agree with brute-force oracles");
  const Sampler sampler{5};
  // weak norms vs dense scans on 100 random inputs
  for (int t = 0; t < 100; ++t) {
    Rng rng = sampler.rng_for(static_cast<std::uint64_t>(t));
    const int n = 5 + rng.uniform_int(15);
    std::vector<double> w(static_cast<std::size_t>(n)), v(static_cast<std::size_t>(n));
    for (auto& x : w) x = rng.log_uniform(0.1, 5.0);
    for (auto& x : v) x = rng.uniform() < 0.2 ? 0.0 : rng.log_uniform(0.01, 10.0);
    const auto f = WeightedFunction::scalar(FiniteMeasureSpace(w), v);
    const double p = rng.log_uniform(0.3, 6.0);
    const double exact = weak_lp_norm(f, p);
    c.require(close(exact, oracle::weak_lp_scan(f, p), 1e-9 * std::max(1.0, exact)),
              "weak_lp_norm vs scan");

    std::vector<double> sv;
    const int rank = 1 + rng.uniform_int(8);
    for (int r = 0; r < rank; ++r) sv.push_back(rng.log_uniform(0.01, 50.0));
    const SingularSpectrum s(sv);
    const double q = rng.log_uniform(0.3, 8.0);
    const double ws = weak_schatten_norm(s, q);
    c.require(close(ws, oracle::weak_schatten_scan(s, q), 1e-9 * std::max(1.0, ws)),
              "weak_schatten_norm vs scan");
  }
  // equiv quasinorm vs the million-point mu-scan
  {
    Rng rng = sampler.rng_for(1000);
    std::vector<double> sv;
    for (int r = 0; r < 6; ++r) sv.push_back(rng.log_uniform(0.05, 5.0));
    const SingularSpectrum s(sv);
    for (double q : {2.5, 3.0, 4.0}) {
      const double exact = equiv_quasinorm(s, q);
      c.require(close(exact, oracle::equiv_quasinorm_scan(s, q), 1e-6 * std::max(1.0, exact)),
                "equiv_quasinorm vs mu-scan");
    }
  }
  // eigensolver residual at sizes up to 64
  for (int t = 0; t < 6; ++t) {
    Rng rng = sampler.rng_for(2000 + static_cast<std::uint64_t>(t));
    const int n = 16 * (t + 1) > 64 ? 64 : 16 * (t + 1);
    const Matrix a = random_hermitian(n, rng, rng.log_uniform(0.1, 10.0));
    const auto dec = eigh(a);
    const Matrix recon = dec.vectors * dec.eigenvalues.asDiagonal() * dec.vectors.adjoint();
    c.require((a - recon).norm() <= 1e-10 * a.norm(), "eigh residual");
  }
  c.finish(30.0);
}

void criterion6() {
  Criterion c(6, "dimension-dependent ordering of the two upper bounds");
  for (double s : {0.1, 0.2, 0.4}) {
    const auto b = constants::ksd_bounds(s, 1);
    c.require(b.sobolev_upper < b.sc_upper, "d=1 Sobolev should win");
  }
  for (double s : {0.5, 1.0, 1.25}) {
    const auto b = constants::ksd_bounds(s, 3);
    c.require(b.sc_upper < b.sobolev_upper, "d=3 semiclassical should win");
  }
  c.require(constants::ksd_bounds(0.45, 2).sobolev_upper < constants::ksd_bounds(0.45, 2).sc_upper,
            "d=2 s=0.45");
  c.require(constants::ksd_bounds(0.55, 2).sc_upper < constants::ksd_bounds(0.55, 2).sobolev_upper,
            "d=2 s=0.55");
  c.finish(1.0);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void criterion7() {
  Criterion c(7, "seeded CLI reruns are byte-identical");
  const std::string cli = CLRLAB_CLI_PATH;
  const std::string out1 = "acceptance_run1.json";
  const std::string out2 = "acceptance_run2.json";
  const std::string base = "\"" + cli +
                           "\" verify all --seed 42 --no-timestamp --format json "
                           "--output ";
  const int rc1 = std::system((base + out1).c_str());
  const int rc2 = std::system((base + out2).c_str());
  c.require(rc1 == 0 && rc2 == 0, "CLI exited nonzero");
  const std::string a = slurp(out1);
  const std::string b = slurp(out2);
  c.require(!a.empty(), "empty report");
  c.require(a == b, "reports differ between reruns");
  std::remove(out1.c_str());
  std::remove(out2.c_str());
  c.finish(120.0);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  return failures == 0 ? 0 : 1;
}
