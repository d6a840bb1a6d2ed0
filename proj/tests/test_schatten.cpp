#include <doctest.h>

#include "clrlab/sampling.hpp"
#include "clrlab/schatten.hpp"
#include "oracles.hpp"

using namespace clrlab;

TEST_CASE("singular spectrum sorts and validates") {
  const SingularSpectrum s({1.0, 3.0, 2.0});
  CHECK(s.values() == std::vector<double>{3.0, 2.0, 1.0});
  CHECK_THROWS(SingularSpectrum({1.0, -0.5}));
}

TEST_CASE("counting examples") {
  const SingularSpectrum s({2.0, 1.0});
  CHECK(counting(s, 1.0) == 1);
  CHECK(counting(s, 0.5) == 2);
  CHECK(counting(s, 3.0) == 0);
  CHECK_THROWS(counting(s, 0.0));
  CHECK_THROWS(counting(s, -1.0));
}

TEST_CASE("weak_schatten_norm examples") {
  const SingularSpectrum one({1.0});
  for (double q : {0.5, 1.0, 2.0, 4.0}) CHECK(weak_schatten_norm(one, q) == doctest::Approx(1.0));

  // each j * s_j^4 equals 1
  const SingularSpectrum balanced({1.0, std::pow(2.0, -0.25), std::pow(3.0, -0.25)});
  CHECK(weak_schatten_norm(balanced, 4.0) == doctest::Approx(1.0).epsilon(1e-14));

  const SingularSpectrum two({2.0, 1.0});
  CHECK(weak_schatten_norm(two, 2.0) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("weak_schatten_norm matches dense kappa-scan") {
  const Sampler sampler{11};
  for (int t = 0; t < 100; ++t) {
    Rng rng = sampler.rng_for(static_cast<std::uint64_t>(t));
    std::vector<double> vals;
    const int rank = 1 + rng.uniform_int(10);
    for (int r = 0; r < rank; ++r) vals.push_back(rng.log_uniform(0.01, 50.0));
    const SingularSpectrum s(vals);
    const double q = rng.log_uniform(0.3, 8.0);
    CHECK(weak_schatten_norm(s, q) ==
          doctest::Approx(oracle::weak_schatten_scan(s, q)).epsilon(1e-9));
  }
}

TEST_CASE("equiv_quasinorm examples") {
  // rank one (1), q = 4: sup_mu mu (1 - mu) = 1/4 at mu = 1/2
  const SingularSpectrum one({1.0});
  CHECK(equiv_quasinorm(one, 4.0) == doctest::Approx(std::pow(0.25, 0.25)).epsilon(1e-14));
  CHECK(equiv_quasinorm(SingularSpectrum({0.0, 0.0}), 3.0) == 0.0);
  CHECK_THROWS(equiv_quasinorm(one, 2.0));
  CHECK_THROWS(equiv_quasinorm(one, 1.5));

  // random 6-value spectrum vs the 10^6-point mu-scan
  Rng rng(905);
  std::vector<double> vals;
  for (int r = 0; r < 6; ++r) vals.push_back(rng.log_uniform(0.05, 5.0));
  const SingularSpectrum s(vals);
  CHECK(equiv_quasinorm(s, 3.0) ==
        doctest::Approx(oracle::equiv_quasinorm_scan(s, 3.0)).epsilon(1e-6));
}

TEST_CASE("homogeneity of both quasi-norms") {
  const Sampler sampler{5};
  for (int t = 0; t < 25; ++t) {
    Rng rng = sampler.rng_for(static_cast<std::uint64_t>(t));
    std::vector<double> vals;
    const int rank = 1 + rng.uniform_int(8);
    for (int r = 0; r < rank; ++r) vals.push_back(rng.log_uniform(0.1, 10.0));
    const double c = rng.log_uniform(0.01, 100.0);
    std::vector<double> scaled = vals;
    for (auto& v : scaled) v *= c;
    const SingularSpectrum s(vals), cs(scaled);
    const double q = 2.0 + rng.log_uniform(0.3, 6.0);
    CHECK(weak_schatten_norm(cs, q) == doctest::Approx(c * weak_schatten_norm(s, q)).epsilon(1e-12));
    CHECK(equiv_quasinorm(cs, q) == doctest::Approx(c * equiv_quasinorm(s, q)).epsilon(1e-12));
  }
}

TEST_CASE("equiv sandwich examples and random spectra") {
  // rank one, q = 4: 2^{-1/2} <= 1 <= 1
  auto rep = check_equiv_sandwich(SingularSpectrum({1.0}), 4.0);
  CHECK(rep.pass);
  CHECK(rep.lhs == doctest::Approx(std::pow(0.5, 0.5)).epsilon(1e-12));

  CHECK(check_equiv_sandwich(SingularSpectrum({0.0}), 3.0).pass);

  const Sampler sampler{31};
  int trial = 0;
  for (double q : {2.5, 3.0, 4.0, 6.0}) {
    for (int t = 0; t < 100; ++t) {
      Rng rng = sampler.rng_for(static_cast<std::uint64_t>(trial++));
      std::vector<double> vals;
      const int rank = 1 + rng.uniform_int(12);
      for (int r = 0; r < rank; ++r) vals.push_back(rng.log_uniform(0.01, 100.0));
      CHECK(check_equiv_sandwich(SingularSpectrum(vals), q).pass);
    }
  }
}
