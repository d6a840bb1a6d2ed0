#include <doctest.h>

#include <cmath>
#include <sstream>

#include "clrlab/serialize.hpp"
#include "clrlab/verify.hpp"

using namespace clrlab;

TEST_CASE("sample_contraction spectra stay in [0, 1]") {
  const Sampler sampler{300};
  for (int t = 0; t < 100; ++t) {
    Rng rng = sampler.rng_for(static_cast<std::uint64_t>(t));
    const int n = 2 + rng.uniform_int(7);
    const int kind = t % 4;
    const Matrix delta = sample_contraction(n, rng, kind);
    const auto dec = eigh(delta);
    CHECK(dec.eigenvalues.minCoeff() >= -1e-12);
    CHECK(dec.eigenvalues.maxCoeff() <= 1.0 + 1e-12);
  }
  // forced edges
  Rng rng(1);
  CHECK(sample_contraction(4, rng, 1).norm() == 0.0);
  CHECK((sample_contraction(4, rng, 2) - Matrix::Identity(4, 4)).norm() <= 1e-14);
  const Matrix r1 = sample_contraction(5, rng, 3);
  const auto dec1 = eigh(r1);
  int nonzero = 0;
  for (Eigen::Index i = 0; i < 5; ++i)
    if (dec1.eigenvalues(i) > 1e-10) ++nonzero;
  CHECK(nonzero == 1);
}

TEST_CASE("sample_gamma respects 0 <= gamma <= A") {
  Rng rng(42);
  const Matrix a = random_psd(6, rng, 2.0);
  const Matrix sqrt_a = matrix_sqrt(a);
  // delta = I gives gamma = A, delta = 0 gives 0
  CHECK((sample_gamma(sqrt_a, rng, 2) - a).norm() <= 1e-10 * a.norm());
  CHECK(sample_gamma(sqrt_a, rng, 1).norm() == 0.0);
  const Matrix ainvhalf = inverse_sqrt_on_range(a);
  for (int t = 0; t < 20; ++t) {
    const Matrix g = sample_gamma(sqrt_a, rng, 0);
    Matrix pinched = ainvhalf * g * ainvhalf;
    pinched = 0.5 * (pinched + Matrix(pinched.adjoint()));
    const auto dec = eigh(pinched);
    CHECK(dec.eigenvalues.minCoeff() >= -1e-9);
    CHECK(dec.eigenvalues.maxCoeff() <= 1.0 + 1e-9);
  }
}

TEST_CASE("check_variational: projector attains the positive-part trace") {
  Rng rng(7);
  Matrix m = Matrix::Zero(3, 3);
  m(0, 0) = 3.0;
  m(1, 1) = 1.0;
  m(2, 2) = -2.0;
  const auto rep = check_variational(m, 2.0, rng);
  CHECK(rep.pass);
  CHECK(rep.lhs == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rep.rhs == doctest::Approx(1.0).epsilon(1e-12));

  // M <= mu I: both sides vanish
  Matrix low = Matrix::Zero(3, 3);
  low(0, 0) = 1.0;
  low(2, 2) = -1.0;
  const auto rep0 = check_variational(low, 2.0, rng);
  CHECK(rep0.pass);
  CHECK(rep0.lhs == 0.0);
}

TEST_CASE("check_rumin extreme trial states pass") {
  const auto grid = make_grid(1, 8, 2.0 * constants::pi);
  Rng rng(11);
  std::vector<double> vals;
  for (int k = 0; k < 8; ++k) vals.push_back(rng.log_uniform(0.2, 4.0));
  const auto a = WeightedFunction::scalar(grid.momentum_space, vals);
  CHECK(check_rumin(grid, a, 2.0, rng, 1).pass);  // gamma = 0
  CHECK(check_rumin(grid, a, 2.0, rng, 2).pass);  // gamma = A, the full operator
  CHECK(check_rumin(grid, a, 1.5, rng, 3).pass);  // rank-one
  CHECK_THROWS(check_rumin(grid, a, 1.0, rng));
}

TEST_CASE("check_theorem_main: rank-one closed form") {
  const auto grid = make_grid(1, 6, 2.0 * constants::pi);
  const double v = grid.momentum_space.weight(0);
  const double w = grid.position_space.weight(0);
  const double alpha = 3.0, beta = 2.0, p = 2.0;
  std::vector<double> av(6, 0.0), bv(6, 0.0);
  av[2] = alpha;
  bv[4] = beta;
  const auto a = WeightedFunction::scalar(grid.momentum_space, av);
  const auto b = WeightedFunction::scalar(grid.position_space, bv);
  // M = sqrt(a) b sqrt(a) is rank one with eigenvalue alpha beta v w
  const double top = alpha * beta * v * w;
  for (double mu : {0.25 * top, 0.9 * top, 2.0 * top}) {
    const auto rep = check_theorem_main(grid, a, b, p, mu);
    CHECK(rep.pass);
    CHECK(rep.lhs == doctest::Approx(std::max(top - mu, 0.0)).epsilon(1e-10));
    const double rhs_hand = std::pow(mu, 1.0 - p) * constants::theorem_main_constant(p, 0) *
                            std::pow(alpha, p) * v * std::pow(beta, p) * w;
    CHECK(rep.rhs == doctest::Approx(rhs_hand).epsilon(1e-12));
  }
  // b = 0: lhs vanishes
  const auto zero = WeightedFunction::scalar(grid.position_space, std::vector<double>(6, 0.0));
  const auto rep0 = check_theorem_main(grid, a, zero, p, 1.0);
  CHECK(rep0.pass);
  CHECK(rep0.lhs == 0.0);
  CHECK_THROWS(check_theorem_main(grid, a, b, 0.9, 1.0));
  CHECK_THROWS(check_theorem_main(grid, a, b, 2.0, 0.0));
}

TEST_CASE("check_corollary_cwikel: zero and rank-one inputs") {
  const auto grid = make_grid(1, 5, 2.0 * constants::pi);
  const double v = grid.momentum_space.weight(0);
  const double w = grid.position_space.weight(0);
  std::vector<double> fv(5, 0.0), gv(5, 0.0);
  fv[1] = 1.5;
  gv[3] = 0.8;
  const auto f = WeightedFunction::scalar(grid.position_space, fv);
  const auto g = WeightedFunction::scalar(grid.momentum_space, gv);
  const auto rep = check_corollary_cwikel(grid, f, g, 3.0);
  CHECK(rep.pass);
  // K = f Phi* g has the single singular value f g sqrt(v w)
  CHECK(rep.lhs == doctest::Approx(std::pow(1.5 * 0.8 * std::sqrt(v * w), 3.0)).epsilon(1e-10));

  const auto zero = WeightedFunction::scalar(grid.position_space, std::vector<double>(5, 0.0));
  const auto rep0 = check_corollary_cwikel(grid, zero, g, 3.0);
  CHECK(rep0.pass);
  CHECK(rep0.lhs == 0.0);
  CHECK_THROWS(check_corollary_cwikel(grid, f, g, 2.0));
}

TEST_CASE("check_cwikelop: commuting diagonal blocks reduce to scalar problems") {
  const auto grid = make_grid(1, 6, 2.0 * constants::pi);
  Rng rng(77);
  // f, g block-diagonal in a fixed basis: two decoupled scalar channels
  std::vector<Matrix> fb, gb;
  std::vector<double> f1, f2, g1, g2;
  for (int i = 0; i < 6; ++i) {
    Matrix bf = Matrix::Zero(2, 2), bg = Matrix::Zero(2, 2);
    f1.push_back(rng.log_uniform(0.1, 3.0));
    f2.push_back(rng.log_uniform(0.1, 3.0));
    g1.push_back(rng.log_uniform(0.1, 3.0));
    g2.push_back(rng.log_uniform(0.1, 3.0));
    bf(0, 0) = f1.back();
    bf(1, 1) = f2.back();
    bg(0, 0) = g1.back();
    bg(1, 1) = g2.back();
    fb.push_back(bf);
    gb.push_back(bg);
  }
  const WeightedFunction f(grid.position_space, fb), g(grid.momentum_space, gb);
  const auto rep = check_cwikelop(grid, f, g, 3.0, rng);
  CHECK(rep.pass);
  // oracle: merge the singular values of the two scalar channels
  const Matrix phi = dft(grid).phi;
  auto channel = [&](const std::vector<double>& fc, const std::vector<double>& gc) {
    Eigen::VectorXcd df(6), dg(6);
    for (int i = 0; i < 6; ++i) {
      df(i) = fc[static_cast<std::size_t>(i)];
      dg(i) = gc[static_cast<std::size_t>(i)];
    }
    return Matrix(df.asDiagonal() * phi.adjoint() * dg.asDiagonal());
  };
  std::vector<double> merged;
  const auto sv1 = singular_values(channel(f1, g1));
  const auto sv2 = singular_values(channel(f2, g2));
  for (double s : sv1.values()) merged.push_back(s);
  for (double s : sv2.values()) merged.push_back(s);
  CHECK(rep.lhs ==
        doctest::Approx(std::pow(weak_schatten_norm(SingularSpectrum(merged), 3.0), 3.0))
            .epsilon(1e-9));

  // non-PSD blocks rejected
  std::vector<Matrix> bad = fb;
  bad[0](0, 0) = -1.0;
  CHECK_THROWS(check_cwikelop(grid, WeightedFunction(grid.position_space, bad), g, 3.0, rng));
}

TEST_CASE("check_pointwise_young edge inputs") {
  const FiniteMeasureSpace sp({1.0, 2.0, 0.5});
  const std::vector<double> zero(3, 0.0);
  CHECK(check_pointwise_young(sp, zero, zero, 1.0, 1.0, 2.0).pass);
  CHECK(check_pointwise_young(sp, {1.0, 2.0, 0.0}, zero, 0.7, 1.3, 2.5).pass);
  CHECK(check_pointwise_young(sp, zero, {1.0, 0.0, 4.0}, 0.7, 1.3, 1.5).pass);
  // the optimizer rho = r*(b) saturates the integral bound
  const std::vector<double> b{2.0, 0.5, 1.0};
  const double mu = 0.8, k = 1.2, p = 3.0;
  const double pprime = p / (p - 1.0);
  std::vector<double> rstar;
  for (double bi : b) rstar.push_back(std::pow(bi / (mu * k * pprime), p - 1.0));
  const auto rep = check_pointwise_young(sp, b, rstar, mu, k, p);
  CHECK(rep.pass);
  CHECK(rep.ratio == doctest::Approx(1.0).epsilon(1e-10));
  CHECK_THROWS(check_pointwise_young(sp, b, rstar, mu, k, 1.0));
  CHECK_THROWS(check_pointwise_young(sp, {1.0, -1.0, 0.0}, zero, mu, k, p));
}

TEST_CASE("check_birman_schwinger: two-point hand example") {
  const FiniteMeasureSpace sp({1.0, 1.0});
  const HermitianOperator t(sp, Matrix(Matrix::Identity(2, 2)));
  const auto v = WeightedFunction::scalar(sp, std::vector<double>{-2.0, -0.5});
  const auto res = check_birman_schwinger(t, v);
  CHECK_FALSE(res.degenerate);
  CHECK(res.report.pass);
  CHECK(res.report.lhs == doctest::Approx(1.0));  // N(0, T - V_-)
  CHECK(res.report.rhs == doctest::Approx(1.0));  // n(1, BS)
  CHECK(res.report.detail.find("N(0,T+V)=1") != std::string::npos);

  // V >= 0: nothing binds
  const auto vp = WeightedFunction::scalar(sp, std::vector<double>{1.0, 0.5});
  const auto resp = check_birman_schwinger(t, vp);
  CHECK(resp.report.pass);
  CHECK(resp.report.lhs == 0.0);
  CHECK(resp.report.rhs == 0.0);
}

TEST_CASE("check_birman_schwinger: exact equality on random draws") {
  const auto grid = make_grid(1, 8, 2.0 * constants::pi);
  const Sampler sampler{909};
  int checked = 0;
  for (int t = 0; t < 60 && checked < 40; ++t) {
    Rng rng = sampler.rng_for(static_cast<std::uint64_t>(t));
    std::vector<double> sym;
    for (int k = 0; k < 8; ++k) sym.push_back(rng.log_uniform(0.2, 5.0));
    const HermitianOperator top = multiplier(grid, WeightedFunction::scalar(grid.momentum_space, sym));
    std::vector<double> vv;
    for (int i = 0; i < 8; ++i) vv.push_back(rng.uniform(-8.0, 2.0));
    const auto v = WeightedFunction::scalar(grid.position_space, vv);
    const auto res = check_birman_schwinger(top, v);
    if (res.degenerate) continue;
    ++checked;
    CHECK(res.report.pass);
    CHECK(res.report.lhs == res.report.rhs);
  }
  CHECK(checked >= 40);
}

TEST_CASE("extract_A closed forms") {
  // T = c I on a unit-weight space: A = c^{-nu/2}
  const FiniteMeasureSpace sp({1.0, 1.0, 1.0, 1.0});
  for (double c : {0.5, 1.0, 3.0}) {
    const HermitianOperator t(sp, Matrix(c * Matrix::Identity(4, 4)));
    for (double nu : {2.5, 3.0, 4.0})
      CHECK(extract_A(t, nu) == doctest::Approx(std::pow(c, -0.5 * nu)).epsilon(1e-12));
  }

  // torus multiplier: A = max_E E^{-(nu-2)/2} sum_{0 < a_k <= E} v_k / a_k
  const auto grid = make_grid(1, 8, 2.0 * constants::pi);
  Rng rng(23);
  std::vector<double> sym;
  for (int k = 0; k < 8; ++k) sym.push_back(rng.log_uniform(0.1, 6.0));
  const HermitianOperator t = multiplier(grid, WeightedFunction::scalar(grid.momentum_space, sym));
  const double nu = 3.0;
  double best = 0.0;
  for (double e : sym) {
    double rho = 0.0;
    for (double a : sym)
      if (a <= e * (1.0 + 1e-14)) rho += grid.momentum_space.weight(0) / a;
    best = std::max(best, std::pow(e, -0.5 * (nu - 2.0)) * rho);
  }
  CHECK(extract_A(t, nu) == doctest::Approx(best).epsilon(1e-12));

  // doubling T scales A by 2^{-nu/2}
  const HermitianOperator t2(grid.position_space, Matrix(2.0 * t.matrix()));
  CHECK(extract_A(t2, nu) == doctest::Approx(std::pow(2.0, -0.5 * nu) * extract_A(t, nu)).epsilon(1e-11));
  CHECK_THROWS(extract_A(t, 2.0));
}

TEST_CASE("check_clr edge cases") {
  const auto grid = make_grid(1, 8, 2.0 * constants::pi);
  const HermitianOperator t = multiplier(grid, fractional_symbol(grid, 0.5, ZeroModePolicy::Exclude));

  // V >= 0: no bound states, trivially pass
  const auto vp = WeightedFunction::scalar(grid.position_space,
                                           std::vector<double>{1, 0, 2, 0, 1, 0, 0, 3});
  const auto resp = check_clr(t, vp, 3.0);
  CHECK(resp.report.pass);
  CHECK(resp.report.lhs == 0.0);

  // a single deep well binds at least one state and the bound still holds
  std::vector<double> deep(8, 0.0);
  deep[3] = -60.0;
  const auto resd = check_clr(t, WeightedFunction::scalar(grid.position_space, deep), 3.0);
  CHECK(resd.report.pass);
  CHECK(resd.report.lhs >= 1.0);

  CHECK_THROWS(check_clr(t, vp, 2.0));
  // T with negative spectrum rejected
  const FiniteMeasureSpace sp({1.0, 1.0});
  Matrix neg = Matrix::Zero(2, 2);
  neg(0, 0) = -1.0;
  neg(1, 1) = 1.0;
  CHECK_THROWS(check_clr(HermitianOperator(sp, neg),
                         WeightedFunction::scalar(sp, std::vector<double>{0.0, 0.0}), 3.0));
}

TEST_CASE("check_lemma_ass: T = c I is exactly tight") {
  const FiniteMeasureSpace sp({1.0, 1.0, 1.0});
  for (double c : {0.5, 2.0}) {
    const HermitianOperator t(sp, Matrix(c * Matrix::Identity(3, 3)));
    const auto rep = check_lemma_ass(t, 4.0);
    CHECK(rep.pass);
    // B' collapses to c^{-nu/2} and the projection bound is saturated at E = c
    CHECK(rep.lhs == doctest::Approx(1.0).epsilon(1e-10));
  }
  // extra grid points can only keep the bound valid
  const auto grid = make_grid(1, 8, 2.0 * constants::pi);
  Rng rng(5);
  std::vector<double> sym;
  for (int k = 0; k < 8; ++k) sym.push_back(rng.log_uniform(0.2, 5.0));
  const HermitianOperator t = multiplier(grid, WeightedFunction::scalar(grid.momentum_space, sym));
  CHECK(check_lemma_ass(t, 3.0, 1e-9, {0.01, 0.1, 1.0, 10.0}, {0.3, 1.7, 4.2}).pass);
  CHECK_THROWS(check_lemma_ass(t, 2.0));
}

TEST_CASE("check_diamagnetic holds for random and constant fields") {
  const auto grid = make_grid(2, 4, 2.0 * constants::pi);
  Rng rng(61);
  MagneticField field = MagneticField::zero(grid);
  for (auto& th : field.theta) th = rng.uniform(-constants::pi, constants::pi);
  const auto rep = check_diamagnetic(grid, field, {0.05, 0.5, 5.0});
  CHECK(rep.pass);
  CHECK(rep.lhs <= 1e-10);
  // zero field: equality, excess ~ 0
  CHECK(check_diamagnetic(grid, MagneticField::zero(grid), {1.0}).pass);
}

TEST_CASE("check_sobolev_rank_one: single Fourier mode and scaling invariance") {
  const auto grid = make_grid(1, 8, 2.0 * constants::pi);
  const double s = 0.25;
  const Matrix phi = dft(grid).phi;
  // psi = a nonzero Fourier mode: the quotient is |p|^{2s} vs the weak-norm bound
  int mode = 0;
  while (mode == grid.zero_mode()) ++mode;
  Eigen::VectorXcd psi = phi.row(mode).adjoint();
  const auto rep = check_sobolev_rank_one(grid, psi, s);
  CHECK(rep.pass);
  CHECK(rep.lhs == doctest::Approx(std::pow(grid.momentum_abs(mode), 2.0 * s)).epsilon(1e-10));

  // the quotient ratio is invariant under psi -> c psi
  Rng rng(31);
  Eigen::VectorXcd r(grid.size());
  for (int i = 0; i < grid.size(); ++i) r(i) = rng.cnormal();
  const auto rep1 = check_sobolev_rank_one(grid, r, s);
  const auto rep2 = check_sobolev_rank_one(grid, Eigen::VectorXcd(37.5 * r), s);
  CHECK(rep1.pass);
  CHECK(rep2.pass);
  CHECK(rep1.ratio == doctest::Approx(rep2.ratio).epsilon(1e-9));

  CHECK_THROWS(check_sobolev_rank_one(grid, psi, 0.5));  // needs 2s < d
  CHECK_THROWS(check_sobolev_rank_one(grid, Eigen::VectorXcd(Eigen::VectorXcd::Zero(8)), s));
}

TEST_CASE("check_phase_space: zero, optimizer and validation") {
  const std::vector<double> bounds{0.0, 1.0, 2.0, 3.0};
  const auto rep0 = check_phase_space(1.0, 3, bounds, {0.0, 0.0, 0.0});
  CHECK(rep0.pass);
  CHECK(rep0.lhs == 0.0);

  // bathtub optimizer u = chi_{r < R} attains ratio 1
  for (int cut : {1, 2, 3}) {
    std::vector<double> u(3, 0.0);
    for (int j = 0; j < cut; ++j) u[static_cast<std::size_t>(j)] = 1.0;
    const auto rep = check_phase_space(1.0, 3, bounds, u);
    CHECK(rep.pass);
    CHECK(rep.ratio == doctest::Approx(1.0).epsilon(1e-12));
  }

  CHECK_THROWS(check_phase_space(1.0, 3, bounds, {0.5, 1.5, 0.5}));  // u > 1
  CHECK_THROWS(check_phase_space(2.0, 3, bounds, {1.0, 1.0, 1.0}));  // 2s >= d
  CHECK_THROWS(check_phase_space(1.0, 3, bounds, {1.0, 1.0}));       // size mismatch
}

TEST_CASE("run_suite is deterministic and rejects unknown names") {
  RunOptions opt;
  opt.seed = 99;
  opt.trials = 12;
  const auto a = run_suite("equiv_sandwich", opt);
  const auto b = run_suite("equiv_sandwich", opt);
  RunReport ra, rb;
  ra.master_seed = rb.master_seed = opt.seed;
  ra.suites.push_back(a);
  rb.suites.push_back(b);
  std::ostringstream sa, sb;
  write_json(sa, ra);
  write_json(sb, rb);
  CHECK(sa.str() == sb.str());
  CHECK(a.violations == 0);

  CHECK_THROWS_WITH_AS(run_suite("rumin_typo", opt), doctest::Contains("unknown suite"),
                       std::invalid_argument);
  RunOptions bad = opt;
  bad.p = 1.0;
  CHECK_THROWS_AS(run_suite("rumin", bad), std::invalid_argument);
}

TEST_CASE("every named suite runs clean for a short burst") {
  RunOptions opt;
  opt.seed = 4242;
  opt.trials = 6;
  for (const auto& name : suite_names()) {
    const auto result = run_suite(name, opt);
    CHECK(result.violations == 0);
    CHECK(static_cast<int>(result.trials.size()) == opt.trials);
  }
}
