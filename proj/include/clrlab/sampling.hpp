#pragma once

// Deterministic sampling.  Every trial draws from its own splitmix64 stream
// derived from (master seed, trial index), so trials are order-independent
// and reruns reproduce reports bit-for-bit.

#include <cmath>
#include <cstdint>
#include <numbers>

#include "clrlab/linalg.hpp"

namespace clrlab {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {
    // burn a few outputs so nearby seeds decorrelate
    for (int i = 0; i < 4; ++i) splitmix64(state_);
  }

  std::uint64_t next_u64() { return splitmix64(state_); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  double log_uniform(double a, double b) { return a * std::exp(uniform() * std::log(b / a)); }

  int uniform_int(int n) { return static_cast<int>(next_u64() % static_cast<std::uint64_t>(n)); }

  double normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u1 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    cached_ = r * std::sin(a);
    have_cached_ = true;
    return r * std::cos(a);
  }

  Complex cnormal() { return Complex(normal(), normal()) / std::sqrt(2.0); }

 private:
  std::uint64_t state_;
  bool have_cached_ = false;
  double cached_ = 0.0;
};

struct Sampler {
  std::uint64_t master_seed = 1;

  std::uint64_t trial_seed(std::uint64_t trial) const {
    std::uint64_t s = master_seed;
    splitmix64(s);
    s ^= 0x6a09e667f3bcc909ULL + trial * 0x3c6ef372fe94f82bULL;
    splitmix64(s);
    return s;
  }

  Rng rng_for(std::uint64_t trial) const { return Rng(trial_seed(trial)); }
};

/// Haar-ish random unitary: Gram-Schmidt on complex Gaussian columns.
inline Matrix random_unitary(int n, Rng& rng) {
  Matrix q(n, n);
  for (int j = 0; j < n; ++j) {
    Eigen::VectorXcd v(n);
    for (int i = 0; i < n; ++i) v(i) = rng.cnormal();
    for (int k = 0; k < j; ++k) v -= q.col(k).dot(v) * q.col(k);
    const double nrm = v.norm();
    if (nrm < 1e-12) {
      --j;
      continue;
    }
    q.col(j) = v / nrm;
  }
  return q;
}

inline Matrix random_hermitian(int n, Rng& rng, double scale = 1.0) {
  Matrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = rng.cnormal();
  Matrix h = 0.5 * scale * (a + Matrix(a.adjoint()));
  return h;
}

inline Matrix random_psd(int n, Rng& rng, double scale = 1.0) {
  const Matrix q = random_unitary(n, rng);
  Eigen::VectorXd ev(n);
  for (int i = 0; i < n; ++i) ev(i) = scale * rng.uniform();
  Matrix out = q * ev.asDiagonal() * q.adjoint();
  return 0.5 * (out + Matrix(out.adjoint()));
}

/// Random contraction 0 <= delta <= 1: random frame, eigenvalues uniform on
/// [0, 1].  kind: 0 generic, 1 zero, 2 identity, 3 rank-one projector.
inline Matrix sample_contraction(int n, Rng& rng, int kind = 0) {
  switch (kind) {
    case 1:
      return Matrix::Zero(n, n);
    case 2:
      return Matrix::Identity(n, n);
    case 3: {
      const Matrix q = random_unitary(n, rng);
      Matrix out = q.col(0) * q.col(0).adjoint();
      return 0.5 * (out + Matrix(out.adjoint()));
    }
    default:
      return random_psd(n, rng, 1.0);
  }
}

}  // namespace clrlab
