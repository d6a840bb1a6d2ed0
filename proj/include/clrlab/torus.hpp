#pragma once

// Discrete d-dimensional torus: paired position/momentum measure spaces, the
// DFT unitary with unit kernel bound, Fourier multipliers and magnetic
// (Peierls) lattice Laplacians.
//
// Normalization: position cells carry weight (L/n)^d, momentum modes carry
// weight L^{-d} (cell volume (2 pi / L)^d divided by (2 pi)^d), so that the
// momentum measure realizes dp/(2 pi)^d and the DFT kernel has modulus one.

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "clrlab/operator.hpp"

namespace clrlab {

struct TorusGrid {
  int d = 1;
  int n = 1;
  double L = 1.0;
  FiniteMeasureSpace position_space;
  FiniteMeasureSpace momentum_space;
  std::vector<std::vector<double>> positions;  // x_i, d components each
  std::vector<std::vector<double>> momenta;    // p_k = 2 pi k / L, centered k
  std::vector<std::vector<int>> kindex;        // integer momentum multi-indices

  int size() const { return static_cast<int>(positions.size()); }
  double spacing() const { return L / n; }

  /// Index of the p = 0 mode.
  int zero_mode() const {
    for (int k = 0; k < size(); ++k) {
      bool all_zero = true;
      for (int j = 0; j < d; ++j)
        if (kindex[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] != 0) all_zero = false;
      if (all_zero) return k;
    }
    throw std::logic_error("TorusGrid: no zero mode");
  }

  double momentum_abs(int k) const {
    double s = 0.0;
    for (double c : momenta[static_cast<std::size_t>(k)]) s += c * c;
    return std::sqrt(s);
  }
};

inline TorusGrid make_grid(int d, int n, double L, int cap = 512) {
  if (d < 1 || n < 1 || !(L > 0.0)) throw std::invalid_argument("make_grid: need d >= 1, n >= 1, L > 0");
  double total = 1.0;
  for (int j = 0; j < d; ++j) total *= n;
  if (total > cap) {
    std::ostringstream os;
    os << "make_grid: n^d = " << total << " exceeds cap " << cap;
    throw std::invalid_argument(os.str());
  }
  const int num = static_cast<int>(total);
  TorusGrid g;
  g.d = d;
  g.n = n;
  g.L = L;
  const double wpos = std::pow(L / n, d);
  const double wmom = std::pow(L, -d);
  g.position_space = FiniteMeasureSpace(std::vector<double>(static_cast<std::size_t>(num), wpos));
  g.momentum_space = FiniteMeasureSpace(std::vector<double>(static_cast<std::size_t>(num), wmom));

  const int klo = -(n / 2);
  const double h = L / n;
  const double two_pi = 2.0 * std::numbers::pi;
  // Lexicographic multi-index enumeration, last axis fastest; momentum
  // components ascend from -floor(n/2) to ceil(n/2)-1 along each axis.
  for (int idx = 0; idx < num; ++idx) {
    std::vector<int> mi(static_cast<std::size_t>(d));
    int rem = idx;
    for (int j = d - 1; j >= 0; --j) {
      mi[static_cast<std::size_t>(j)] = rem % n;
      rem /= n;
    }
    std::vector<double> x(static_cast<std::size_t>(d));
    std::vector<double> p(static_cast<std::size_t>(d));
    std::vector<int> kk(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
      x[static_cast<std::size_t>(j)] = mi[static_cast<std::size_t>(j)] * h;
      kk[static_cast<std::size_t>(j)] = klo + mi[static_cast<std::size_t>(j)];
      p[static_cast<std::size_t>(j)] = two_pi * kk[static_cast<std::size_t>(j)] / L;
    }
    g.positions.push_back(std::move(x));
    g.momenta.push_back(std::move(p));
    g.kindex.push_back(std::move(kk));
  }
  return g;
}

struct DftResult {
  Matrix phi;           // momentum row index, position column index
  double kernel_bound;  // C = max |kernel|, equals 1 for the torus DFT
};

/// Phi_{ki} = sqrt(v_k w_i) e^{-i p_k . x_i} in orthonormal coordinates.
inline DftResult dft(const TorusGrid& g) {
  const int num = g.size();
  DftResult out;
  out.phi.resize(num, num);
  double bound = 0.0;
  for (int k = 0; k < num; ++k) {
    const double vk = g.momentum_space.weight(k);
    for (int i = 0; i < num; ++i) {
      const double wi = g.position_space.weight(i);
      double phase = 0.0;
      for (int j = 0; j < g.d; ++j)
        phase += g.momenta[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] *
                 g.positions[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      out.phi(k, i) = std::sqrt(vk * wi) * std::exp(Complex(0.0, -phase));
      bound = std::max(bound, std::abs(out.phi(k, i)) / std::sqrt(vk * wi));
    }
  }
  out.kernel_bound = bound;
  return out;
}

/// a(-i grad) = Phi* diag(a) Phi on position space; requires a real symbol.
inline HermitianOperator multiplier(const TorusGrid& g, const WeightedFunction& symbol) {
  if (symbol.block_dim() != 1 || !symbol.is_real())
    throw std::invalid_argument("multiplier: symbol must be real scalar");
  if (symbol.size() != g.size()) throw std::invalid_argument("multiplier: symbol not on momentum space");
  const Matrix phi = dft(g).phi;
  Eigen::VectorXd diag(g.size());
  for (int k = 0; k < g.size(); ++k) diag(k) = symbol.real_value(k);
  Matrix m = phi.adjoint() * diag.asDiagonal() * phi;
  m = 0.5 * (m + Matrix(m.adjoint()));
  return HermitianOperator(g.position_space, std::move(m));
}

enum class ZeroModePolicy { Floor, Exclude };

/// Symbol |p|^{2s}; the p = 0 value is eps (Floor) or 0, marking the mode for
/// subspace exclusion so downstream calculus works on the mean-zero subspace.
inline WeightedFunction fractional_symbol(const TorusGrid& g, double s, ZeroModePolicy policy,
                                          double eps = 1e-6) {
  if (!(s > 0.0)) throw std::invalid_argument("fractional_symbol: s must be positive");
  if (policy == ZeroModePolicy::Floor && !(eps > 0.0))
    throw std::invalid_argument("fractional_symbol: floor policy needs eps > 0");
  std::vector<double> vals(static_cast<std::size_t>(g.size()));
  for (int k = 0; k < g.size(); ++k) {
    const double ap = g.momentum_abs(k);
    if (ap == 0.0)
      vals[static_cast<std::size_t>(k)] = (policy == ZeroModePolicy::Floor) ? eps : 0.0;
    else
      vals[static_cast<std::size_t>(k)] = std::pow(ap, 2.0 * s);
  }
  return WeightedFunction::scalar(g.momentum_space, vals);
}

/// Reciprocal symbol; zero entries stay zero (excluded-mode convention).
inline WeightedFunction reciprocal_symbol(const WeightedFunction& symbol) {
  std::vector<double> vals(static_cast<std::size_t>(symbol.size()));
  for (int k = 0; k < symbol.size(); ++k) {
    const double v = symbol.real_value(k);
    vals[static_cast<std::size_t>(k)] = v != 0.0 ? 1.0 / v : 0.0;
  }
  return WeightedFunction::scalar(symbol.space(), vals);
}

inline WeightedFunction pow_symbol(const WeightedFunction& symbol, double expo) {
  std::vector<double> vals(static_cast<std::size_t>(symbol.size()));
  for (int k = 0; k < symbol.size(); ++k) {
    const double v = symbol.real_value(k);
    vals[static_cast<std::size_t>(k)] = v > 0.0 ? std::pow(v, expo) : 0.0;
  }
  return WeightedFunction::scalar(symbol.space(), vals);
}

/// Peierls phases: one angle per directed forward edge (site, axis); the
/// reverse edge carries the opposite phase.
struct MagneticField {
  int d = 1;
  std::vector<double> theta;  // size = sites * d, theta[site * d + axis]

  static MagneticField zero(const TorusGrid& g) {
    MagneticField b;
    b.d = g.d;
    b.theta.assign(static_cast<std::size_t>(g.size()) * g.d, 0.0);
    return b;
  }

  /// Build from phases given for both edge directions; rejects phase pairs
  /// violating theta(reverse) = -theta(edge).
  static MagneticField from_edge_phases(const TorusGrid& g, const std::vector<double>& forward,
                                        const std::vector<double>& backward, double tol = 1e-12) {
    if (forward.size() != backward.size() ||
        forward.size() != static_cast<std::size_t>(g.size()) * g.d)
      throw std::invalid_argument("MagneticField: wrong phase count");
    for (std::size_t e = 0; e < forward.size(); ++e)
      if (std::abs(forward[e] + backward[e]) > tol)
        throw std::invalid_argument("MagneticField: phase antisymmetry violated");
    MagneticField b;
    b.d = g.d;
    b.theta = forward;
    return b;
  }

  double phase(int site, int axis) const {
    return theta[static_cast<std::size_t>(site) * d + axis];
  }
};

namespace detail {
inline int neighbor_index(const TorusGrid& g, int site, int axis, int step) {
  // positions enumerate lexicographically with the last axis fastest
  int stride = 1;
  for (int j = g.d - 1; j > axis; --j) stride *= g.n;
  const int axis_pos = (site / stride) % g.n;
  const int shifted = ((axis_pos + step) % g.n + g.n) % g.n;
  return site + (shifted - axis_pos) * stride;
}
}  // namespace detail

// (T f)(x) = h^{-2} sum_{+-e} (f(x) - e^{i theta(x, x+e)} f(x+e)); with all
// phases zero this is the standard nearest-neighbor discrete Laplacian.
inline HermitianOperator magnetic_laplacian(const TorusGrid& g, const MagneticField& b) {
  if (b.d != g.d || b.theta.size() != static_cast<std::size_t>(g.size()) * g.d)
    throw std::invalid_argument("magnetic_laplacian: field does not match grid");
  const int num = g.size();
  const double h2 = g.spacing() * g.spacing();
  Matrix m = Matrix::Zero(num, num);
  for (int i = 0; i < num; ++i) {
    m(i, i) += 2.0 * g.d / h2;
    for (int axis = 0; axis < g.d; ++axis) {
      const int fwd = detail::neighbor_index(g, i, axis, +1);
      const int bwd = detail::neighbor_index(g, i, axis, -1);
      // hop i -> i+e with phase theta(i, axis); reverse phase is negated
      m(i, fwd) += -std::exp(Complex(0.0, b.phase(i, axis))) / h2;
      m(i, bwd) += -std::exp(Complex(0.0, -b.phase(bwd, axis))) / h2;
    }
  }
  return HermitianOperator(g.position_space, std::move(m));
}

/// Multiplication operator by a block-valued function in orthonormal coords.
inline Matrix multiplication_matrix(const WeightedFunction& f) {
  const int m = f.block_dim();
  const Eigen::Index dim = static_cast<Eigen::Index>(f.size()) * m;
  Matrix out = Matrix::Zero(dim, dim);
  for (int i = 0; i < f.size(); ++i)
    out.block(static_cast<Eigen::Index>(i) * m, static_cast<Eigen::Index>(i) * m, m, m) = f.block(i);
  return out;
}

}  // namespace clrlab
