#pragma once

// Finite measure spaces, scalar and operator-valued functions on them, and
// the L_p / weak-L_p quasi-norms.  A function carries one value per point:
// a complex scalar, or a Hermitian m x m block when an auxiliary space
// H = C^m is attached.  Pointwise magnitudes follow the two norms in play:
// Schatten-p for L_p(S_p), operator norm for L_{p,w}(B).

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "clrlab/linalg.hpp"

namespace clrlab {

class FiniteMeasureSpace {
 public:
  FiniteMeasureSpace() = default;
  explicit FiniteMeasureSpace(std::vector<double> weights) : weights_(std::move(weights)) {
    for (double w : weights_)
      if (!(w > 0.0) || !std::isfinite(w))
        throw std::invalid_argument("FiniteMeasureSpace: weights must be positive and finite");
  }

  int size() const { return static_cast<int>(weights_.size()); }
  double weight(int i) const { return weights_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& weights() const { return weights_; }
  double total_measure() const {
    double s = 0.0;
    for (double w : weights_) s += w;
    return s;
  }

 private:
  std::vector<double> weights_;
};

class WeightedFunction {
 public:
  WeightedFunction(FiniteMeasureSpace space, std::vector<Matrix> blocks)
      : space_(std::move(space)), blocks_(std::move(blocks)) {
    if (static_cast<int>(blocks_.size()) != space_.size())
      throw std::invalid_argument("WeightedFunction: value count != point count");
    if (blocks_.empty()) throw std::invalid_argument("WeightedFunction: empty space");
    block_dim_ = static_cast<int>(blocks_.front().rows());
    for (const auto& b : blocks_) {
      if (b.rows() != block_dim_ || b.cols() != block_dim_)
        throw std::invalid_argument("WeightedFunction: mixed block dimensions");
      if (block_dim_ > 1) {
        const double scale = spectral_scale(b);
        if (hermiticity_error(b) > 1e-12 * scale)
          throw std::invalid_argument("WeightedFunction: non-Hermitian block");
      }
    }
  }

  static WeightedFunction scalar(FiniteMeasureSpace space, const std::vector<double>& values) {
    std::vector<Matrix> blocks;
    blocks.reserve(values.size());
    for (double v : values) {
      Matrix b(1, 1);
      b(0, 0) = v;
      blocks.push_back(std::move(b));
    }
    return WeightedFunction(std::move(space), std::move(blocks));
  }

  static WeightedFunction scalar(FiniteMeasureSpace space, const std::vector<Complex>& values) {
    std::vector<Matrix> blocks;
    blocks.reserve(values.size());
    for (Complex v : values) {
      Matrix b(1, 1);
      b(0, 0) = v;
      blocks.push_back(std::move(b));
    }
    return WeightedFunction(std::move(space), std::move(blocks));
  }

  const FiniteMeasureSpace& space() const { return space_; }
  int block_dim() const { return block_dim_; }
  int size() const { return space_.size(); }
  const Matrix& block(int i) const { return blocks_[static_cast<std::size_t>(i)]; }

  Complex scalar_value(int i) const {
    if (block_dim_ != 1) throw std::logic_error("scalar_value: block_dim > 1");
    return blocks_[static_cast<std::size_t>(i)](0, 0);
  }
  double real_value(int i) const { return scalar_value(i).real(); }
  bool is_real(double tol = 1e-12) const {
    if (block_dim_ != 1) return false;
    for (const auto& b : blocks_)
      if (std::abs(b(0, 0).imag()) > tol) return false;
    return true;
  }

  /// Schatten-p magnitude of the value at point i.
  double schatten_magnitude(int i, double p) const {
    const Matrix& b = blocks_[static_cast<std::size_t>(i)];
    if (block_dim_ == 1) return std::abs(b(0, 0));
    const auto dec = eigh(b);
    double sum = 0.0;
    for (Eigen::Index k = 0; k < dec.eigenvalues.size(); ++k)
      sum += std::pow(std::abs(dec.eigenvalues(k)), p);
    return std::pow(sum, 1.0 / p);
  }

  /// Operator-norm magnitude of the value at point i.
  double opnorm_magnitude(int i) const {
    const Matrix& b = blocks_[static_cast<std::size_t>(i)];
    if (block_dim_ == 1) return std::abs(b(0, 0));
    const auto dec = eigh(b);
    return dec.eigenvalues.cwiseAbs().maxCoeff();
  }

 private:
  FiniteMeasureSpace space_;
  int block_dim_ = 1;
  std::vector<Matrix> blocks_;
};

inline double lp_norm(const WeightedFunction& f, double p) {
  if (!(p > 0.0) || !std::isfinite(p)) throw std::invalid_argument("lp_norm: p must be positive and finite");
  double sum = 0.0;
  for (int i = 0; i < f.size(); ++i)
    sum += f.space().weight(i) * std::pow(f.schatten_magnitude(i, p), p);
  return std::pow(sum, 1.0 / p);
}

/// mu({mag > tau}) or mu({mag >= tau}), with mag the operator-norm magnitude.
inline double superlevel_measure(const WeightedFunction& f, double tau, bool strict) {
  double sum = 0.0;
  for (int i = 0; i < f.size(); ++i) {
    const double m = f.opnorm_magnitude(i);
    if (strict ? (m > tau) : (m >= tau)) sum += f.space().weight(i);
  }
  return sum;
}

// ||f||_{p,w} = (sup_tau tau^p mu({mag > tau}))^{1/p}.  tau^p mu({mag > tau})
// is maximized in the limit tau up to a distinct magnitude v_j, where the
// superlevel measure is the non-strict one, so the sup equals
// max_j v_j^p mu({mag >= v_j}) exactly.
inline double weak_lp_norm(const WeightedFunction& f, double p) {
  if (!(p > 0.0) || !std::isfinite(p)) throw std::invalid_argument("weak_lp_norm: p must be positive and finite");
  std::vector<std::pair<double, double>> mags;  // (magnitude, weight)
  mags.reserve(static_cast<std::size_t>(f.size()));
  for (int i = 0; i < f.size(); ++i) mags.emplace_back(f.opnorm_magnitude(i), f.space().weight(i));
  std::sort(mags.begin(), mags.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  double best = 0.0;
  double cum = 0.0;
  for (std::size_t j = 0; j < mags.size(); ++j) {
    cum += mags[j].second;
    const bool boundary = (j + 1 == mags.size()) || (mags[j + 1].first < mags[j].first);
    if (boundary && mags[j].first > 0.0)
      best = std::max(best, std::pow(mags[j].first, p) * cum);
  }
  return std::pow(best, 1.0 / p);
}

}  // namespace clrlab
