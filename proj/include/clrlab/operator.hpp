#pragma once

// Self-adjoint operators on L_2 of a finite measure space, optionally
// tensored with an auxiliary space C^m.  Coordinates are the orthonormal
// basis e_i = indicator(x_i)/sqrt(w_i); kernel and density conventions:
//   k(x_i, x_j) = M_ij / sqrt(w_i w_j),   rho(x_i) = M_ii / w_i.

#include <stdexcept>

#include "clrlab/measure.hpp"

namespace clrlab {

class HermitianOperator {
 public:
  HermitianOperator(FiniteMeasureSpace space, Matrix matrix, int block_dim = 1)
      : space_(std::move(space)), block_dim_(block_dim), matrix_(std::move(matrix)) {
    if (block_dim_ < 1) throw std::invalid_argument("HermitianOperator: block_dim must be >= 1");
    const Eigen::Index expect = static_cast<Eigen::Index>(space_.size()) * block_dim_;
    if (matrix_.rows() != expect || matrix_.cols() != expect)
      throw std::invalid_argument("HermitianOperator: matrix size != n * block_dim");
    const double scale = spectral_scale(matrix_);
    if (hermiticity_error(matrix_) > 1e-12 * scale)
      throw std::invalid_argument("HermitianOperator: matrix not self-adjoint");
    matrix_ = 0.5 * (matrix_ + Matrix(matrix_.adjoint()));
  }

  const FiniteMeasureSpace& space() const { return space_; }
  int block_dim() const { return block_dim_; }
  int points() const { return space_.size(); }
  Eigen::Index dim() const { return matrix_.rows(); }
  const Matrix& matrix() const { return matrix_; }

  double trace() const { return matrix_.trace().real(); }

  /// m x m sub-block at matrix position (i, j).
  Matrix block(int i, int j) const {
    return matrix_.block(static_cast<Eigen::Index>(i) * block_dim_,
                         static_cast<Eigen::Index>(j) * block_dim_, block_dim_, block_dim_);
  }

  /// Integral-kernel value k(x_i, x_j) = M_ij / sqrt(w_i w_j) (block form).
  Matrix kernel_value(int i, int j) const {
    return block(i, j) / std::sqrt(space_.weight(i) * space_.weight(j));
  }

 private:
  FiniteMeasureSpace space_;
  int block_dim_ = 1;
  Matrix matrix_;
};

inline EigenDecomposition eigh(const HermitianOperator& h) { return eigh(h.matrix()); }

inline HermitianOperator apply_spectral(const HermitianOperator& h,
                                        const std::function<double(double)>& f) {
  return HermitianOperator(h.space(), apply_spectral(h.matrix(), f), h.block_dim());
}

inline double trace_positive_part(const HermitianOperator& h, double mu) {
  return trace_positive_part(h.matrix(), mu);
}

inline HermitianOperator sandwich(const HermitianOperator& a, const HermitianOperator& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("sandwich: dimension mismatch");
  return HermitianOperator(a.space(), sandwich(a.matrix(), b.matrix()), a.block_dim());
}

/// Diagonal density rho(x_i) = M_ii / w_i as a function on the operator's space.
inline WeightedFunction density_diag(const HermitianOperator& h) {
  std::vector<Matrix> blocks;
  blocks.reserve(static_cast<std::size_t>(h.points()));
  for (int i = 0; i < h.points(); ++i) {
    Matrix b = h.block(i, i) / h.space().weight(i);
    blocks.push_back(0.5 * (b + Matrix(b.adjoint())));
  }
  return WeightedFunction(h.space(), std::move(blocks));
}

}  // namespace clrlab
