#pragma once

// Dense Hermitian eigendecomposition (cyclic complex Jacobi), spectral
// functional calculus, singular values and the positive-part trace.
// Target sizes are a few hundred at most; exactness wins over speed.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "clrlab/schatten.hpp"

namespace clrlab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

inline double hermiticity_error(const Matrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

inline double spectral_scale(const Matrix& m) {
  const double s = m.norm();
  return s > 0.0 ? s : 1.0;
}

struct EigenDecomposition {
  RealVector eigenvalues;  // ascending
  Matrix vectors;          // orthonormal columns, same order
};

/// Cyclic Jacobi for dense Hermitian matrices.  Deterministic: fixed sweep
/// order p < q, ties in the final sort broken by column index.
inline EigenDecomposition eigh(const Matrix& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("eigh: matrix not square");
  const double scale = spectral_scale(input);
  const double asym = hermiticity_error(input);
  if (asym > 1e-12 * scale) {
    std::ostringstream os;
    os << "eigh: input not Hermitian, asymmetry " << asym << " vs scale " << scale;
    throw std::invalid_argument(os.str());
  }
  const Eigen::Index n = input.rows();
  Matrix a = 0.5 * (input + input.adjoint());
  Matrix q = Matrix::Identity(n, n);

  auto off_norm = [&]() {
    double sum = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = i + 1; j < n; ++j) sum += std::norm(a(i, j));
    return std::sqrt(2.0 * sum);
  };

  const double stop = 1e-13 * scale;
  for (int sweep = 0; sweep < 100; ++sweep) {
    if (off_norm() <= stop) break;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index r = p + 1; r < n; ++r) {
        const Complex g = a(p, r);
        const double absg = std::abs(g);
        if (absg <= 1e-300) continue;
        const Complex w = g / absg;
        const double alpha = a(p, p).real();
        const double beta = a(r, r).real();
        const double tau = (beta - alpha) / (2.0 * absg);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // A <- J* A J with J mixing columns p and r:
        //   col p: c * col_p - s conj(w) * col_r,  col r: s w * col_p + c * col_r
        for (Eigen::Index i = 0; i < n; ++i) {
          const Complex ap = a(i, p), ar = a(i, r);
          a(i, p) = c * ap - s * std::conj(w) * ar;
          a(i, r) = s * w * ap + c * ar;
        }
        for (Eigen::Index i = 0; i < n; ++i) {
          const Complex ap = a(p, i), ar = a(r, i);
          a(p, i) = c * ap - s * w * ar;
          a(r, i) = s * std::conj(w) * ap + c * ar;
        }
        a(p, r) = 0.0;
        a(r, p) = 0.0;
        a(p, p) = Complex(a(p, p).real(), 0.0);
        a(r, r) = Complex(a(r, r).real(), 0.0);
        for (Eigen::Index i = 0; i < n; ++i) {
          const Complex qp = q(i, p), qr = q(i, r);
          q(i, p) = c * qp - s * std::conj(w) * qr;
          q(i, r) = s * w * qp + c * qr;
        }
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
    return a(i, i).real() < a(j, j).real();
  });
  EigenDecomposition dec;
  dec.eigenvalues.resize(n);
  dec.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    dec.eigenvalues(k) = a(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(k)]).real();
    dec.vectors.col(k) = q.col(order[static_cast<std::size_t>(k)]);
  }
  return dec;
}

/// Q f(Lambda) Q* from a precomputed decomposition.
inline Matrix assemble(const EigenDecomposition& dec, const std::function<double(double)>& f) {
  const Eigen::Index n = dec.eigenvalues.size();
  RealVector fl(n);
  for (Eigen::Index i = 0; i < n; ++i) fl(i) = f(dec.eigenvalues(i));
  Matrix out = dec.vectors * fl.asDiagonal() * dec.vectors.adjoint();
  return 0.5 * (out + Matrix(out.adjoint()));
}

inline double kernel_cut(const EigenDecomposition& dec) {
  const double top = dec.eigenvalues.size() ? dec.eigenvalues.cwiseAbs().maxCoeff() : 0.0;
  return 1e-12 * (top > 0.0 ? top : 1.0);
}

inline Matrix apply_spectral(const Matrix& h, const std::function<double(double)>& f) {
  return assemble(eigh(h), f);
}

inline Matrix matrix_sqrt(const Matrix& h) {
  const auto dec = eigh(h);
  const double cut = kernel_cut(dec);
  if (dec.eigenvalues.size() && dec.eigenvalues.minCoeff() < -cut) {
    std::ostringstream os;
    os << "matrix_sqrt: negative eigenvalue " << dec.eigenvalues.minCoeff();
    throw std::domain_error(os.str());
  }
  return assemble(dec, [](double l) { return l > 0.0 ? std::sqrt(l) : 0.0; });
}

/// Pseudo-inverse vanishing on the numerical kernel (|lambda| <= 1e-12 scale).
inline Matrix inverse_on_range(const Matrix& h) {
  const auto dec = eigh(h);
  const double cut = kernel_cut(dec);
  return assemble(dec, [cut](double l) { return std::abs(l) > cut ? 1.0 / l : 0.0; });
}

inline Matrix inverse_sqrt_on_range(const Matrix& h) {
  const auto dec = eigh(h);
  const double cut = kernel_cut(dec);
  return assemble(dec, [cut](double l) { return l > cut ? 1.0 / std::sqrt(l) : 0.0; });
}

inline Matrix positive_part(const Matrix& h) {
  return apply_spectral(h, [](double l) { return l > 0.0 ? l : 0.0; });
}

inline Matrix negative_part(const Matrix& h) {
  return apply_spectral(h, [](double l) { return l < 0.0 ? -l : 0.0; });
}

inline Matrix heat_operator(const EigenDecomposition& dec, double t) {
  return assemble(dec, [t](double l) { return std::exp(-t * l); });
}

inline Matrix heat_operator(const Matrix& h, double t) { return heat_operator(eigh(h), t); }

/// chi_{(0,E]}(H): spectral projector onto eigenvalues in (kernel cut, E].
inline Matrix projector_below(const EigenDecomposition& dec, double e) {
  const double cut = kernel_cut(dec);
  return assemble(dec, [cut, e](double l) { return (l > cut && l <= e) ? 1.0 : 0.0; });
}

inline Matrix projector_above(const EigenDecomposition& dec, double e) {
  return assemble(dec, [e](double l) { return l > e ? 1.0 : 0.0; });
}

/// tr (H - mu)_+ = sum_i (lambda_i - mu)_+.
inline double trace_positive_part(const Matrix& h, double mu) {
  const auto dec = eigh(h);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < dec.eigenvalues.size(); ++i)
    sum += std::max(dec.eigenvalues(i) - mu, 0.0);
  return sum;
}

inline double trace_positive_part(const EigenDecomposition& dec, double mu) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < dec.eigenvalues.size(); ++i)
    sum += std::max(dec.eigenvalues(i) - mu, 0.0);
  return sum;
}

/// Descending singular values via eigh of the Gram matrix on the smaller side.
inline SingularSpectrum singular_values(const Matrix& k) {
  const Matrix gram = (k.rows() <= k.cols()) ? Matrix(k * k.adjoint()) : Matrix(k.adjoint() * k);
  const auto dec = eigh(gram);
  std::vector<double> vals;
  vals.reserve(static_cast<std::size_t>(dec.eigenvalues.size()));
  for (Eigen::Index i = 0; i < dec.eigenvalues.size(); ++i)
    vals.push_back(std::sqrt(std::max(dec.eigenvalues(i), 0.0)));
  return SingularSpectrum(std::move(vals));
}

/// A^{1/2} B A^{1/2} for PSD A, re-symmetrized.
inline Matrix sandwich(const Matrix& a, const Matrix& b) {
  const auto dec = eigh(a);
  const double cut = kernel_cut(dec);
  if (dec.eigenvalues.size() && dec.eigenvalues.minCoeff() < -cut)
    throw std::domain_error("sandwich: first argument is not PSD");
  const Matrix root = assemble(dec, [](double l) { return l > 0.0 ? std::sqrt(l) : 0.0; });
  Matrix out = root * b * root;
  return 0.5 * (out + Matrix(out.adjoint()));
}

}  // namespace clrlab
