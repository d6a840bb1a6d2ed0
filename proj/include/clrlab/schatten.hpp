#pragma once

// Weak Schatten quasi-norms and the equivalent quasi-norm
//   |K|_q' = (sup_mu mu^{q/2-1} tr(K*K - mu)_+)^{1/q},  q > 2,
// evaluated in closed form on finite singular spectra.

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "clrlab/report.hpp"

namespace clrlab {

/// Descending list of singular values s_1 >= s_2 >= ... >= 0.
class SingularSpectrum {
 public:
  SingularSpectrum() = default;
  explicit SingularSpectrum(std::vector<double> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end(), std::greater<double>());
    if (!values_.empty() && values_.back() < 0.0)
      throw std::invalid_argument("SingularSpectrum: negative singular value");
  }

  // lvalue/rvalue split so iterating over values() of a temporary is safe
  const std::vector<double>& values() const& { return values_; }
  std::vector<double> values() && { return std::move(values_); }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

 private:
  std::vector<double> values_;
};

/// n(kappa) = #{ j : s_j > kappa }, strict per Cwikel's counting convention.
inline int counting(const SingularSpectrum& s, double kappa) {
  if (!(kappa > 0.0)) throw std::invalid_argument("counting: kappa must be positive");
  int n = 0;
  for (double v : s.values())
    if (v > kappa) ++n;
  return n;
}

// ||K||_{q,w} = (sup_kappa kappa^q n(kappa))^{1/q}.  n(kappa) = j on
// [s_{j+1}, s_j), so the sup is approached as kappa -> s_j from below and
// equals max_j j s_j^q.
inline double weak_schatten_norm(const SingularSpectrum& s, double q) {
  if (!(q > 0.0)) throw std::invalid_argument("weak_schatten_norm: q must be positive");
  double best = 0.0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    const double cand = static_cast<double>(j + 1) * std::pow(s.values()[j], q);
    best = std::max(best, cand);
  }
  return std::pow(best, 1.0 / q);
}

// |K|_q' by exact piecewise maximization.  With e_j = s_j^2 descending and
// S_j = e_1 + ... + e_j, the objective on [e_{j+1}, e_j) is
// mu^{q/2-1} (S_j - j mu); the interior critical point is
// mu* = ((q-2)/q) S_j / j.
inline double equiv_quasinorm(const SingularSpectrum& s, double q) {
  if (!(q > 2.0)) throw std::invalid_argument("equiv_quasinorm: requires q > 2");
  const auto& v = s.values();
  if (v.empty() || v.front() == 0.0) return 0.0;
  const double expo = 0.5 * q - 1.0;
  auto objective = [&](double mu, double partial_sum, std::size_t j) {
    return std::pow(mu, expo) * (partial_sum - static_cast<double>(j) * mu);
  };
  double best = 0.0;
  double partial = 0.0;
  for (std::size_t j = 1; j <= v.size(); ++j) {
    const double ej = v[j - 1] * v[j - 1];
    partial += ej;
    const double lo = (j < v.size()) ? v[j] * v[j] : 0.0;
    const double hi = ej;
    if (hi > 0.0) best = std::max(best, objective(hi, partial, j));
    if (lo > 0.0) best = std::max(best, objective(lo, partial, j));
    const double crit = (q - 2.0) / q * partial / static_cast<double>(j);
    if (crit > lo && crit < hi) best = std::max(best, objective(crit, partial, j));
  }
  return std::pow(best, 1.0 / q);
}

// Sandwich |K|_q' <= (2/(q-2))^{1/q} ||K||_{q,w} <= (q/(q-2))^{1/2} |K|_q'.
inline TrialReport check_equiv_sandwich(const SingularSpectrum& s, double q,
                                        double slack = 1e-9) {
  if (!(q > 2.0)) throw std::invalid_argument("check_equiv_sandwich: requires q > 2");
  const double prime = equiv_quasinorm(s, q);
  const double weak = weak_schatten_norm(s, q);
  const double mid = std::pow(2.0 / (q - 2.0), 1.0 / q) * weak;
  const double upper = std::sqrt(q / (q - 2.0)) * prime;

  TrialReport rep;
  rep.suite = "equiv_sandwich";
  rep.params = {{"q", q}, {"rank", static_cast<double>(s.size())}};
  rep.lhs = prime;
  rep.rhs = mid;
  rep.ratio = safe_ratio(prime, mid);
  const bool lower_ok = prime <= mid * (1.0 + slack);
  const bool upper_ok = mid <= upper * (1.0 + slack);
  rep.pass = lower_ok && upper_ok;
  std::ostringstream os;
  os << "|K|_q'=" << prime << " <= " << mid << " <= " << upper;
  rep.detail = os.str();
  return rep;
}

}  // namespace clrlab
