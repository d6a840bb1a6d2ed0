#pragma once

// Closed-form constants of the CLR / Cwikel circle of inequalities, with
// their exact cross-relations.  Literature values quoted in the table:
//   Frank, "Cwikel's theorem and the CLR inequality", J. Spectral Theory 4 (2014)
//   Lieb (1976), Daubechies (1983), Frank-Lieb-Seiringer (2007), Hundertmark (2002)

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace clrlab::constants {

inline constexpr double pi = std::numbers::pi;

/// Volume of the unit ball in R^d: pi^{d/2} / Gamma(d/2 + 1).
inline double omega(int d) {
  if (d < 1) throw std::domain_error("omega: d must be >= 1");
  return std::pow(pi, 0.5 * d) / std::exp(std::lgamma(0.5 * d + 1.0));
}

/// (p+1)^{p-1} / (p-1)^p * (2 pi)^{-d}; use d = 0 for the measure-absorbed form.
inline double theorem_main_constant(double p, int d) {
  if (!(p > 1.0)) throw std::domain_error("theorem_main_constant: requires p > 1");
  return std::pow(p + 1.0, p - 1.0) / std::pow(p - 1.0, p) * std::pow(2.0 * pi, -d);
}

/// (q/(q-2))^{q/2} ((q+2)/(q-2))^{(q-2)/2} (2 pi)^{-d}.
inline double cwikel_constant(double q, int d) {
  if (!(q > 2.0)) throw std::domain_error("cwikel_constant: requires q > 2");
  return std::pow(q / (q - 2.0), 0.5 * q) * std::pow((q + 2.0) / (q - 2.0), 0.5 * (q - 2.0)) *
         std::pow(2.0 * pi, -d);
}

/// (q/2) (q/(q-2))^{q-1} C^2 — the operator-valued Cwikel constant.
inline double cwikelop_constant(double q, double c) {
  if (!(q > 2.0) || !(c > 0.0)) throw std::domain_error("cwikelop_constant: requires q > 2, C > 0");
  return 0.5 * q * std::pow(q / (q - 2.0), q - 1.0) * c * c;
}

/// (q/2)^q (8/(q-2))^{q-2} (q/(q-2)) C^2 — the Cwikel/Hundertmark constant.
inline double hundertmark_constant(double q, double c) {
  if (!(q > 2.0) || !(c > 0.0)) throw std::domain_error("hundertmark_constant: requires q > 2, C > 0");
  return std::pow(0.5 * q, q) * std::pow(8.0 / (q - 2.0), q - 2.0) * (q / (q - 2.0)) * c * c;
}

/// (q/2) (q/(q+2))^{(q-2)/2}: how much the operator-valued constant exceeds
/// the scalar Corollary constant.
inline double corollary_vs_opval_factor(double q) {
  if (!(q > 2.0)) throw std::domain_error("corollary_vs_opval_factor: requires q > 2");
  return 0.5 * q * std::pow(q / (q + 2.0), 0.5 * (q - 2.0));
}

/// C_nu = (nu/2) (nu/(nu-2))^{nu-2}, the general (operator-valued) CLR constant.
inline double cnu_general(double nu) {
  if (!(nu > 2.0)) throw std::domain_error("cnu_general: requires nu > 2");
  return 0.5 * nu * std::pow(nu / (nu - 2.0), nu - 2.0);
}

/// C_nu = (nu (nu+2) / (nu-2)^2)^{(nu-2)/2}, the scalar improvement.
inline double cnu_scalar(double nu) {
  if (!(nu > 2.0)) throw std::domain_error("cnu_scalar: requires nu > 2");
  return std::pow(nu * (nu + 2.0) / ((nu - 2.0) * (nu - 2.0)), 0.5 * (nu - 2.0));
}

struct ClrExampleConstants {
  double scalar_bound = 0.0;
  double opval_bound = 0.0;
};

/// Full prefactors of the fractional-Laplacian CLR example, with
/// A = omega_d / (2 pi)^d * d / (d - 2s) and nu = d/s.
inline ClrExampleConstants clr_example_constants(int d, double s) {
  if (!(s > 0.0) || !(2.0 * s < d)) throw std::domain_error("clr_example_constants: requires 0 < 2s < d");
  const double nu = d / s;
  const double a = omega(d) / std::pow(2.0 * pi, d) * d / (d - 2.0 * s);
  return {cnu_scalar(nu) * a, cnu_general(nu) * a};
}

/// ((p-1)/(p+1)) C^{-2/(p-1)} ((p-1)/p)^{p/(p-1)}; with C = (2 pi)^{-d/2}
/// this is the R^d Rumin constant (p-1)/(p+1) * R^sc_{d,p}.
inline double rumin_constant(double p, double c) {
  if (!(p > 1.0) || !(c > 0.0)) throw std::domain_error("rumin_constant: requires p > 1, C > 0");
  return (p - 1.0) / (p + 1.0) * std::pow(c, -2.0 / (p - 1.0)) *
         std::pow((p - 1.0) / p, p / (p - 1.0));
}

/// Solve (p D)^{p'} (p' K)^p = 1 for K.
inline double dual_transform(double p, double d_const) {
  if (!(p > 1.0) || !(d_const > 0.0)) throw std::domain_error("dual_transform: requires p > 1, D > 0");
  const double pprime = p / (p - 1.0);
  // (p' K)^p = (p D)^{-p'}  =>  K = (1/p') (p D)^{-p'/p}
  return std::pow(p * d_const, -pprime / p) / pprime;
}

/// Solve (p D)^{p'} (p' K)^p = 1 for D.
inline double dual_transform_inv(double p, double k_const) {
  if (!(p > 1.0) || !(k_const > 0.0)) throw std::domain_error("dual_transform_inv: requires p > 1, K > 0");
  const double pprime = p / (p - 1.0);
  return std::pow(pprime * k_const, -p / pprime) / p;
}

struct LemmaAssConstants {
  double b_prime = 0.0;  // projection bound constant C' (2e/nu)^{nu/2}
  double a_prime = 0.0;  // resolvent-projection constant B' nu/(nu-2)
};

inline LemmaAssConstants lemma_ass_constants(double c_prime, double nu) {
  if (!(nu > 2.0)) throw std::domain_error("lemma_ass_constants: requires nu > 2");
  if (c_prime < 0.0) throw std::domain_error("lemma_ass_constants: requires C' >= 0");
  const double b = c_prime * std::pow(2.0 * std::numbers::e / nu, 0.5 * nu);
  return {b, b * nu / (nu - 2.0)};
}

/// Field-independent magnetic constant (e/(2 pi d))^{d/2} d/(d-2), d >= 3.
inline double magnetic_A(int d) {
  if (d < 3) throw std::domain_error("magnetic_A: requires d >= 3");
  return std::pow(std::numbers::e / (2.0 * pi * d), 0.5 * d) * d / (d - 2.0);
}

struct KsdBounds {
  double lower = 0.0;          // from the sharpened Rumin inequality
  double sc_upper = 0.0;       // semiclassical phase-space constant
  double sobolev_upper = 0.0;  // from the sharp Sobolev constant
};

inline KsdBounds ksd_bounds(double s, int d) {
  if (!(s > 0.0) || !(2.0 * s < d)) throw std::domain_error("ksd_bounds: requires 0 < 2s < d");
  const double dd = d;
  const double sc = std::pow(2.0 * pi, 2.0 * dd * s / (dd - 2.0 * s)) *
                    std::pow((dd - 2.0 * s) / dd, dd / (dd - 2.0 * s)) *
                    std::pow(omega(d), -2.0 * s / (dd - 2.0 * s));
  const double lower = (dd - 2.0 * s) / (dd + 2.0 * s) * sc;
  const double lg = (dd / (dd - 2.0 * s)) * (std::lgamma(0.5 * (dd + 2.0 * s)) - std::lgamma(0.5 * (dd - 2.0 * s))) +
                    (2.0 * s / (dd - 2.0 * s)) * (std::lgamma(0.5 * dd) - std::lgamma(dd));
  const double sob = std::pow(4.0 * pi, dd * s / (dd - 2.0 * s)) * std::exp(lg);
  return {lower, sc, sob};
}

struct ConstantRecord {
  std::string name;
  std::vector<std::pair<std::string, double>> parameters;
  double value = 0.0;
  std::string source;
};

/// The serializable catalog consumed by the CLI table command.
inline std::vector<ConstantRecord> constants_table() {
  std::vector<ConstantRecord> t;
  auto add = [&](std::string name, std::vector<std::pair<std::string, double>> params, double value,
                 std::string source) {
    t.push_back({std::move(name), std::move(params), value, std::move(source)});
  };
  add("omega", {{"d", 1}}, omega(1), "unit ball volume");
  add("omega", {{"d", 2}}, omega(2), "unit ball volume");
  add("omega", {{"d", 3}}, omega(3), "unit ball volume");
  add("theorem_main", {{"p", 2}, {"d", 1}}, theorem_main_constant(2.0, 1), "Frank, JST 4 (2014), Thm 1");
  add("theorem_main", {{"p", 2}, {"d", 3}}, theorem_main_constant(2.0, 3), "Frank, JST 4 (2014), Thm 1");
  add("cwikel", {{"q", 4}, {"d", 1}}, cwikel_constant(4.0, 1), "Frank, JST 4 (2014), Cor 2");
  add("cwikel", {{"q", 4}, {"d", 3}}, cwikel_constant(4.0, 3), "Frank, JST 4 (2014), Cor 2");
  add("cwikelop", {{"q", 4}, {"C", 1}}, cwikelop_constant(4.0, 1.0), "Frank, JST 4 (2014), Thm 4");
  add("hundertmark", {{"q", 4}, {"C", 1}}, hundertmark_constant(4.0, 1.0), "Hundertmark (2002); Cwikel (1977)");
  add("cnu_general", {{"nu", 3}}, cnu_general(3.0), "Frank, JST 4 (2014), Thm 5");
  add("cnu_scalar", {{"nu", 3}}, cnu_scalar(3.0), "Frank, JST 4 (2014), Thm 5");
  const auto ex1 = clr_example_constants(3, 1.0);
  const auto exhalf = clr_example_constants(3, 0.5);
  add("clr_scalar", {{"d", 3}, {"s", 1.0}}, ex1.scalar_bound, "Frank, JST 4 (2014), Example");
  add("clr_scalar", {{"d", 3}, {"s", 0.5}}, exhalf.scalar_bound, "Frank, JST 4 (2014), Example");
  add("clr_opval", {{"d", 3}, {"s", 1.0}}, ex1.opval_bound, "Frank, JST 4 (2014), Example");
  add("clr_scalar_reference", {{"d", 3}, {"s", 1.0}}, 0.116, "Lieb (1976)");
  add("clr_scalar_reference", {{"d", 3}, {"s", 0.5}}, 0.103, "Daubechies (1983)");
  add("clr_opval_reference", {{"d", 3}, {"s", 1.0}}, 0.174, "Frank-Lieb-Seiringer (2007)");
  add("rumin", {{"p", 2}, {"C", 1}}, rumin_constant(2.0, 1.0), "Frank, JST 4 (2014), Lemma 8; Rumin (2011)");
  add("magnetic_A", {{"d", 3}}, magnetic_A(3), "Frank, JST 4 (2014), Sec 3.2");
  add("magnetic_A", {{"d", 4}}, magnetic_A(4), "Frank, JST 4 (2014), Sec 3.2");
  const auto k13 = ksd_bounds(1.0, 3);
  add("ksd_lower", {{"s", 1.0}, {"d", 3}}, k13.lower, "Frank, JST 4 (2014), Sec 4");
  add("ksd_sc_upper", {{"s", 1.0}, {"d", 3}}, k13.sc_upper, "Frank, JST 4 (2014), Sec 4.1");
  add("ksd_sobolev_upper", {{"s", 1.0}, {"d", 3}}, k13.sobolev_upper, "Lieb (1983); Frank, JST 4 (2014), Sec 4.2");
  return t;
}

}  // namespace clrlab::constants
