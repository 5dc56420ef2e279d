#pragma once

// Test-only reference computations. Nothing here calls into the library's
// eigen, log or entropy code, so each helper is an independent check on it.

#include <array>
#include <cmath>
#include <complex>
#include <random>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

namespace ebell::oracle {

inline constexpr double kPi = 3.14159265358979323846;

// h(p) = -p ln p - (1-p) ln(1-p), with 0 ln 0 = 0.
inline double binary_entropy(double p) {
  double h = 0.0;
  if (p > 0.0) h -= p * std::log(p);
  if (p < 1.0) h -= (1.0 - p) * std::log1p(-p);
  return h;
}

// Eigenvalues of the equal mixture of two (+) x-z projectors separated by
// delta: (1 +/- cos(delta/2)) / 2.
inline std::array<double, 2> mixture_eigenvalues(double delta) {
  const double c = std::abs(std::cos(0.5 * delta));
  return {0.5 * (1.0 + c), 0.5 * (1.0 - c)};
}

inline double mixture_entropy(double delta) {
  return binary_entropy(mixture_eigenvalues(delta)[1]);
}

// Closed-form reduction of the all-(+) entrywise triangle margins:
// diag cos^2(a/2), sin^2(a/2); off-diagonal sin(a)/2.
inline std::array<double, 4> entrywise_region_margins(double beta_a) {
  const double c = std::cos(0.5 * beta_a);
  const double s = std::sin(0.5 * beta_a);
  return {c * c, 0.5 * std::sin(beta_a), 0.5 * std::sin(beta_a), s * s};
}

inline bool entrywise_region_holds(double beta_a) { return std::sin(beta_a) >= -2e-12; }

// Cerf-Adami conditional entropy for the singlet law.
inline double singlet_conditional(double theta) {
  const double s = std::sin(0.5 * theta);
  return binary_entropy(s * s);
}

inline Eigen::Matrix2cd reference_log(const Eigen::Matrix2cd& m) { return m.log(); }
inline Eigen::Matrix2cd reference_exp(const Eigen::Matrix2cd& m) { return m.exp(); }

inline std::array<std::complex<double>, 2> reference_eigenvalues(const Eigen::Matrix2cd& m) {
  Eigen::ComplexEigenSolver<Eigen::Matrix2cd> solver(m, false);
  return {solver.eigenvalues()(0), solver.eigenvalues()(1)};
}

// Entries uniform on the complex unit square [0,1) x [0,1).
inline Eigen::Matrix2cd random_matrix(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Eigen::Matrix2cd m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m(i, j) = {u(rng), u(rng)};
  return m;
}

// Random full-rank qubit state: U diag(p, 1-p) U^H with p in [lo, 1-lo].
inline Eigen::Matrix2cd random_state(std::mt19937_64& rng, double lo = 1e-3) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double p = lo + (1.0 - 2.0 * lo) * u(rng);
  const double theta = kPi * u(rng);
  const double phi = 2.0 * kPi * u(rng);
  Eigen::Vector2cd v(std::cos(0.5 * theta), std::polar(std::sin(0.5 * theta), phi));
  Eigen::Vector2cd w(-std::conj(v(1)), std::conj(v(0)));
  Eigen::Matrix2cd rho = p * v * v.adjoint() + (1.0 - p) * w * w.adjoint();
  rho(1, 0) = std::conj(rho(0, 1));
  rho(0, 0) = rho(0, 0).real();
  rho(1, 1) = 1.0 - rho(0, 0).real();
  return rho;
}

}  // namespace ebell::oracle
