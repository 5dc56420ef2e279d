#include "ebell/qstate.hpp"

#include <cmath>
#include <string>

#include "ebell/errors.hpp"

namespace ebell {

double normalize_angle(double radians) {
  if (!std::isfinite(radians)) {
    throw InvalidInputError("angle must be finite");
  }
  double r = std::fmod(radians, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // fmod of a tiny negative value can round up to exactly 2pi.
  if (r >= kTwoPi) r = 0.0;
  return r;
}

Axis::Axis(double alpha, double beta)
    : alpha_(normalize_angle(alpha)), beta_(normalize_angle(beta)) {}

std::string_view to_string(Sign s) { return s == Sign::plus ? "+" : "-"; }

Sign parse_sign(std::string_view text) {
  if (text == "+" || text == "plus") return Sign::plus;
  if (text == "-" || text == "minus") return Sign::minus;
  throw InvalidInputError("invalid sign '" + std::string(text) + "' (expected + or -)");
}

double SpinKet::norm() const { return std::sqrt(std::norm(c_plus) + std::norm(c_minus)); }

bool all_finite(const GeneralMatrix& m) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
  return true;
}

bool is_hermitian(const GeneralMatrix& m, double tol) {
  return std::abs(m(0, 0).imag()) <= tol && std::abs(m(1, 1).imag()) <= tol &&
         std::abs(m(0, 1) - std::conj(m(1, 0))) <= tol;
}

double max_abs_diff(const GeneralMatrix& a, const GeneralMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

DensityMatrix DensityMatrix::from_matrix(const GeneralMatrix& m, double tol) {
  if (!all_finite(m)) throw InvalidStateError("density matrix has non-finite entries");
  if (!is_hermitian(m, tol)) throw InvalidStateError("density matrix is not Hermitian");
  const cplx trace = m.trace();
  if (std::abs(trace - 1.0) > tol) throw InvalidStateError("density matrix trace is not 1");
  // Smallest eigenvalue of a Hermitian 2x2 in closed form.
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  const double lambda_min = 0.5 * (a + d) - std::hypot(0.5 * (a - d), std::abs(m(0, 1)));
  if (lambda_min < -tol) throw InvalidStateError("density matrix is not positive semidefinite");
  return DensityMatrix(m);
}

SpinKet make_ket(const Axis& axis, Sign sign) {
  const double half = 0.5 * axis.beta();
  return SpinKet{cplx(std::cos(half), 0.0),
                 sign_factor(sign) * std::sin(half) * std::polar(1.0, axis.alpha())};
}

SpinKet make_antialigned_ket(const Axis& axis) {
  const double half = 0.5 * axis.beta();
  return SpinKet{cplx(std::sin(half), 0.0), -std::cos(half) * std::polar(1.0, axis.alpha())};
}

DensityMatrix density_from_ket(const SpinKet& ket) {
  const double n = ket.norm();
  if (!std::isfinite(n) || std::abs(n - 1.0) > 1e-9) {
    throw InvalidStateError("ket is not normalized (norm " + std::to_string(n) + ")");
  }
  Eigen::Vector2cd v(ket.c_plus / n, ket.c_minus / n);
  GeneralMatrix m = v * v.adjoint();
  // Exact real diagonal keeps the Hermitian check bit-clean.
  m(0, 0) = std::norm(v(0));
  m(1, 1) = std::norm(v(1));
  m(1, 0) = std::conj(m(0, 1));
  return DensityMatrix::from_matrix(m);
}

DensityMatrix density_xz(double beta, Sign sign) {
  const double half = 0.5 * normalize_angle(beta);
  const double c = std::cos(half);
  const double s = std::sin(half);
  const double off = sign_factor(sign) * c * s;
  GeneralMatrix m;
  m << c * c, off, off, s * s;
  return DensityMatrix::from_matrix(m);
}

GeneralMatrix paper_literal_density(const Axis& axis, Sign sign) {
  const double half = 0.5 * axis.beta();
  const double c = std::cos(half);
  const double s = std::sin(half);
  const cplx phase = std::polar(1.0, axis.alpha());
  const cplx off = sign_factor(sign) * c * s * phase;
  GeneralMatrix m;
  m << c * c, off, off, s * s * phase * phase;
  return m;
}

DensityMatrix mix_pair(const DensityMatrix& rho_a, const DensityMatrix& rho_b) {
  return DensityMatrix(0.5 * (rho_a.matrix() + rho_b.matrix()));
}

DensityMatrix device_beam_density(const Axis& axis) {
  return mix_pair(density_from_ket(make_ket(axis, Sign::plus)),
                  density_from_ket(make_antialigned_ket(axis)));
}

}  // namespace ebell
