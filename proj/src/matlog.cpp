#include "ebell/matlog.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "ebell/errors.hpp"

namespace ebell {
namespace {

// Above this eigenvector condition number expm abandons the eigen path.
constexpr double kExpmMaxCondition = 1e4;
constexpr int kMaxTaylorTerms = 200;

void require_finite(const GeneralMatrix& m, const char* what) {
  if (!all_finite(m)) {
    throw InvalidInputError(std::string(what) + ": matrix has non-finite entries");
  }
}

EigenDecomp hermitian_eigen(const GeneralMatrix& m) {
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  const cplx b = 0.5 * (m(0, 1) + std::conj(m(1, 0)));
  const double mean = 0.5 * (a + d);
  const double half_diff = 0.5 * (a - d);
  const double r = std::hypot(half_diff, std::abs(b));

  EigenDecomp out;
  out.hermitian_input = true;
  out.diagonalizable = true;
  out.eigenvalues = {cplx(mean + r, 0.0), cplx(mean - r, 0.0)};
  if (r == 0.0) {
    out.eigenvectors = GeneralMatrix::Identity();
    return out;
  }
  // Pick the larger of the two equivalent eigenvector formulas for lambda_1.
  Eigen::Vector2cd v1 = half_diff >= 0.0 ? Eigen::Vector2cd(r + half_diff, std::conj(b))
                                         : Eigen::Vector2cd(b, r - half_diff);
  v1.normalize();
  out.eigenvectors.col(0) = v1;
  out.eigenvectors.col(1) = Eigen::Vector2cd(-std::conj(v1(1)), std::conj(v1(0)));
  return out;
}

Eigen::Vector2cd eigenvector_for(const GeneralMatrix& m, cplx lambda) {
  const Eigen::Vector2cd from_row0(m(0, 1), lambda - m(0, 0));
  const Eigen::Vector2cd from_row1(lambda - m(1, 1), m(1, 0));
  Eigen::Vector2cd v = from_row0.norm() >= from_row1.norm() ? from_row0 : from_row1;
  const double n = v.norm();
  if (n == 0.0) {
    // Only reachable for scalar matrices, which are handled before this call.
    return Eigen::Vector2cd(1.0, 0.0);
  }
  return v / n;
}

GeneralMatrix apply_diag(const EigenDecomp& eig, cplx f0, cplx f1) {
  const GeneralMatrix& v = eig.eigenvectors;
  Eigen::Matrix2cd diag = Eigen::Matrix2cd::Zero();
  diag(0, 0) = f0;
  diag(1, 1) = f1;
  if (eig.hermitian_input) return v * diag * v.adjoint();
  return v * diag * v.inverse();
}

double condition_number(const GeneralMatrix& v) {
  const cplx det = v.determinant();
  if (std::abs(det) == 0.0) return std::numeric_limits<double>::infinity();
  return v.norm() * v.inverse().norm();
}

GeneralMatrix expm_taylor(const GeneralMatrix& m) {
  const double norm = m.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const GeneralMatrix a = m / std::ldexp(1.0, squarings);

  GeneralMatrix sum = GeneralMatrix::Identity();
  GeneralMatrix term = GeneralMatrix::Identity();
  bool converged = false;
  for (int k = 1; k <= kMaxTaylorTerms; ++k) {
    term = term * a / static_cast<double>(k);
    sum += term;
    if (term.norm() <= std::numeric_limits<double>::epsilon() * sum.norm()) {
      converged = true;
      break;
    }
  }
  if (!converged) throw NumericalFailureError("expm: Taylor series did not converge");
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

}  // namespace

EigenDecomp eigen2(const GeneralMatrix& m) {
  require_finite(m, "eigen2");
  if (is_hermitian(m)) return hermitian_eigen(m);

  const cplx half_trace = 0.5 * m.trace();
  const cplx det = m.determinant();
  const cplx half_diff = 0.5 * (m(0, 0) - m(1, 1));
  // (tr/2)^2 - det, written without the cancellation.
  const cplx disc = std::sqrt(half_diff * half_diff + m(0, 1) * m(1, 0));
  cplx lambda1 = half_trace + disc;
  if (std::abs(half_trace - disc) > std::abs(lambda1)) lambda1 = half_trace - disc;
  const cplx lambda2 = std::abs(lambda1) > 0.0 ? det / lambda1 : cplx(0.0);

  EigenDecomp out;
  out.hermitian_input = false;
  const double scale = std::max(1.0, m.norm());
  const GeneralMatrix shifted = m - half_trace * GeneralMatrix::Identity();

  if (2.0 * std::abs(disc) <= kDefectiveGap * scale) {
    out.eigenvalues = {half_trace, half_trace};
    if (shifted.cwiseAbs().maxCoeff() <= kDefectiveGap * scale) {
      out.diagonalizable = true;
      out.eigenvectors = GeneralMatrix::Identity();
      return out;
    }
    // Nilpotent part N: v = N e_j lies in its kernel and w = e_j is a
    // generalized eigenvector with N w = v.
    out.diagonalizable = false;
    const int j = shifted.col(0).norm() >= shifted.col(1).norm() ? 0 : 1;
    const Eigen::Vector2cd v = shifted.col(j);
    const double n = v.norm();
    out.eigenvectors.col(0) = v / n;
    out.eigenvectors.col(1) = Eigen::Vector2cd::Unit(j) / n;
    return out;
  }

  out.diagonalizable = true;
  out.eigenvalues = {lambda1, lambda2};
  out.eigenvectors.col(0) = eigenvector_for(m, lambda1);
  out.eigenvectors.col(1) = eigenvector_for(m, lambda2);
  return out;
}

bool is_invertible(const GeneralMatrix& m, double tol) {
  return std::abs(m.determinant()) > tol;
}

std::string_view to_string(LogmMethod method) {
  return method == LogmMethod::eigen ? "eigen" : "jordan";
}

cplx principal_log(cplx z) {
  if (z.imag() == 0.0 && z.real() < 0.0) return {std::log(-z.real()), kPi};
  cplx l = std::log(z);
  if (l.imag() <= -kPi) l.imag(kPi);
  return l;
}

LogmResult logm(const GeneralMatrix& m, double invert_tol) {
  require_finite(m, "logm");
  if (!is_invertible(m, invert_tol)) {
    char msg[96];
    std::snprintf(msg, sizeof msg, "logm: matrix is not invertible (|det| <= %g)", invert_tol);
    throw NotInvertibleError(msg);
  }
  const EigenDecomp eig = eigen2(m);

  LogmResult out;
  if (eig.diagonalizable) {
    out.method = LogmMethod::eigen;
    out.matrix = apply_diag(eig, principal_log(eig.eigenvalues[0]),
                            principal_log(eig.eigenvalues[1]));
  } else {
    // log(lambda I + N) = log(lambda) I + N / lambda, with N = P J0 P^-1 and
    // J0 the nilpotent Jordan block.
    out.method = LogmMethod::jordan;
    const cplx lambda = eig.eigenvalues[0];
    const GeneralMatrix& p = eig.eigenvectors;
    GeneralMatrix j0 = GeneralMatrix::Zero();
    j0(0, 1) = 1.0 / lambda;
    out.matrix = principal_log(lambda) * GeneralMatrix::Identity() + p * j0 * p.inverse();
  }
  if (eig.hermitian_input) {
    // A Hermitian input with positive spectrum has a Hermitian logarithm whose
    // off-diagonal imaginary parts are inherited, not acquired.
    out.is_complex = std::abs(principal_log(eig.eigenvalues[0]).imag()) > kMatrixTol ||
                     std::abs(principal_log(eig.eigenvalues[1]).imag()) > kMatrixTol;
  } else {
    out.is_complex = out.matrix.imag().cwiseAbs().maxCoeff() > kMatrixTol;
  }
  return out;
}

GeneralMatrix expm(const GeneralMatrix& m) {
  require_finite(m, "expm");
  const EigenDecomp eig = eigen2(m);
  if (eig.diagonalizable &&
      (eig.hermitian_input || condition_number(eig.eigenvectors) <= kExpmMaxCondition)) {
    return apply_diag(eig, std::exp(eig.eigenvalues[0]), std::exp(eig.eigenvalues[1]));
  }
  return expm_taylor(m);
}

}  // namespace ebell
