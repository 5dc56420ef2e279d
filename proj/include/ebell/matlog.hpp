#pragma once

#include <array>
#include <string_view>

#include <Eigen/LU>

#include "ebell/qstate.hpp"

namespace ebell {

// Eigen-structure of a 2x2 complex matrix.
//
// For Hermitian input the eigenvalues are real (imaginary parts exactly zero),
// sorted in descending order, and the eigenvector columns are orthonormal.
// For defective input (coincident eigenvalues, single eigenvector) column 0
// holds the eigenvector and column 1 a generalized eigenvector w with
// (M - lambda I) w = column 0.
struct EigenDecomp {
  std::array<cplx, 2> eigenvalues;
  GeneralMatrix eigenvectors;
  bool diagonalizable = true;
  bool hermitian_input = false;
};

// Eigenvalue gap below which the eigen path is abandoned for the Jordan path,
// relative to max(1, ||M||).
inline constexpr double kDefectiveGap = 1e-10;

// Closed-form eigendecomposition. Throws InvalidInputError on non-finite
// entries.
EigenDecomp eigen2(const GeneralMatrix& m);

inline constexpr double kInvertibleTol = 1e-12;

// |det m| > tol.
bool is_invertible(const GeneralMatrix& m, double tol = kInvertibleTol);

enum class LogmMethod { eigen, jordan };
std::string_view to_string(LogmMethod method);

struct LogmResult {
  GeneralMatrix matrix;
  LogmMethod method = LogmMethod::eigen;
  // The logarithm picked up an imaginary part: for Hermitian input, some
  // eigenvalue of the logarithm has |imag| > 1e-12 (a negative eigenvalue of
  // the input); otherwise any entry has |imag| > 1e-12.
  bool is_complex = false;
};

// Principal logarithm, Im(log z) in (-pi, pi].
cplx principal_log(cplx z);

// Principal matrix logarithm.
//
// Diagonalizable input goes through V diag(log lambda) V^-1 (V^H for
// Hermitian input). Defective input is brought to the Jordan block
// lambda I + N, where log(lambda I + N) = log(lambda) I + N / lambda, and
// transformed back.
//
// Throws NotInvertibleError when |det m| <= invert_tol, InvalidInputError on
// non-finite entries.
LogmResult logm(const GeneralMatrix& m, double invert_tol = kInvertibleTol);

// Matrix exponential. Uses the eigen path for well-conditioned diagonalizable
// input and a scaled-and-squared Taylor series otherwise. Throws
// InvalidInputError on non-finite entries.
GeneralMatrix expm(const GeneralMatrix& m);

}  // namespace ebell
