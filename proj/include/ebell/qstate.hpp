#pragma once

#include <complex>
#include <string>
#include <string_view>

#include <Eigen/Core>

namespace ebell {

using cplx = std::complex<double>;

// Arbitrary 2x2 complex matrix; may be non-Hermitian or singular.
using GeneralMatrix = Eigen::Matrix2cd;

// Entrywise absolute tolerance used for matrix equality and state validation.
inline constexpr double kMatrixTol = 1e-12;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Reduce an angle in radians to [0, 2pi).
double normalize_angle(double radians);

// Measurement direction. alpha is the phase on the |S_z;-> component and beta
// the rotation about the y axis. Both are kept in [0, 2pi).
class Axis {
 public:
  Axis() = default;
  Axis(double alpha, double beta);

  // Axis in the x-z plane (alpha = 0).
  static Axis xz(double beta) { return Axis(0.0, beta); }

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

 private:
  double alpha_ = 0.0;
  double beta_ = 0.0;
};

enum class Sign { plus, minus };

std::string_view to_string(Sign s);
// Accepts "+", "-", "plus", "minus". Throws InvalidInputError otherwise.
Sign parse_sign(std::string_view text);
inline double sign_factor(Sign s) { return s == Sign::plus ? 1.0 : -1.0; }

struct SpinKet {
  cplx c_plus;
  cplx c_minus;

  double norm() const;
};

// 2x2 Hermitian, unit-trace, positive-semidefinite matrix. Construction
// through from_matrix() validates those invariants, so every instance held
// by client code is a legal qubit state.
class DensityMatrix {
 public:
  // Throws InvalidStateError when m is not Hermitian, not unit trace or has
  // an eigenvalue below -tol.
  static DensityMatrix from_matrix(const GeneralMatrix& m, double tol = kMatrixTol);

  const GeneralMatrix& matrix() const { return m_; }
  cplx operator()(int row, int col) const { return m_(row, col); }

 private:
  explicit DensityMatrix(const GeneralMatrix& m) : m_(m) {}
  GeneralMatrix m_;

  friend DensityMatrix mix_pair(const DensityMatrix&, const DensityMatrix&);
};

// Spin state along `axis`: (cos(beta/2), +/- sin(beta/2) e^{i alpha}).
SpinKet make_ket(const Axis& axis, Sign sign);

// State orthogonal to make_ket(axis, plus), i.e. spin along -n:
// (sin(beta/2), -cos(beta/2) e^{i alpha}). The minus branch of make_ket is
// only orthogonal to the plus branch when cos(beta) = 0.
SpinKet make_antialigned_ket(const Axis& axis);

// |ket><ket|. Throws InvalidStateError when the ket norm deviates from 1 by
// more than 1e-9.
DensityMatrix density_from_ket(const SpinKet& ket);

// Projector for a measurement in the x-z plane:
//   [[cos^2(b/2),        +/-cos(b/2)sin(b/2)],
//    [+/-cos(b/2)sin(b/2), sin^2(b/2)       ]]
DensityMatrix density_xz(double beta, Sign sign);

// The general-axis outer product exactly as it is usually printed, with
// e^{i alpha} on both off-diagonals and e^{2i alpha} on the lower-right
// entry. Not Hermitian unless alpha is 0 or pi. Kept so the complex-logarithm
// path can be exercised on it.
GeneralMatrix paper_literal_density(const Axis& axis, Sign sign);

// Equal-weight incoherent mixture (rho_a + rho_b) / 2.
DensityMatrix mix_pair(const DensityMatrix& rho_a, const DensityMatrix& rho_b);

// Equal mixture of the aligned and antialigned (make_antialigned_ket)
// projectors along one axis. Always I/2.
DensityMatrix device_beam_density(const Axis& axis);

bool is_hermitian(const GeneralMatrix& m, double tol = kMatrixTol);
bool all_finite(const GeneralMatrix& m);
double max_abs_diff(const GeneralMatrix& a, const GeneralMatrix& b);

}  // namespace ebell
