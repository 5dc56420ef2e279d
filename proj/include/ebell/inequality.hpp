#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "ebell/entropy.hpp"
#include "ebell/qstate.hpp"

namespace ebell {

enum class IneqKind { wigner_prob, matrix_entrywise, matrix_loewner, entropic, cerf_adami };
std::string_view to_string(IneqKind kind);

enum class MatrixMode { entrywise, loewner };
std::string_view to_string(MatrixMode mode);
MatrixMode parse_mode(std::string_view text);

// A verdict holds when its worst margin is at least -kHoldTol.
inline constexpr double kHoldTol = 1e-12;

using SignTriple = std::array<Sign, 3>;
inline constexpr SignTriple kAllPlus{Sign::plus, Sign::plus, Sign::plus};

// Angles checked. For cerf_adami the three slots carry the gaps
// (theta_ab, theta_bc, theta_ac); every other kind uses (beta_a, beta_b, beta_c).
struct VerdictInputs {
  std::array<double, 3> angles{};
  std::optional<SignTriple> signs;
  std::optional<MatrixMode> mode;
  std::optional<Units> units;
  double alpha = 0.0;
};

struct IneqVerdict {
  IneqKind kind = IneqKind::wigner_prob;
  bool holds = true;
  // RHS - LHS per compared quantity.
  std::vector<double> margins;
  double worst_margin = 0.0;
  VerdictInputs inputs;
  // Scalar kinds only.
  std::optional<double> lhs;
  std::optional<double> rhs;
  // Entropic kind only: lhs and rhs scaled to J/K.
  std::optional<double> lhs_thermo;
  std::optional<double> rhs_thermo;
};

IneqVerdict make_verdict(IneqKind kind, std::vector<double> margins, VerdictInputs inputs);

// Singlet outcome law for analyzers separated by theta:
// P(+,+) = P(-,-) = sin^2(theta/2)/2, P(+,-) = P(-,+) = cos^2(theta/2)/2.
JointDist singlet_joint(double theta);

// P(x+; y+) = sin^2((beta_x - beta_y)/2) / 2.
double singlet_same_plus(double beta_x, double beta_y);

// P(a+;c+) <= P(a+;b+) + P(b+;c+).
IneqVerdict check_wigner_prob(double beta_a, double beta_b, double beta_c);

// rho_xy: equal mixture of the x-measurement state and the y-measurement
// state. alpha != 0 lifts both axes out of the x-z plane by a common phase.
DensityMatrix pair_mixture(double beta_x, Sign sign_x, double beta_y, Sign sign_y,
                           double alpha = 0.0);

// Entries of rhs - lhs in row-major order. Throws NotComparableError if any
// entry of either matrix has |imag| > 1e-12.
std::array<double, 4> entrywise_margins(const GeneralMatrix& lhs, const GeneralMatrix& rhs);

// rho_cb <= rho_ab + rho_ac, entrywise or in Loewner order.
IneqVerdict check_matrix(double beta_a, double beta_b, double beta_c,
                         const SignTriple& signs = kAllPlus,
                         MatrixMode mode = MatrixMode::entrywise, double alpha = 0.0);

// sigma(rho_cb) <= sigma(rho_ab) + sigma(rho_ac), margin in nats.
IneqVerdict check_entropy(double beta_a, double beta_b, double beta_c,
                          const SignTriple& signs = kAllPlus);

// H(A|C) <= H(A|B) + H(B|C) on singlet outcome statistics.
IneqVerdict check_cerf_adami(double theta_ab, double theta_bc, double theta_ac,
                             Units units = Units::nats);

}  // namespace ebell
