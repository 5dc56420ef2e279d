#include "ebell/inequality.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ebell/errors.hpp"
#include "ebell/matlog.hpp"

namespace ebell {

std::string_view to_string(IneqKind kind) {
  switch (kind) {
    case IneqKind::wigner_prob: return "wigner_prob";
    case IneqKind::matrix_entrywise: return "matrix_entrywise";
    case IneqKind::matrix_loewner: return "matrix_loewner";
    case IneqKind::entropic: return "entropic";
    case IneqKind::cerf_adami: return "cerf_adami";
  }
  return "unknown";
}

std::string_view to_string(MatrixMode mode) {
  return mode == MatrixMode::entrywise ? "entrywise" : "loewner";
}

MatrixMode parse_mode(std::string_view text) {
  if (text == "entrywise") return MatrixMode::entrywise;
  if (text == "loewner") return MatrixMode::loewner;
  throw InvalidInputError("invalid mode '" + std::string(text) + "' (expected entrywise or loewner)");
}

IneqVerdict make_verdict(IneqKind kind, std::vector<double> margins, VerdictInputs inputs) {
  IneqVerdict v;
  v.kind = kind;
  v.worst_margin = margins.empty() ? 0.0 : *std::min_element(margins.begin(), margins.end());
  v.holds = v.worst_margin >= -kHoldTol;
  v.margins = std::move(margins);
  v.inputs = std::move(inputs);
  return v;
}

JointDist singlet_joint(double theta) {
  const double s = std::sin(0.5 * theta);
  const double c = std::cos(0.5 * theta);
  const double same = 0.5 * s * s;
  const double opposite = 0.5 * c * c;
  JointDist j;
  j.p = {{{same, opposite}, {opposite, same}}};
  return j;
}

double singlet_same_plus(double beta_x, double beta_y) {
  const double s = std::sin(0.5 * (beta_x - beta_y));
  return 0.5 * s * s;
}

IneqVerdict check_wigner_prob(double beta_a, double beta_b, double beta_c) {
  VerdictInputs in;
  in.angles = {normalize_angle(beta_a), normalize_angle(beta_b), normalize_angle(beta_c)};
  const auto [a, b, c] = in.angles;
  const double lhs = singlet_same_plus(a, c);
  const double rhs = singlet_same_plus(a, b) + singlet_same_plus(b, c);
  IneqVerdict v = make_verdict(IneqKind::wigner_prob, {rhs - lhs}, std::move(in));
  v.lhs = lhs;
  v.rhs = rhs;
  return v;
}

namespace {

DensityMatrix measurement_state(double beta, Sign sign, double alpha) {
  if (alpha == 0.0) return density_xz(beta, sign);
  return density_from_ket(make_ket(Axis(alpha, beta), sign));
}

}  // namespace

DensityMatrix pair_mixture(double beta_x, Sign sign_x, double beta_y, Sign sign_y, double alpha) {
  return mix_pair(measurement_state(beta_x, sign_x, alpha), measurement_state(beta_y, sign_y, alpha));
}

std::array<double, 4> entrywise_margins(const GeneralMatrix& lhs, const GeneralMatrix& rhs) {
  if (lhs.imag().cwiseAbs().maxCoeff() > kMatrixTol ||
      rhs.imag().cwiseAbs().maxCoeff() > kMatrixTol) {
    throw NotComparableError("entrywise order is undefined for complex matrix entries");
  }
  const Eigen::Matrix2d diff = rhs.real() - lhs.real();
  return {diff(0, 0), diff(0, 1), diff(1, 0), diff(1, 1)};
}

IneqVerdict check_matrix(double beta_a, double beta_b, double beta_c, const SignTriple& signs,
                         MatrixMode mode, double alpha) {
  VerdictInputs in;
  in.angles = {normalize_angle(beta_a), normalize_angle(beta_b), normalize_angle(beta_c)};
  in.signs = signs;
  in.mode = mode;
  in.alpha = normalize_angle(alpha);
  const auto [a, b, c] = in.angles;
  const auto [sa, sb, sc] = signs;

  const DensityMatrix rho_ab = pair_mixture(a, sa, b, sb, in.alpha);
  const DensityMatrix rho_ac = pair_mixture(a, sa, c, sc, in.alpha);
  const DensityMatrix rho_cb = pair_mixture(c, sc, b, sb, in.alpha);
  const GeneralMatrix rhs = rho_ab.matrix() + rho_ac.matrix();

  if (mode == MatrixMode::entrywise) {
    const auto m = entrywise_margins(rho_cb.matrix(), rhs);
    return make_verdict(IneqKind::matrix_entrywise, {m.begin(), m.end()}, std::move(in));
  }
  const EigenDecomp eig = eigen2(rhs - rho_cb.matrix());
  const double lambda_min = std::min(eig.eigenvalues[0].real(), eig.eigenvalues[1].real());
  return make_verdict(IneqKind::matrix_loewner, {lambda_min}, std::move(in));
}

IneqVerdict check_entropy(double beta_a, double beta_b, double beta_c, const SignTriple& signs) {
  VerdictInputs in;
  in.angles = {normalize_angle(beta_a), normalize_angle(beta_b), normalize_angle(beta_c)};
  in.signs = signs;
  in.units = Units::nats;
  const auto [a, b, c] = in.angles;
  const auto [sa, sb, sc] = signs;

  const double sigma_ab = von_neumann(pair_mixture(a, sa, b, sb));
  const double sigma_ac = von_neumann(pair_mixture(a, sa, c, sc));
  const double sigma_cb = von_neumann(pair_mixture(c, sc, b, sb));
  const double lhs = sigma_cb;
  const double rhs = sigma_ab + sigma_ac;

  IneqVerdict v = make_verdict(IneqKind::entropic, {rhs - lhs}, std::move(in));
  v.lhs = lhs;
  v.rhs = rhs;
  v.lhs_thermo = thermo(lhs);
  v.rhs_thermo = thermo(rhs);
  return v;
}

IneqVerdict check_cerf_adami(double theta_ab, double theta_bc, double theta_ac, Units units) {
  VerdictInputs in;
  in.angles = {normalize_angle(theta_ab), normalize_angle(theta_bc), normalize_angle(theta_ac)};
  in.units = units;
  const auto [ab, bc, ac] = in.angles;
  const auto conditional = [units](double theta) {
    return conditional_mutual(singlet_joint(theta), units).h_a_given_b;
  };
  const double lhs = conditional(ac);
  const double rhs = conditional(ab) + conditional(bc);
  IneqVerdict v = make_verdict(IneqKind::cerf_adami, {rhs - lhs}, std::move(in));
  v.lhs = lhs;
  v.rhs = rhs;
  return v;
}

}  // namespace ebell
