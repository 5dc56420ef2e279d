#pragma once

#include <array>
#include <span>
#include <string_view>

#include "ebell/qstate.hpp"

namespace ebell {

// Boltzmann constant in J/K (exact SI value).
inline constexpr double kBoltzmann = 1.380649e-23;

enum class Units { nats, bits };
std::string_view to_string(Units units);
Units parse_units(std::string_view text);

struct EntropyReport {
  double sigma = 0.0;     // nats
  double s_thermo = 0.0;  // J/K
  std::array<double, 2> basis_eigenvalues{};
};

// -sum lambda ln lambda over a density-matrix spectrum, with 0 ln 0 = 0.
// Eigenvalues within 1e-12 of 0 or 1 are clipped onto the boundary. Throws
// NotAStateError if any eigenvalue is below -1e-9.
double entropy_of_spectrum(std::array<double, 2> eigenvalues);

// Von Neumann entropy from the eigenvalues of rho (nats).
double von_neumann(const DensityMatrix& rho);

// -tr(rho log rho) through the matrix logarithm. Throws NotInvertibleError for
// singular rho; callers wanting pure states use von_neumann instead.
double von_neumann_tr(const DensityMatrix& rho, double invert_tol = 1e-12);

// k * sigma. Throws DomainError for negative sigma.
double thermo(double sigma);

EntropyReport entropy_report(const DensityMatrix& rho);

// Entries must be nonnegative and sum to 1 within 1e-9, otherwise
// InvalidDistributionError.
double shannon(std::span<const double> p, Units units = Units::nats);

// Rows index observer-1 outcome (+, -), columns observer-2 outcome (+, -).
struct JointDist {
  std::array<std::array<double, 2>, 2> p{};

  // Throws InvalidDistributionError unless all entries are >= 0 and sum to 1
  // within 1e-12.
  void validate() const;
};

struct ConditionalMutual {
  double h_a_given_b = 0.0;
  double h_b_given_a = 0.0;
  double mutual = 0.0;
  double h_joint = 0.0;
  double h_a = 0.0;
  double h_b = 0.0;
};

ConditionalMutual conditional_mutual(const JointDist& joint, Units units = Units::nats);

}  // namespace ebell
