#include "ebell/entropy.hpp"

#include <cmath>
#include <string>

#include "ebell/errors.hpp"
#include "ebell/matlog.hpp"

namespace ebell {
namespace {

constexpr double kClipWindow = 1e-12;
constexpr double kNegativeEigenvalueLimit = -1e-9;
constexpr double kNormalizationTol = 1e-9;

double plogp_sum(std::span<const double> p) {
  double h = 0.0;
  for (double x : p) {
    if (x > 0.0) h -= x * std::log(x);
  }
  return h;
}

}  // namespace

std::string_view to_string(Units units) { return units == Units::nats ? "nats" : "bits"; }

Units parse_units(std::string_view text) {
  if (text == "nats" || text == "nat") return Units::nats;
  if (text == "bits" || text == "bit") return Units::bits;
  throw InvalidInputError("invalid units '" + std::string(text) + "' (expected nats or bits)");
}

double entropy_of_spectrum(std::array<double, 2> eigenvalues) {
  for (double& l : eigenvalues) {
    if (!std::isfinite(l) || l < kNegativeEigenvalueLimit) {
      throw NotAStateError("eigenvalue " + std::to_string(l) + " is not a probability");
    }
    if (std::abs(l) <= kClipWindow) l = 0.0;
    if (std::abs(l - 1.0) <= kClipWindow) l = 1.0;
  }
  return plogp_sum(eigenvalues);
}

double von_neumann(const DensityMatrix& rho) { return entropy_report(rho).sigma; }

double von_neumann_tr(const DensityMatrix& rho, double invert_tol) {
  const LogmResult log_rho = logm(rho.matrix(), invert_tol);
  const cplx tr = -(rho.matrix() * log_rho.matrix).trace();
  if (std::abs(tr.imag()) >= 1e-10) {
    throw NumericalFailureError("von_neumann_tr: trace has imaginary residue " +
                                std::to_string(tr.imag()));
  }
  return tr.real();
}

double thermo(double sigma) {
  if (!(sigma >= 0.0)) throw DomainError("thermodynamic entropy needs sigma >= 0");
  return kBoltzmann * sigma;
}

EntropyReport entropy_report(const DensityMatrix& rho) {
  const EigenDecomp eig = eigen2(rho.matrix());
  EntropyReport r;
  r.basis_eigenvalues = {eig.eigenvalues[0].real(), eig.eigenvalues[1].real()};
  r.sigma = entropy_of_spectrum(r.basis_eigenvalues);
  r.s_thermo = thermo(r.sigma);
  return r;
}

double shannon(std::span<const double> p, Units units) {
  double total = 0.0;
  for (double x : p) {
    if (!std::isfinite(x) || x < 0.0) {
      throw InvalidDistributionError("probabilities must be finite and nonnegative");
    }
    total += x;
  }
  if (std::abs(total - 1.0) > kNormalizationTol) {
    throw InvalidDistributionError("probabilities sum to " + std::to_string(total) + ", not 1");
  }
  const double h = plogp_sum(p);
  return units == Units::nats ? h : h / std::log(2.0);
}

void JointDist::validate() const {
  double total = 0.0;
  for (const auto& row : p) {
    for (double x : row) {
      if (!std::isfinite(x) || x < 0.0) {
        throw InvalidDistributionError("joint distribution has a negative or non-finite entry");
      }
      total += x;
    }
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw InvalidDistributionError("joint distribution sums to " + std::to_string(total));
  }
}

ConditionalMutual conditional_mutual(const JointDist& joint, Units units) {
  joint.validate();
  const auto& p = joint.p;
  const std::array<double, 4> flat{p[0][0], p[0][1], p[1][0], p[1][1]};
  const std::array<double, 2> marginal_a{p[0][0] + p[0][1], p[1][0] + p[1][1]};
  const std::array<double, 2> marginal_b{p[0][0] + p[1][0], p[0][1] + p[1][1]};

  ConditionalMutual out;
  out.h_joint = shannon(flat, units);
  out.h_a = shannon(marginal_a, units);
  out.h_b = shannon(marginal_b, units);
  out.h_a_given_b = out.h_joint - out.h_b;
  out.h_b_given_a = out.h_joint - out.h_a;
  out.mutual = out.h_a + out.h_b - out.h_joint;
  return out;
}

}  // namespace ebell
