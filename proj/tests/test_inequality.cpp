#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ebell/errors.hpp"
#include "ebell/inequality.hpp"
#include "ebell/matlog.hpp"
#include "oracles.hpp"

namespace ebell {
namespace {

// mpmath, 30 digits.
constexpr double kCerfLhs = 0.245775366668471098;  // h(sin^2(pi/12))
constexpr double kCerfRhs = 0.172544643910064780;  // 2 h(sin^2(pi/24))

void expect_consistent(const IneqVerdict& v) {
  ASSERT_FALSE(v.margins.empty());
  EXPECT_EQ(v.worst_margin, *std::min_element(v.margins.begin(), v.margins.end()));
  EXPECT_EQ(v.holds, v.worst_margin >= -1e-12);
}

TEST(SingletJoint, Examples) {
  const JointDist j0 = singlet_joint(0.0);
  EXPECT_EQ(j0.p[0][1], 0.5);
  EXPECT_EQ(j0.p[1][0], 0.5);
  EXPECT_EQ(j0.p[0][0], 0.0);
  EXPECT_EQ(j0.p[1][1], 0.0);

  const JointDist j1 = singlet_joint(kPi / 2);
  for (const auto& row : j1.p)
    for (double x : row) EXPECT_NEAR(x, 0.25, 1e-15);

  const JointDist j2 = singlet_joint(kPi / 3);
  EXPECT_NEAR(j2.p[0][0], 0.125, 1e-15);
  EXPECT_NEAR(j2.p[1][1], 0.125, 1e-15);
  EXPECT_NEAR(j2.p[0][1], 0.375, 1e-15);
  EXPECT_NEAR(j2.p[1][0], 0.375, 1e-15);
}

TEST(SingletJoint, ValidWithUniformMarginals) {
  for (int i = 0; i < 100; ++i) {
    const JointDist j = singlet_joint(i * 0.1);
    EXPECT_NO_THROW(j.validate());
    EXPECT_NEAR(j.p[0][0] + j.p[0][1], 0.5, 1e-15);
    EXPECT_NEAR(j.p[0][0] + j.p[1][0], 0.5, 1e-15);
  }
}

TEST(CheckWignerProb, Examples) {
  const IneqVerdict v = check_wigner_prob(0, kPi / 3, 2 * kPi / 3);
  EXPECT_NEAR(*v.lhs, 0.375, 1e-12);
  EXPECT_NEAR(*v.rhs, 0.25, 1e-12);
  EXPECT_NEAR(v.worst_margin, -0.125, 1e-12);
  EXPECT_FALSE(v.holds);
  expect_consistent(v);

  const IneqVerdict zero = check_wigner_prob(0, 0, 0);
  EXPECT_TRUE(zero.holds);
  EXPECT_EQ(zero.worst_margin, 0.0);

  const IneqVerdict edge = check_wigner_prob(0, kPi / 2, kPi);
  EXPECT_NEAR(*edge.lhs, 0.5, 1e-15);
  EXPECT_NEAR(*edge.rhs, 0.5, 1e-15);
  EXPECT_TRUE(edge.holds);
}

TEST(CheckWignerProb, ShiftInvariant) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, kTwoPi);
  for (int i = 0; i < 200; ++i) {
    const double a = u(rng), b = u(rng), c = u(rng), shift = u(rng);
    EXPECT_NEAR(check_wigner_prob(a, b, c).worst_margin,
                check_wigner_prob(a + shift, b + shift, c + shift).worst_margin, 1e-12);
  }
}

TEST(CheckMatrix, Examples) {
  const IneqVerdict v = check_matrix(kPi / 2, 0, kPi);
  ASSERT_EQ(v.kind, IneqKind::matrix_entrywise);
  EXPECT_TRUE(v.holds);
  // rho_ab + rho_ac - rho_cb = [[1, 1/2], [1/2, 1]] - I/2
  EXPECT_NEAR(v.margins[0], 0.5, 1e-12);
  EXPECT_NEAR(v.margins[1], 0.5, 1e-12);
  EXPECT_NEAR(v.margins[2], 0.5, 1e-12);
  EXPECT_NEAR(v.margins[3], 0.5, 1e-12);
  const GeneralMatrix cb = pair_mixture(kPi, Sign::plus, 0, Sign::plus).matrix();
  EXPECT_LE(max_abs_diff(cb, GeneralMatrix::Identity() * 0.5), 1e-12);

  const IneqVerdict same = check_matrix(0, 0, 0);
  EXPECT_TRUE(same.holds);
  EXPECT_NEAR(same.margins[0], 1.0, 1e-15);

  const IneqVerdict bad = check_matrix(3 * kPi / 2, 0, 0);
  EXPECT_FALSE(bad.holds);
  EXPECT_NEAR(bad.margins[1], -0.5, 1e-12);
  EXPECT_NEAR(bad.margins[2], -0.5, 1e-12);
  EXPECT_NEAR(bad.worst_margin, -0.5, 1e-12);
  expect_consistent(bad);
}

TEST(CheckMatrix, MinusOutcomeBreaksPositivity) {
  // rho_ab = rho_ac = [[3/4,-1/4],[-1/4,1/4]], rho_cb = [[1,0],[0,0]]
  const IneqVerdict v = check_matrix(kPi / 2, 0, 0, {Sign::minus, Sign::plus, Sign::plus});
  EXPECT_FALSE(v.holds);
  EXPECT_NEAR(v.margins[0], 0.5, 1e-12);
  EXPECT_NEAR(v.margins[1], -0.5, 1e-12);
  EXPECT_NEAR(v.margins[2], -0.5, 1e-12);
  EXPECT_NEAR(v.margins[3], 0.5, 1e-12);
}

TEST(CheckMatrix, OffPlanePhaseIsNotComparableEntrywise) {
  EXPECT_THROW(check_matrix(1.0, 0.5, 2.0, kAllPlus, MatrixMode::entrywise, 0.4),
               NotComparableError);
  const IneqVerdict loewner = check_matrix(1.0, 0.5, 2.0, kAllPlus, MatrixMode::loewner, 0.4);
  EXPECT_EQ(loewner.kind, IneqKind::matrix_loewner);
  expect_consistent(loewner);
}

TEST(CheckMatrix, EntrywiseMarginsRejectComplexEntries) {
  GeneralMatrix a = GeneralMatrix::Identity();
  GeneralMatrix b = GeneralMatrix::Identity();
  b(0, 1) = cplx(0.0, 1e-9);
  EXPECT_THROW(entrywise_margins(a, b), NotComparableError);
  b(0, 1) = cplx(0.0, 1e-13);
  EXPECT_NO_THROW(entrywise_margins(a, b));
}

TEST(CheckMatrix, LoewnerMatchesReferenceEigenvalues) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(0.0, kTwoPi);
  std::bernoulli_distribution coin(0.5);
  for (int i = 0; i < 500; ++i) {
    const double a = u(rng), b = u(rng), c = u(rng);
    const SignTriple s{coin(rng) ? Sign::plus : Sign::minus, coin(rng) ? Sign::plus : Sign::minus,
                       coin(rng) ? Sign::plus : Sign::minus};
    const IneqVerdict v = check_matrix(a, b, c, s, MatrixMode::loewner);
    const GeneralMatrix diff = pair_mixture(a, s[0], b, s[1]).matrix() +
                               pair_mixture(a, s[0], c, s[2]).matrix() -
                               pair_mixture(c, s[2], b, s[1]).matrix();
    const auto ev = oracle::reference_eigenvalues(diff);
    EXPECT_NEAR(v.worst_margin, std::min(ev[0].real(), ev[1].real()), 1e-12);
    expect_consistent(v);
  }
}

// Brute force over the full grid against the closed-form reduction.
TEST(CheckMatrixProperty, EntrywiseRegionLaw) {
  constexpr int n = 72;
  const double step = kPi / 36;
  int mismatches = 0;
  for (int i = 0; i < n; ++i) {
    const double a = i * step;
    const auto expected = oracle::entrywise_region_margins(a);
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const IneqVerdict v = check_matrix(a, j * step, k * step);
        for (int m = 0; m < 4; ++m) {
          if (std::abs(v.margins[m] - expected[m]) > 1e-12) ++mismatches;
        }
        if (v.holds != oracle::entrywise_region_holds(a)) ++mismatches;
      }
    }
  }
  EXPECT_EQ(mismatches, 0);
}

TEST(CheckEntropy, Examples) {
  const IneqVerdict zero = check_entropy(0, 0, 0);
  EXPECT_TRUE(zero.holds);
  EXPECT_NEAR(zero.worst_margin, 0.0, 1e-14);

  // beta_a == beta_b: sigma_ab = 0 and the other two mixtures share a gap.
  for (double c : {0.3, 1.7, 4.0}) {
    const IneqVerdict v = check_entropy(1.1, 1.1, c);
    EXPECT_NEAR(v.worst_margin, 0.0, 1e-12);
    EXPECT_TRUE(v.holds);
  }

  const IneqVerdict v = check_entropy(kPi / 2, 0, kPi);
  const double h = oracle::mixture_entropy(kPi / 2);
  EXPECT_NEAR(*v.lhs, std::log(2.0), 1e-12);
  EXPECT_NEAR(*v.rhs, 2 * h, 1e-12);
  EXPECT_NEAR(v.worst_margin, 0.139843880839429592, 1e-12);
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(*v.lhs_thermo, thermo(*v.lhs));
  EXPECT_EQ(*v.rhs_thermo, thermo(*v.rhs));
}

TEST(CheckEntropy, TraceRouteAgreesWhereInvertible) {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(0.0, kTwoPi);
  int compared = 0;
  for (int i = 0; i < 500; ++i) {
    const double a = u(rng), b = u(rng), c = u(rng);
    const DensityMatrix ab = pair_mixture(a, Sign::plus, b, Sign::plus);
    const DensityMatrix ac = pair_mixture(a, Sign::plus, c, Sign::plus);
    const DensityMatrix cb = pair_mixture(c, Sign::plus, b, Sign::plus);
    if (!is_invertible(ab.matrix()) || !is_invertible(ac.matrix()) || !is_invertible(cb.matrix())) {
      continue;
    }
    ++compared;
    const double trace_margin = von_neumann_tr(ab) + von_neumann_tr(ac) - von_neumann_tr(cb);
    EXPECT_NEAR(check_entropy(a, b, c).worst_margin, trace_margin, 1e-9);
  }
  EXPECT_GT(compared, 400);
}

TEST(CheckCerfAdami, Examples) {
  const IneqVerdict zero = check_cerf_adami(0, 0, 0);
  EXPECT_TRUE(zero.holds);
  EXPECT_EQ(zero.worst_margin, 0.0);

  const IneqVerdict v = check_cerf_adami(kPi / 12, kPi / 12, kPi / 6);
  EXPECT_FALSE(v.holds);
  EXPECT_NEAR(*v.lhs, oracle::singlet_conditional(kPi / 6), 1e-10);
  EXPECT_NEAR(*v.rhs, 2 * oracle::singlet_conditional(kPi / 12), 1e-10);
  EXPECT_NEAR(*v.lhs, kCerfLhs, 1e-10);
  EXPECT_NEAR(*v.rhs, kCerfRhs, 1e-10);

  const IneqVerdict ends = check_cerf_adami(kPi, kPi, kTwoPi);
  EXPECT_NEAR(*ends.lhs, 0.0, 1e-15);
  EXPECT_TRUE(ends.holds);

  const IneqVerdict bits = check_cerf_adami(kPi / 12, kPi / 12, kPi / 6, Units::bits);
  EXPECT_NEAR(bits.worst_margin, v.worst_margin / std::log(2.0), 1e-12);
}

TEST(CheckCerfAdamiProperty, MatchesScalarOracleOnRandomGaps) {
  std::mt19937_64 rng(100);
  std::uniform_real_distribution<double> u(0.0, kTwoPi);
  for (int i = 0; i < 100; ++i) {
    const double ab = u(rng), bc = u(rng), ac = u(rng);
    for (double scale : {1.0, 2.0}) {
      const IneqVerdict v = check_cerf_adami(scale * ab, scale * bc, scale * ac);
      const double expected = oracle::singlet_conditional(scale * ab) +
                              oracle::singlet_conditional(scale * bc) -
                              oracle::singlet_conditional(scale * ac);
      EXPECT_NEAR(v.worst_margin, expected, 1e-10);
      expect_consistent(v);
    }
  }
}

TEST(Verdict, HoldsTracksWorstMargin) {
  EXPECT_TRUE(make_verdict(IneqKind::wigner_prob, {0.1, -1e-13}, {}).holds);
  EXPECT_FALSE(make_verdict(IneqKind::wigner_prob, {0.1, -2e-12}, {}).holds);
  EXPECT_EQ(make_verdict(IneqKind::entropic, {0.3, -0.2, 0.1}, {}).worst_margin, -0.2);
  EXPECT_EQ(parse_mode("loewner"), MatrixMode::loewner);
  EXPECT_THROW(parse_mode("spectral"), InvalidInputError);
}

}  // namespace
}  // namespace ebell
