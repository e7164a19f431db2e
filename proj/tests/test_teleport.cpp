#include <gtest/gtest.h>

#include <cmath>

#include "qcorr/dynamics.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/quadrature.hpp"
#include "qcorr/sampling.hpp"
#include "qcorr/teleport.hpp"
#include "test_support.hpp"

namespace qcorr {
namespace {

using test::kPi;
using test::max_abs;

TEST(GaussLegendre, KnownRules) {
  const GaussLegendreRule two = gauss_legendre(2);
  EXPECT_NEAR(two.nodes[0], -1.0 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(two.nodes[1], 1.0 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(two.weights[0], 1.0, 1e-15);
  const GaussLegendreRule three = gauss_legendre(3);
  EXPECT_NEAR(three.nodes[1], 0.0, 1e-15);
  EXPECT_NEAR(three.weights[1], 8.0 / 9.0, 1e-15);
  EXPECT_NEAR(three.nodes[2], std::sqrt(0.6), 1e-15);
  EXPECT_THROW(gauss_legendre(0), InvalidInput);
}

TEST(GaussLegendre, ExactForPolynomialsUpToDegree2nMinus1) {
  for (int n : {1, 5, 16, 64, 128}) {
    const GaussLegendreRule rule = gauss_legendre(n);
    double wsum = 0.0;
    for (double w : rule.weights) wsum += w;
    EXPECT_NEAR(wsum, 2.0, 1e-13);
    for (int k = 0; k <= std::min(2 * n - 1, 40); ++k) {
      double integral = 0.0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) integral += rule.weights[i] * std::pow(rule.nodes[i], k);
      const double exact = k % 2 == 1 ? 0.0 : 2.0 / (k + 1);
      EXPECT_NEAR(integral, exact, 1e-13) << "n=" << n << " k=" << k;
    }
  }
}

TEST(Channel, BellResourceProbabilities) {
  const auto bell = bell_projectors();
  const TeleportChannel singlet = build_channel(bell[0]);
  EXPECT_NEAR(singlet.p(0, 0), 1.0, 1e-15);
  EXPECT_NEAR(singlet.p.sum(), 1.0, 1e-15);
  const TeleportChannel phi_plus = build_channel(bell[2]);
  EXPECT_NEAR(phi_plus.p(2, 2), 1.0, 1e-15);
  const TeleportChannel mixed = build_channel(test::maximally_mixed());
  EXPECT_LT((mixed.p.array() - 1.0 / 16).abs().maxCoeff(), 1e-15);
}

TEST(Channel, SingletTransportsPerfectly) {
  const TeleportChannel ch = build_channel(bell_projectors()[0]);
  std::mt19937_64 rng(51);
  for (int i = 0; i < 20; ++i) {
    const InputPureState s = random_input(rng);
    EXPECT_LT(max_abs(teleport_output(ch, s).matrix() - input_state(s).matrix()), 1e-15);
    EXPECT_NEAR(fidelity_pointwise(ch, s), 1.0, 1e-12);
  }
}

TEST(Channel, MaximallyMixedResourceDepolarisesCompletely) {
  const TeleportChannel ch = build_channel(test::maximally_mixed());
  const InputPureState s{1.1, 0.4};
  EXPECT_LT(max_abs(teleport_output(ch, s).matrix() - Matrix4c::Identity() / 4.0), 1e-15);
  EXPECT_NEAR(fidelity_pointwise(ch, s), 0.25, 1e-12);
}

TEST(Channel, PhiPlusResourceSwapsTheExcitation) {
  // s_y x s_y exchanges |10> and |01>, so F = |<psi|swap|psi>|^2 = sin^2(theta) cos^2(phi).
  const TeleportChannel ch = build_channel(bell_projectors()[2]);
  EXPECT_NEAR(fidelity_pointwise(ch, {kPi / 2, 0.0}), 1.0, 1e-12);
  for (double th : {0.3, 1.0, 2.5}) {
    for (double ph : {0.0, 0.7, 4.0}) {
      const double expected = std::pow(std::sin(th) * std::cos(ph), 2);
      EXPECT_NEAR(fidelity_pointwise(ch, {th, ph}), expected, 1e-12);
    }
  }
  EXPECT_NEAR(fidelity_average(ch), 1.0 / 3.0, 1e-12);
}

TEST(Channel, JcResourceAtZeroTimeIsPhiPlus) {
  // The Werner-like state at purity 1 and alpha = pi/4 is |phi+>, not the
  // singlet, so the fidelity is that of the phi+ channel rather than 1.
  const TeleportChannel ch = build_channel(jc_state({{1.0, kPi / 4}, 0.0}));
  const InputPureState s{kPi / 3, kPi / 5};
  EXPECT_NEAR(fidelity_pointwise(ch, s), std::pow(std::sin(s.theta) * std::cos(s.phi), 2), 1e-12);
  EXPECT_NEAR(fidelity_average(ch), 1.0 / 3.0, 1e-12);
}

TEST(Channel, RandomOutputsAreValidAndPathsAgree) {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 500; ++i) {
    const TeleportChannel ch = build_channel(random_density_matrix(rng, 1 + i % 4));
    EXPECT_NEAR(ch.p.sum(), 1.0, 1e-12);
    EXPECT_GE(ch.p.minCoeff(), 0.0);
    const InputPureState s = random_input(rng);
    const DensityMatrix4 out = teleport_output(ch, s);
    EXPECT_TRUE(validate(out.matrix()).passed);
    const Vector4c psi = s.ket();
    const double shortcut = (psi.adjoint() * out.matrix() * psi)(0, 0).real();
    EXPECT_NEAR(fidelity_pointwise(ch, s), shortcut, 1e-10);
  }
}

TEST(Average, ExactLimits) {
  EXPECT_NEAR(fidelity_average(build_channel(bell_projectors()[0])), 1.0, 1e-12);
  EXPECT_NEAR(fidelity_average(build_channel(test::maximally_mixed())), 0.25, 1e-12);
  EXPECT_THROW(fidelity_average(build_channel(test::maximally_mixed()), {32, 64}), InvalidInput);
  EXPECT_THROW(fidelity_average(build_channel(test::maximally_mixed()), {64, 63}), InvalidInput);
}

TEST(Average, MatchesMonteCarloOfPointwiseFidelity) {
  std::mt19937_64 rng(53);
  const TeleportChannel ch = build_channel(random_density_matrix(rng));
  double sum = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const InputPureState s = random_input(rng);
    const Vector4c psi = s.ket();
    sum += (psi.adjoint() * twirl(ch.p, psi * psi.adjoint()) * psi)(0, 0).real();
  }
  EXPECT_NEAR(fidelity_average(ch), sum / n, 3e-3);
}

TEST(Average, QuadratureConverged) {
  std::mt19937_64 rng(54);
  for (int i = 0; i < 20; ++i) {
    const TeleportChannel ch = build_channel(random_density_matrix(rng));
    EXPECT_NEAR(fidelity_average(ch, {64, 64}), fidelity_average(ch, {128, 128}), 1e-10);
  }
}

TEST(Average, SeparableWernerLikeResourcesStayBelowClassicalBound) {
  for (int i = 0; i <= 40; ++i) {
    for (double alpha : {0.0, kPi / 8, kPi / 4, kPi / 3, kPi / 2}) {
      const double purity = (1.0 / 3.0) * i / 40.0;
      EXPECT_LE(fidelity_average(build_channel(werner_like({purity, alpha}))), 2.0 / 3.0 + 1e-9);
    }
  }
}

TEST(Average, DephasingResourceDoesNotDependOnTime) {
  // The envelope drops out of the average fidelity for this family.
  for (double purity : {1.0, 0.8, 0.6, 0.4}) {
    const double at_zero = fidelity_average(build_channel(dephasing_state({{purity, kPi / 4}, 1.0, 5.0, 0.0})));
    for (double t : {0.7, 3.0, 20.0, 80.0}) {
      const double later = fidelity_average(build_channel(dephasing_state({{purity, kPi / 4}, 1.0, 5.0, t})));
      EXPECT_NEAR(later, at_zero, 1e-12);
    }
  }
  EXPECT_NEAR(fidelity_average(build_channel(dephasing_state({{0.8, kPi / 4}, 1.0, 0.5, 2.0}))), 0.27666666666666667,
              1e-9);
}

TEST(Average, JcFidelityIsNotMonotoneInPurity) {
  // At gamma t = 2 the purity-0.4 resource teleports better than purity 0.6,
  // so pointwise ordering in purity does not hold on the JC time axis.
  const auto fav = [](double purity) { return fidelity_average(build_channel(jc_state({{purity, kPi / 4}, 2.0}))); };
  EXPECT_LT(fav(0.6), fav(0.4));
  EXPECT_GT(fav(1.0), fav(0.8));
}

TEST(ClosedForms, DephasingAverageAsWritten) {
  const ClosedFidelity pure = dephasing_fav_closed({{1.0, kPi / 4}, 1.0, 1.0, 0.0}, {kPi / 3, 0.0});
  EXPECT_NEAR(pure.f_av, 1.0 / 3.0, 1e-15);
  const ClosedFidelity mixed = dephasing_fav_closed({{0.0, kPi / 4}, 1.0, 1.0, 0.0}, {kPi / 3, 0.0});
  EXPECT_NEAR(mixed.f_av, 1.0 / 24.0 + 1.0 / 48.0, 1e-15);
}

TEST(ClosedForms, JcOutputEntriesOnTheirOwnState) {
  // kappa, vartheta, Delta and Theta reproduce the twirl of the state they
  // are written for; chi and zeta do not (see the conformance ledger).
  const JCParams p{{1.0, kPi / 4}, 0.3};
  const InputPureState s{kPi / 3, kPi / 5};
  const JCOutputElements e = jc_output_closed(p, s);
  const Matrix4c out = twirl(build_channel(jc_state(p)).p, input_state(s).matrix());
  EXPECT_NEAR(e.kappa, out(k00, k00).real(), 1e-12);
  EXPECT_NEAR(e.vartheta, out(k00, k11).real(), 1e-12);
  EXPECT_NEAR(std::abs(e.delta - out(k01, k10)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(e.big_theta - out(k10, k01)), 0.0, 1e-12);
  EXPECT_GT(std::abs(e.chi - out(k01, k01).real()), 1e-3);
}

}  // namespace
}  // namespace qcorr
