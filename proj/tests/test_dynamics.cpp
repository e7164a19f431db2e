#include <gtest/gtest.h>

#include <cmath>

#include "qcorr/dynamics.hpp"
#include "qcorr/errors.hpp"
#include "test_support.hpp"

namespace qcorr {
namespace {

using test::kPi;
using test::max_abs;

TEST(JC, InitialStateIsWernerLike) {
  for (double g : {0.0, 0.5, 1.0}) {
    const WernerLikeParams w{g, 0.6};
    EXPECT_LT(max_abs(jc_state({w, 0.0}).matrix() - werner_like(w).matrix()), 1e-15);
  }
}

TEST(JC, MatchesUnitaryOracleOnRandomPoints) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const JCParams p{{unit(rng), unit(rng) * kPi / 2}, unit(rng) * 12.0};
    EXPECT_LT(max_abs(jc_state(p).matrix() - jc_unitary_oracle(p).matrix()), 1e-10);
  }
}

TEST(JC, OracleIsInsensitiveToLargerTruncation) {
  const JCParams p{{0.7, 0.9}, 3.3};
  EXPECT_LT(max_abs(jc_unitary_oracle(p, 3).matrix() - jc_unitary_oracle(p, 6).matrix()), 1e-12);
  EXPECT_THROW(jc_unitary_oracle(p, 2), InvalidInput);
}

TEST(JC, FrozenNoiseVariantAgreesOnlyForPureStates) {
  const auto as_matrix = [](const JCStateElements& e) { return x_state_matrix(e); };
  for (double gt : {0.4, 1.7, 5.0}) {
    const JCParams pure{{1.0, 0.5}, gt};
    EXPECT_LT(max_abs(as_matrix(jc_elements(pure)) - as_matrix(jc_elements_frozen_noise(pure))), 1e-15);
  }
  const JCParams mixed{{0.5, 0.5}, 1.0};
  EXPECT_GT(max_abs(as_matrix(jc_elements(mixed)) - as_matrix(jc_elements_frozen_noise(mixed))), 1e-2);
}

TEST(JC, PureStatesArePeriodicInTwoExcitationPhase) {
  const double period = 2.0 * kPi / std::sqrt(6.0);
  for (double alpha : {kPi / 6, kPi / 4, kPi / 3}) {
    for (double gt : {0.0, 0.9, 2.2}) {
      const Matrix4c a = jc_state({{1.0, alpha}, gt}).matrix();
      const Matrix4c b = jc_state({{1.0, alpha}, gt + period}).matrix();
      EXPECT_LT(max_abs(a - b), 1e-12);
    }
  }
}

TEST(JC, DoublyExcitedStateIsStationary) {
  // alpha = 0 puts all population in |11>, the state with no excitation to
  // exchange with the vacuum field.
  const Matrix4c start = werner_like({1.0, 0.0}).matrix();
  for (double gt : {0.3, 2.0, 9.0}) EXPECT_LT(max_abs(jc_state({{1.0, 0.0}, gt}).matrix() - start), 1e-15);
}

TEST(JC, TraceIsPreserved) {
  for (double gt : {0.0, 1.0, 4.0}) {
    EXPECT_NEAR(jc_state({{0.3, 1.1}, gt}).matrix().trace().real(), 1.0, 1e-14);
  }
}

TEST(Envelope, OscillatoryBranchValue) {
  // 4 a tau = 2, kappa = sqrt(3), xi = 1.
  const double k = std::sqrt(3.0);
  const double expected = std::exp(-1.0) * (std::cos(k) + std::sin(k) / k);
  EXPECT_NEAR(memory_envelope(1.0, 0.5, 1.0), expected, 1e-15);
  EXPECT_NEAR(memory_envelope(1.0, 0.5, 1.0), 0.15057436514588762, 1e-15);
}

TEST(Envelope, CriticalLimit) {
  // 4 a tau = 1: e^{-xi}(1 + xi).
  EXPECT_NEAR(memory_envelope(0.5, 0.5, 1.0), 2.0 * std::exp(-1.0), 1e-15);
  EXPECT_NEAR(memory_envelope(0.5, 0.5, 1.0), 0.7357588823428847, 1e-15);
  // Continuous across the critical point from both sides.
  for (double t : {0.5, 2.0, 8.0}) {
    const double at = memory_envelope(0.5, 0.5, t);
    EXPECT_NEAR(memory_envelope(0.5, 0.5 * (1 + 1e-9), t), at, 1e-7);
    EXPECT_NEAR(memory_envelope(0.5, 0.5 * (1 - 1e-9), t), at, 1e-7);
  }
}

TEST(Envelope, HyperbolicBranch) {
  const double a = 0.5, tau = 0.1, t = 3.0;
  const double k = std::sqrt(1.0 - std::pow(4 * a * tau, 2));
  const double xi = t / (2 * tau);
  const double expected = std::exp(-xi) * (std::cosh(k * xi) + std::sinh(k * xi) / k);
  EXPECT_NEAR(memory_envelope(a, tau, t), expected, 1e-14);
  // Far tails stay finite and inside [0, 1].
  const double tail = memory_envelope(0.01, 0.1, 1e5);
  EXPECT_TRUE(std::isfinite(tail));
  EXPECT_GE(tail, 0.0);
  EXPECT_LE(tail, 1.0);
}

TEST(Envelope, StartsAtOneAndRejectsBadInput) {
  for (double tau : {0.1, 0.25, 5.0}) EXPECT_DOUBLE_EQ(memory_envelope(1.0, tau, 0.0), 1.0);
  EXPECT_THROW(memory_envelope(0.0, 1.0, 1.0), InvalidInput);
  EXPECT_THROW(memory_envelope(1.0, 0.0, 1.0), InvalidInput);
  EXPECT_THROW(memory_envelope(1.0, 1.0, -1.0), InvalidInput);
}

TEST(Kraus, CompletenessAcrossBranches) {
  for (double a : {0.5, 1.0, 2.0}) {
    for (double tau : {0.1, 0.25, 0.5, 1.0, 3.0, 5.0}) {
      for (int i = 0; i < 200; ++i) {
        const KrausPair k = dephasing_kraus(a, tau, 10.0 * i / 199.0);
        const Matrix2c sum = k.f1.adjoint() * k.f1 + k.f2.adjoint() * k.f2;
        EXPECT_LT(max_abs(sum - Matrix2c::Identity()), 1e-12);
      }
    }
  }
}

TEST(Kraus, OutOfRangeEnvelopeIsVisible) {
  const KrausPair k = kraus_from_envelope(1.5);
  EXPECT_TRUE(std::isnan(k.f2(0, 0).real()));
}

TEST(Dephasing, ClosedFormMatchesKrausChannel) {
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const DephasingParams p{{unit(rng), unit(rng) * kPi / 2}, 0.2 + 2 * unit(rng), 0.05 + 5 * unit(rng),
                            10 * unit(rng)};
    const auto ops = dephasing_kraus_two_qubit(p.coupling, p.tau, p.t);
    const Matrix4c kraus = apply_kraus(werner_like(p.state).matrix(), ops);
    EXPECT_LT(max_abs(dephasing_state(p).matrix() - kraus), 1e-14);
    const DephasingStateElements e = dephasing_elements(p);
    const double lambda = memory_envelope(p.coupling, p.tau, p.t);
    EXPECT_NEAR(e.C, 0.5 * p.state.purity * lambda * std::sin(2 * p.state.alpha), 1e-15);
    EXPECT_NEAR(e.D, (1 - p.state.purity) / 4, 1e-15);
  }
}

TEST(Dephasing, TwoQubitKrausIsTracePreserving) {
  const auto ops = dephasing_kraus_two_qubit(1.0, 5.0, 3.0);
  Matrix4c sum = Matrix4c::Zero();
  for (const Matrix4c& k : ops) sum += k.adjoint() * k;
  EXPECT_LT(max_abs(sum - Matrix4c::Identity()), 1e-14);
}

TEST(Dephasing, InitialStateAndXi) {
  const DephasingParams p{{0.8, 0.7}, 1.0, 2.5, 0.0};
  EXPECT_LT(max_abs(dephasing_state(p).matrix() - werner_like(p.state).matrix()), 1e-15);
  EXPECT_DOUBLE_EQ((DephasingParams{{0.8, 0.7}, 1.0, 2.5, 10.0}).xi(), 2.0);
}

}  // namespace
}  // namespace qcorr
