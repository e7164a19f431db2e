#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <set>

#include "qcorr/closed_forms.hpp"
#include "qcorr/conformance.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/format.hpp"
#include "qcorr/quantifiers.hpp"
#include "test_support.hpp"

namespace qcorr {
namespace {

using test::kPi;

TEST(ClosedForms, JcEigenvalueAtZeroPurity) {
  EXPECT_DOUBLE_EQ(jc_closed_forms({{0.0, 0.7}, 1.2}).eta[0], 0.25);
}

TEST(ClosedForms, DephasingEigenvaluesInPureLimit) {
  const DephasingClosedForms cf = dephasing_closed_forms({{1.0, kPi / 4}, 1.0, 1.0, 0.0});
  EXPECT_DOUBLE_EQ(cf.lambda[0], 0.0);
  EXPECT_DOUBLE_EQ(cf.lambda[1], 0.0);
  EXPECT_NEAR(cf.lambda[2], 0.0, 1e-15);
  EXPECT_NEAR(cf.lambda[3], 1.0, 1e-15);
  const Eigen::VectorXd ev = linalg::eig_hermitian(dephasing_state({{1.0, kPi / 4}, 1.0, 1.0, 0.0}).matrix()).values;
  EXPECT_NEAR(ev(0), 1.0, 1e-15);
  EXPECT_NEAR(ev(3), 0.0, 1e-15);
}

TEST(ClosedForms, DephasingDeterminantAndSkewAuxiliaryAgreeWithGeneric) {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    const DephasingParams p{{unit(rng), 0.05 + 1.4 * unit(rng)}, 1.0, 0.1 + 5 * unit(rng), 10 * unit(rng)};
    const DephasingClosedForms cf = dephasing_closed_forms(p);
    const DensityMatrix4 rho = dephasing_state(p);
    const Matrix4c& m = rho.matrix();
    const double det = (m(k00, k00) * m(k11, k11) - m(k00, k11) * m(k11, k00)).real();
    EXPECT_NEAR(cf.sigma, 16.0 * det, 1e-12);
    const double w11 = skew_correlation_matrix(rho)(0, 0);
    EXPECT_NEAR(cf.theta, -4.0 * w11 * w11, 1e-10);
  }
}

TEST(ClosedForms, JcCoherenceAgreesOnItsOwnState) {
  for (double gt : {0.3, 1.0, 2.0}) {
    const JCParams p{{1.0, kPi / 3}, gt};
    const DensityMatrix4 rho = DensityMatrix4::from_matrix(x_state_matrix(jc_elements_frozen_noise(p)));
    EXPECT_NEAR(jc_closed_forms(p).coherence, coherence_jsd(rho).value, 1e-10);
  }
}

TEST(Rows, VerdictClassification) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  EXPECT_EQ((ConformanceRow{"jc", "p", "q", 1.0, 1.0 + 1e-9}).verdict(), Verdict::kMatch);
  EXPECT_EQ((ConformanceRow{"jc", "p", "q", 1.0, 1.0 + 1e-7}).verdict(), Verdict::kMismatch);
  EXPECT_EQ((ConformanceRow{"jc", "p", "q", nan, 1.0}).verdict(), Verdict::kUndefined);
  EXPECT_TRUE(std::isnan((ConformanceRow{"jc", "p", "q", 1.0, INFINITY}).abs_dev()));
}

TEST(Rows, MarkdownRoundTrip) {
  std::vector<ConformanceRow> rows = jc_conformance({{0.8, kPi / 6}, 2.0});
  const auto more = dephasing_teleport_conformance({{0.5, kPi / 4}, 1.0, 5.0, 3.0}, {kPi / 3, kPi / 5});
  rows.insert(rows.end(), more.begin(), more.end());
  const std::string text = "# title\n\nsome prose | with a bar\n\n" + to_markdown(rows) + "\ntrailing\n";
  const std::vector<ConformanceRow> back = parse_markdown(text);
  ASSERT_EQ(back.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(back[i].model, rows[i].model);
    EXPECT_EQ(back[i].point, rows[i].point);
    EXPECT_EQ(back[i].quantity, rows[i].quantity);
    EXPECT_EQ(back[i].verdict(), rows[i].verdict());
    if (std::isfinite(rows[i].closed_form)) EXPECT_EQ(back[i].closed_form, rows[i].closed_form);
  }
}

TEST(Rows, MalformedTableRowThrows) {
  const std::string text =
      "| model | point | quantity | closed_form_value | generic_value | abs_dev | verdict |\n"
      "|---|---|---|---|---|---|---|\n"
      "| jc | p | q | one | 1 | 0 | match |\n";
  EXPECT_THROW(parse_markdown(text), InvalidInput);
}

TEST(Rows, EveryModelEmitsItsQuantities) {
  const auto names = [](const std::vector<ConformanceRow>& rows) {
    std::set<std::string> s;
    for (const ConformanceRow& r : rows) s.insert(r.quantity);
    return s;
  };
  const auto jc = names(jc_conformance({{1.0, kPi / 4}, 0.3}));
  for (const char* q : {"state.u", "skew_matrix.11", "lqu", "eigenvalue_desc.1", "eigvec_ratio.minus",
                        "eigvec_ratio.minus.factor1", "fisher_matrix.33", "lqfi", "coherence"}) {
    EXPECT_TRUE(jc.contains(q)) << q;
  }
  const auto deph = names(dephasing_conformance({{1.0, kPi / 4}, 1.0, 5.0, 1.0}));
  for (const char* q : {"state.C", "eigvec_ratio.plus", "skew_aux.Sigma", "skew_aux.Theta", "coherence_aux.varpi",
                        "coherence_aux.Delta", "coherence"}) {
    EXPECT_TRUE(deph.contains(q)) << q;
  }
  const auto tele = names(jc_teleport_conformance({{1.0, kPi / 4}, 0.3}, {kPi / 3, kPi / 5}));
  for (const char* q : {"output.kappa@00", "output.Delta.re", "output.Theta.im", "fidelity", "average_fidelity"}) {
    EXPECT_TRUE(tele.contains(q)) << q;
  }
}

TEST(Format, LocaleFreeRoundTrip) {
  EXPECT_EQ(format_number(0.1), "0.10000000000000001");
  EXPECT_EQ(format_number(1.0), "1");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(std::numeric_limits<double>::quiet_NaN()), "nan");
  EXPECT_EQ(format_number(-std::numeric_limits<double>::quiet_NaN()), "nan");
  EXPECT_EQ(format_number(1.0 / 3.0, 5), "0.33333");
}

}  // namespace
}  // namespace qcorr
