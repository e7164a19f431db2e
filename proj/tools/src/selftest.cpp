#include "qcorr_cli/selftest.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

#include "qcorr/conformance.hpp"
#include "qcorr/dynamics.hpp"
#include "qcorr/errors.hpp"
#include "qcorr/quantifiers.hpp"
#include "qcorr/sampling.hpp"
#include "qcorr/teleport.hpp"

namespace qcorr::cli {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kSeed = 20240611;

using Envelope = std::function<double(double, double, double)>;

// Failure description, empty on success.
using Suite = std::function<std::string()>;

std::string fail(const std::string& what, double value) {
  std::ostringstream s;
  s << what << " (" << value << ")";
  return s.str();
}

// Hyperbolic branch without the e^{-xi} factor.
double faulty_envelope(double a, double tau, double t) {
  const double g = 4.0 * a * tau;
  if (g >= 1.0) return memory_envelope(a, tau, t);
  const double k = std::sqrt(1.0 - g * g);
  const double xi = t / (2.0 * tau);
  return std::cosh(k * xi) + std::sinh(k * xi) / k;
}

std::string linalg_suite() {
  std::mt19937_64 rng(kSeed);
  for (int dim : {2, 4, 12}) {
    for (int trial = 0; trial < 5; ++trial) {
      const MatrixXc u = random_unitary(rng, dim);
      Eigen::VectorXd d = Eigen::VectorXd::Random(dim);
      const MatrixXc h = u * d.cast<Complex>().asDiagonal() * u.adjoint();
      const MatrixXc hh = 0.5 * (h + h.adjoint());
      const linalg::EigenSystem es = linalg::eig_hermitian(hh);
      const double err = (es.reconstruct() - hh).cwiseAbs().maxCoeff();
      if (!(err < 1e-12)) return fail("reconstruction error", err);
      const double ortho = (es.vectors.adjoint() * es.vectors - MatrixXc::Identity(dim, dim)).cwiseAbs().maxCoeff();
      if (!(ortho < 1e-12)) return fail("orthonormality defect", ortho);
    }
  }
  return {};
}

std::string states_suite() {
  for (double purity : {0.0, 0.3, 1.0}) {
    for (double alpha : {0.0, kPi / 6, kPi / 4, kPi / 2}) {
      const StateDiagnostics d = validate(werner_like({purity, alpha}).matrix());
      if (!d.passed) return fail("werner-like state invalid, min eigenvalue", d.min_eigenvalue);
    }
  }
  Matrix4c sum = Matrix4c::Zero();
  for (const DensityMatrix4& k : bell_projectors()) sum += k.matrix();
  const double err = (sum - Matrix4c::Identity()).cwiseAbs().maxCoeff();
  if (!(err < 1e-14)) return fail("Bell projectors do not resolve the identity", err);
  return {};
}

std::string jc_oracle_suite() {
  double worst = 0.0;
  for (double purity : {0.0, 0.4, 1.0}) {
    for (double alpha : {0.1, kPi / 4, 1.3}) {
      for (double gt : {0.0, 0.7, 2.9}) {
        const JCParams p{{purity, alpha}, gt};
        const double err = (jc_state(p).matrix() - jc_unitary_oracle(p).matrix()).cwiseAbs().maxCoeff();
        worst = std::max(worst, err);
      }
    }
  }
  if (!(worst < 1e-10)) return fail("closed form vs unitary oracle", worst);
  return {};
}

std::string kraus_suite(const Envelope& envelope) {
  for (double a : {0.5, 1.0, 2.0}) {
    for (double tau : {0.1, 0.125, 0.25, 0.5, 1.0, 3.0, 5.0}) {
      for (int i = 0; i < 50; ++i) {
        const double t = 10.0 * i / 49.0;
        const KrausPair k = kraus_from_envelope(envelope(a, tau, t));
        const Matrix2c sum = k.f1.adjoint() * k.f1 + k.f2.adjoint() * k.f2;
        const double err = (sum - Matrix2c::Identity()).cwiseAbs().maxCoeff();
        if (!(err < 1e-12)) return fail("completeness defect at a=" + std::to_string(a) + " tau=" +
                                            std::to_string(tau) + " t=" + std::to_string(t),
                                        err);
      }
    }
  }
  return {};
}

std::string dephasing_suite() {
  for (double purity : {0.5, 1.0}) {
    for (double tau : {0.1, 0.5, 5.0}) {
      for (double t : {0.0, 1.0, 7.0}) dephasing_state({{purity, kPi / 4}, 1.0, tau, t});
    }
  }
  return {};
}

std::string quantifier_oracle_suite() {
  std::mt19937_64 rng(kSeed + 1);
  for (int i = 0; i < 10; ++i) {
    const DensityMatrix4 rho = random_density_matrix(rng, 1 + i % 4);
    const double lqu = lqu_generic(rho).value;
    const double lqfi = lqfi_generic(rho).value;
    const double du = std::abs(lqu - lqu_brute_force(rho, 2000).value);
    const double df = std::abs(lqfi - lqfi_brute_force(rho, 2000).value);
    if (!(du < 1e-4)) return fail("LQU generic vs brute force", du);
    if (!(df < 1e-4)) return fail("LQFI generic vs brute force", df);
    if (!(lqfi >= lqu - 1e-9)) return fail("LQFI below LQU", lqfi - lqu);
  }
  return {};
}

std::string anchor_suite() {
  const DensityMatrix4 mixed = DensityMatrix4::from_matrix(Matrix4c::Identity() / 4.0);
  const DensityMatrix4 bell = bell_projectors()[0];
  for (double v : {lqu_generic(mixed).value, lqfi_generic(mixed).value, coherence_jsd(mixed).value}) {
    if (!(v < 1e-9)) return fail("maximally mixed state is not zero", v);
  }
  for (double v : {lqu_generic(bell).value, lqfi_generic(bell).value}) {
    if (!(std::abs(v - 1.0) < 1e-9)) return fail("Bell state is not one", v);
  }
  Matrix4c diag = Matrix4c::Zero();
  diag.diagonal() << 0.1, 0.2, 0.3, 0.4;
  const DensityMatrix4 d = DensityMatrix4::from_matrix(diag);
  for (double v : {lqu_generic(d).value, lqfi_generic(d).value, coherence_jsd(d).value}) {
    if (!(v < 1e-9)) return fail("diagonal state is not zero", v);
  }
  return {};
}

std::string local_unitary_suite() {
  std::mt19937_64 rng(kSeed + 2);
  for (int i = 0; i < 5; ++i) {
    const DensityMatrix4 rho = random_density_matrix(rng);
    const double lqu = lqu_generic(rho).value;
    const double lqfi = lqfi_generic(rho).value;
    for (int j = 0; j < 5; ++j) {
      const Matrix4c u = random_local_unitary(rng);
      Matrix4c m = u * rho.matrix() * u.adjoint();
      m = 0.5 * (m + m.adjoint()).eval();
      const DensityMatrix4 rotated = DensityMatrix4::from_matrix(m);
      const double du = std::abs(lqu_generic(rotated).value - lqu);
      const double df = std::abs(lqfi_generic(rotated).value - lqfi);
      if (!(du < 1e-8)) return fail("LQU changed under a local unitary", du);
      if (!(df < 1e-8)) return fail("LQFI changed under a local unitary", df);
    }
  }
  return {};
}

std::string teleport_suite() {
  const auto bell = bell_projectors();
  const double singlet = fidelity_average(build_channel(bell[0]));
  if (!(std::abs(singlet - 1.0) < 1e-10)) return fail("singlet resource", singlet);
  const double mixed = fidelity_average(build_channel(DensityMatrix4::from_matrix(Matrix4c::Identity() / 4.0)));
  if (!(std::abs(mixed - 0.25) < 1e-10)) return fail("maximally mixed resource", mixed);
  std::mt19937_64 rng(kSeed + 3);
  for (int i = 0; i < 50; ++i) {
    const TeleportChannel ch = build_channel(random_density_matrix(rng));
    const InputPureState s = random_input(rng);
    teleport_output(ch, s);
    fidelity_pointwise(ch, s);
  }
  return {};
}

std::string quadrature_suite() {
  for (double purity : {1.0, 0.6}) {
    for (double gt : {0.0, 1.3, 4.0}) {
      const TeleportChannel ch = build_channel(jc_state({{purity, kPi / 4}, gt}));
      const double d = std::abs(fidelity_average(ch, {64, 64}) - fidelity_average(ch, {128, 128}));
      if (!(d < 1e-10)) return fail("quadrature not converged", d);
    }
  }
  return {};
}

std::string ledger_suite() {
  std::vector<ConformanceRow> rows = jc_conformance({{1.0, kPi / 3}, 0.4});
  const auto more = dephasing_conformance({{0.5, kPi / 4}, 1.0, 5.0, 2.0});
  rows.insert(rows.end(), more.begin(), more.end());
  const std::vector<ConformanceRow> back = parse_markdown(to_markdown(rows));
  if (back.size() != rows.size()) return fail("ledger round trip lost rows", static_cast<double>(back.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (back[i].quantity != rows[i].quantity || back[i].verdict() != rows[i].verdict()) {
      return "ledger round trip changed row " + std::to_string(i);
    }
  }
  return {};
}

}  // namespace

bool run_selftest(std::ostream& out, const std::string& fault) {
  if (!fault.empty() && fault != "lambda-branch") throw InvalidInput("unknown fault '" + fault + "'");
  const Envelope envelope = fault == "lambda-branch" ? Envelope(faulty_envelope) : Envelope(memory_envelope);

  const std::vector<std::pair<std::string, Suite>> suites{
      {"linalg", linalg_suite},
      {"states", states_suite},
      {"jc-oracle", jc_oracle_suite},
      {"kraus-completeness", [&] { return kraus_suite(envelope); }},
      {"dephasing-closed-form", dephasing_suite},
      {"quantifier-oracle", quantifier_oracle_suite},
      {"quantifier-anchors", anchor_suite},
      {"local-unitary-invariance", local_unitary_suite},
      {"teleport", teleport_suite},
      {"quadrature-convergence", quadrature_suite},
      {"conformance-ledger", ledger_suite},
  };

  bool all = true;
  for (const auto& [name, suite] : suites) {
    const auto start = std::chrono::steady_clock::now();
    std::string message;
    try {
      message = suite();
    } catch (const std::exception& e) {
      message = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out << (message.empty() ? "[PASS] " : "[FAIL] ") << name;
    if (!message.empty()) out << ": " << message;
    out << " (" << std::fixed;
    out.precision(2);
    out << seconds << " s)\n";
    out.unsetf(std::ios::fixed);
    all = all && message.empty();
  }
  out << (all ? "selftest: all suites passed\n" : "selftest: FAILED\n");
  return all;
}

}  // namespace qcorr::cli
