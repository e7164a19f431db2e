#include "qcorr/dynamics.hpp"

#include <cmath>
#include <string>

#include "qcorr/errors.hpp"

namespace qcorr {
namespace {

constexpr double kPathTol = 1e-10;
constexpr double kLeakageTol = 1e-12;

DensityMatrix4 checked(const Matrix4c& m, const char* what) {
  try {
    return DensityMatrix4::from_matrix(m);
  } catch (const InvalidState& e) {
    throw InternalConsistency(std::string(what) + ": " + e.what());
  }
}

// e^{-xi} cosh(k xi) and e^{-xi} sinh(k xi) without overflow for large xi.
double damped_cosh(double k, double xi) {
  const double x = k * xi;
  if (x < 20.0) return std::exp(-xi) * std::cosh(x);
  return 0.5 * (std::exp(x - xi) + std::exp(-x - xi));
}

double damped_sinh(double k, double xi) {
  const double x = k * xi;
  if (x < 20.0) return std::exp(-xi) * std::sinh(x);
  return 0.5 * (std::exp(x - xi) - std::exp(-x - xi));
}

}  // namespace

double JCParams::delta_t() const { return std::sqrt(6.0) * gamma_t; }

JCStateElements jc_elements(const JCParams& p) {
  check_werner_params(p.state);
  const double s = p.state.purity;
  const double noise = (1.0 - s) / 4.0;
  const double sin_a = std::sin(p.state.alpha);
  const double cos_a = std::cos(p.state.alpha);

  // |00,0> weight feeding the two-excitation sector (pure + white noise).
  const double doubly = noise + s * sin_a * sin_a;
  const double c2 = std::cos(p.delta_t());
  const double s2 = std::sin(p.delta_t());
  // One-excitation sector: (|01,0> + |10,0>)/sqrt2 <-> |11,1> at sqrt(2) gamma.
  const double c1 = std::cos(std::sqrt(2.0) * p.gamma_t);
  const double s1 = std::sin(std::sqrt(2.0) * p.gamma_t);

  JCStateElements e;
  e.u = doubly * (2.0 + c2) * (2.0 + c2) / 9.0;
  e.y = noise * (1.0 + c1 * c1) / 2.0 + doubly * s2 * s2 / 6.0;
  e.z = -noise * s1 * s1 / 2.0 + doubly * s2 * s2 / 6.0;
  e.v = noise * (1.0 + s1 * s1) + doubly * 2.0 / 9.0 * (c2 - 1.0) * (c2 - 1.0) + s * cos_a * cos_a;
  e.w = s * std::sin(2.0 * p.state.alpha) * (2.0 + c2) / 6.0;
  return e;
}

JCStateElements jc_elements_frozen_noise(const JCParams& p) {
  check_werner_params(p.state);
  const double s = p.state.purity;
  const double sin2 = std::sin(p.state.alpha) * std::sin(p.state.alpha);
  const double cos2 = std::cos(p.state.alpha) * std::cos(p.state.alpha);
  const double c = std::cos(p.delta_t());
  const double sd = std::sin(p.delta_t());

  JCStateElements e;
  e.u = (1.0 - s) / 4.0 + s * sin2 / 9.0 * (c + 2.0) * (c + 2.0);
  e.v = (1.0 - s) / 4.0 + s * cos2 + 2.0 * s / 9.0 * (c - 1.0) * (c - 1.0) * sin2;
  e.w = s * std::sin(2.0 * p.state.alpha) / 6.0 * (c + 2.0);
  e.z = s / 6.0 * sd * sd * sin2;
  e.y = (1.0 - s) / 4.0 + e.z;
  return e;
}

Matrix4c x_state_matrix(const JCStateElements& e) {
  Matrix4c m = Matrix4c::Zero();
  m(k00, k00) = e.u;
  m(k01, k01) = e.y;
  m(k10, k10) = e.y;
  m(k11, k11) = e.v;
  m(k00, k11) = e.w;
  m(k11, k00) = e.w;
  m(k01, k10) = e.z;
  m(k10, k01) = e.z;
  return m;
}

DensityMatrix4 jc_state(const JCParams& p) {
  return checked(x_state_matrix(jc_elements(p)), "jc_state");
}

DensityMatrix4 jc_unitary_oracle(const JCParams& p, int n_fock) {
  if (n_fock < 3) throw InvalidInput("jc_unitary_oracle: n_fock must be at least 3");
  const Eigen::Index nf = n_fock;
  const Eigen::Index dim = 4 * nf;

  MatrixXc annihilate = MatrixXc::Zero(nf, nf);
  for (Eigen::Index f = 1; f < nf; ++f) annihilate(f - 1, f) = std::sqrt(static_cast<double>(f));
  const MatrixXc create = annihilate.adjoint();

  Matrix2c raise;  // |0><1|
  raise << 0, 1, 0, 0;
  const Matrix2c lower = raise.adjoint();
  const MatrixXc id2 = MatrixXc::Identity(2, 2);

  const MatrixXc raise_a = linalg::kron(raise, id2);
  const MatrixXc raise_b = linalg::kron(id2, raise);
  const MatrixXc lower_a = linalg::kron(lower, id2);
  const MatrixXc lower_b = linalg::kron(id2, lower);

  const MatrixXc h = linalg::kron(raise_a + raise_b, annihilate) + linalg::kron(lower_a + lower_b, create);
  const linalg::EigenSystem es = linalg::eig_hermitian(h);

  VectorXc phases(dim);
  for (Eigen::Index k = 0; k < dim; ++k) phases(k) = std::polar(1.0, -es.values(k) * p.gamma_t);
  const MatrixXc u = es.vectors * phases.asDiagonal() * es.vectors.adjoint();

  MatrixXc vacuum = MatrixXc::Zero(nf, nf);
  vacuum(0, 0) = 1.0;
  const MatrixXc rho0 = linalg::kron(werner_like(p.state).matrix(), vacuum);
  const MatrixXc rho_t = u * rho0 * u.adjoint();

  // Any qubit in |0> at the top Fock level would couple out of the truncated
  // space.
  double leakage = 0.0;
  for (int q = 0; q < 3; ++q) leakage += std::abs(rho_t(q * nf + nf - 1, q * nf + nf - 1));
  if (leakage > kLeakageTol) {
    throw InternalConsistency("jc_unitary_oracle: Fock truncation boundary populated (" + std::to_string(leakage) +
                              ")");
  }

  Matrix4c reduced = Matrix4c::Zero();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      Complex acc = 0.0;
      for (Eigen::Index f = 0; f < nf; ++f) acc += rho_t(i * nf + f, j * nf + f);
      reduced(i, j) = acc;
    }
  }
  reduced = 0.5 * (reduced + reduced.adjoint()).eval();
  return checked(reduced, "jc_unitary_oracle");
}

double DephasingParams::xi() const { return t / (2.0 * tau); }

double memory_envelope(double a, double tau, double t) {
  if (!(a > 0.0) || !(tau > 0.0) || !(t >= 0.0)) {
    throw InvalidInput("memory_envelope: require a > 0, tau > 0, t >= 0");
  }
  const double xi = t / (2.0 * tau);
  const double s = 4.0 * a * tau;
  const double k2 = s * s - 1.0;
  if (k2 > 0.0) {
    const double k = std::sqrt(k2);
    return std::exp(-xi) * (std::cos(k * xi) + std::sin(k * xi) / k);
  }
  if (k2 < 0.0) {
    const double k = std::sqrt(-k2);
    return damped_cosh(k, xi) + damped_sinh(k, xi) / k;
  }
  return std::exp(-xi) * (1.0 + xi);
}

KrausPair kraus_from_envelope(double lambda) {
  return {std::sqrt((1.0 + lambda) / 2.0) * linalg::pauli(0), std::sqrt((1.0 - lambda) / 2.0) * linalg::pauli(3)};
}

KrausPair dephasing_kraus(double a, double tau, double t) {
  return kraus_from_envelope(memory_envelope(a, tau, t));
}

Matrix4c apply_kraus(const Matrix4c& rho, std::span<const Matrix4c> ops) {
  Matrix4c out = Matrix4c::Zero();
  for (const Matrix4c& k : ops) out += k * rho * k.adjoint();
  return out;
}

std::array<Matrix4c, 2> dephasing_kraus_two_qubit(double a, double tau, double t) {
  const KrausPair f = dephasing_kraus(a, tau, t);
  const MatrixXc id2 = MatrixXc::Identity(2, 2);
  return {Matrix4c(linalg::kron(f.f1, id2)), Matrix4c(linalg::kron(f.f2, id2))};
}

DephasingStateElements dephasing_elements(const DephasingParams& p) {
  check_werner_params(p.state);
  const double s = p.state.purity;
  const double lambda = memory_envelope(p.coupling, p.tau, p.t);
  const double sin_a = std::sin(p.state.alpha);
  const double cos_a = std::cos(p.state.alpha);
  DephasingStateElements e;
  e.A = (1.0 - s) / 4.0 + s * sin_a * sin_a;
  e.B = (1.0 - s) / 4.0 + s * cos_a * cos_a;
  e.C = s / 2.0 * lambda * std::sin(2.0 * p.state.alpha);
  e.D = (1.0 - s) / 4.0;
  return e;
}

DensityMatrix4 dephasing_state(const DephasingParams& p) {
  const DephasingStateElements e = dephasing_elements(p);
  Matrix4c closed = Matrix4c::Zero();
  closed(k00, k00) = e.A;
  closed(k01, k01) = e.D;
  closed(k10, k10) = e.D;
  closed(k11, k11) = e.B;
  closed(k00, k11) = e.C;
  closed(k11, k00) = e.C;

  const auto ops = dephasing_kraus_two_qubit(p.coupling, p.tau, p.t);
  const Matrix4c evolved = apply_kraus(werner_like(p.state).matrix(), ops);
  const double gap = (evolved - closed).cwiseAbs().maxCoeff();
  if (!(gap <= kPathTol)) {
    throw InternalConsistency("dephasing_state: Kraus and closed-form paths differ by " + std::to_string(gap));
  }
  return checked(closed, "dephasing_state");
}

}  // namespace qcorr
