#include "qcorr/states.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qcorr/errors.hpp"

namespace qcorr {

StateDiagnostics validate(const Matrix4c& m) {
  StateDiagnostics d;
  d.hermiticity_defect = linalg::hermiticity_defect(m);
  d.trace_defect = std::abs(m.trace() - Complex(1.0, 0.0));
  if (d.hermiticity_defect > kStateHermitianTol) {
    // The eigensolver only accepts Hermitian input; report the Hermitian
    // part's spectrum.
    const Matrix4c h = 0.5 * (m + m.adjoint());
    d.min_eigenvalue = linalg::eig_hermitian(h).values.minCoeff();
  } else {
    d.min_eigenvalue = linalg::eig_hermitian(m).values.minCoeff();
  }
  d.passed = d.hermiticity_defect <= kStateHermitianTol && d.trace_defect <= kStateTraceTol &&
             d.min_eigenvalue >= -kStateMinEigenTol;
  return d;
}

DensityMatrix4 DensityMatrix4::from_matrix(const Matrix4c& m) {
  const StateDiagnostics d = validate(m);
  if (!d.passed) {
    throw InvalidState("not a density matrix: hermiticity defect " + std::to_string(d.hermiticity_defect) +
                       ", trace defect " + std::to_string(d.trace_defect) + ", min eigenvalue " +
                       std::to_string(d.min_eigenvalue));
  }
  return DensityMatrix4(m);
}

double DensityMatrix4::purity() const { return (m_ * m_).trace().real(); }

Vector4c InputPureState::ket() const {
  Vector4c psi = Vector4c::Zero();
  psi(k10) = std::cos(theta / 2.0);
  psi(k01) = std::polar(1.0, -phi) * std::sin(theta / 2.0);
  return psi;
}

void check_werner_params(const WernerLikeParams& p) {
  constexpr double kSlack = 1e-12;
  if (!(p.purity >= 0.0 && p.purity <= 1.0)) {
    throw InvalidInput("purity must lie in [0, 1], got " + std::to_string(p.purity));
  }
  if (!(p.alpha >= -kSlack && p.alpha <= std::numbers::pi / 2.0 + kSlack)) {
    throw InvalidInput("alpha must lie in [0, pi/2], got " + std::to_string(p.alpha));
  }
}

DensityMatrix4 werner_like(const WernerLikeParams& p) {
  check_werner_params(p);
  Vector4c phi = Vector4c::Zero();
  phi(k00) = std::sin(p.alpha);
  phi(k11) = std::cos(p.alpha);
  const Matrix4c m = p.purity * (phi * phi.adjoint()) + (1.0 - p.purity) / 4.0 * Matrix4c::Identity();
  return DensityMatrix4::from_matrix(m);
}

const std::array<Vector4c, 4>& bell_kets() {
  static const std::array<Vector4c, 4> kKets = [] {
    const double r = 1.0 / std::sqrt(2.0);
    std::array<Vector4c, 4> k;
    k[0] << 0, r, -r, 0;  // psi-
    k[1] << r, 0, 0, -r;  // phi-
    k[2] << r, 0, 0, r;   // phi+
    k[3] << 0, r, r, 0;   // psi+
    return k;
  }();
  return kKets;
}

std::array<DensityMatrix4, 4> bell_projectors() {
  const auto& kets = bell_kets();
  return {DensityMatrix4::from_matrix(kets[0] * kets[0].adjoint()),
          DensityMatrix4::from_matrix(kets[1] * kets[1].adjoint()),
          DensityMatrix4::from_matrix(kets[2] * kets[2].adjoint()),
          DensityMatrix4::from_matrix(kets[3] * kets[3].adjoint())};
}

DensityMatrix4 input_state(const InputPureState& s) {
  const Vector4c psi = s.ket();
  return DensityMatrix4::from_matrix(psi * psi.adjoint());
}

}  // namespace qcorr
