#pragma once

#include <array>

#include "qcorr/linalg.hpp"

namespace qcorr {

/// Computational basis order shared by every 4x4 matrix in the library.
enum Basis : int { k00 = 0, k01 = 1, k10 = 2, k11 = 3 };

/// Tolerances of the DensityMatrix4 contract.
inline constexpr double kStateHermitianTol = 1e-12;
inline constexpr double kStateTraceTol = 1e-10;
inline constexpr double kStateMinEigenTol = 1e-10;

/// Result of validate(): the three defects and the overall verdict.
struct StateDiagnostics {
  double hermiticity_defect = 0.0;
  double trace_defect = 0.0;
  double min_eigenvalue = 0.0;
  bool passed = false;
};

/// Checks Hermiticity, unit trace and positivity of an arbitrary 4x4 matrix.
StateDiagnostics validate(const Matrix4c& m);

/// Two-qubit density matrix. Construction through from_matrix() enforces the
/// Hermitian / unit-trace / PSD contract.
class DensityMatrix4 {
 public:
  /// Throws InvalidState when validate(m) fails.
  static DensityMatrix4 from_matrix(const Matrix4c& m);

  const Matrix4c& matrix() const noexcept { return m_; }
  Complex operator()(int row, int col) const { return m_(row, col); }

  /// Tr(rho^2).
  double purity() const;

 private:
  explicit DensityMatrix4(const Matrix4c& m) : m_(m) {}
  Matrix4c m_;
};

struct WernerLikeParams {
  double purity = 1.0;  // in [0, 1]
  double alpha = 0.0;   // mixing angle in [0, pi/2], radians
};

/// Teleported input: cos(theta/2)|10> + e^{-i phi} sin(theta/2)|01>.
struct InputPureState {
  double theta = 0.0;  // [0, pi]
  double phi = 0.0;    // [0, 2 pi]

  Vector4c ket() const;
};

/// Throws InvalidInput when purity or alpha is out of range.
void check_werner_params(const WernerLikeParams& p);

/// purity |phi><phi| + (1 - purity) I/4 with |phi> = sin(alpha)|00> + cos(alpha)|11>.
DensityMatrix4 werner_like(const WernerLikeParams& p);

/// Bell kets in projector order: psi-, phi-, phi+, psi+.
const std::array<Vector4c, 4>& bell_kets();

/// Projectors K^0..K^3 onto bell_kets().
std::array<DensityMatrix4, 4> bell_projectors();

DensityMatrix4 input_state(const InputPureState& s);

}  // namespace qcorr
