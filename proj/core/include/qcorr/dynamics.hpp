#pragma once

#include <array>
#include <span>

#include "qcorr/linalg.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

// ---------------------------------------------------------------------------
// Two qubits resonantly coupled to one cavity mode, cavity initially in vacuum.

struct JCParams {
  WernerLikeParams state;
  double gamma_t = 0.0;  // coupling x time, dimensionless

  /// sqrt(6) * gamma_t, the two-excitation Rabi phase.
  double delta_t() const;
};

/// X-state entries: diagonal (u, y, y, v), <00|rho|11> = w, <01|rho|10> = z.
struct JCStateElements {
  double u = 0.0;
  double v = 0.0;
  double w = 0.0;
  double z = 0.0;
  double y = 0.0;
};

/// Exact reduced-state entries. The white-noise part (1 - purity) I/4 is not
/// stationary: its one-excitation sector oscillates at sqrt(2) gamma_t, which
/// enters y, z and v alongside the sqrt(6) gamma_t two-excitation terms.
JCStateElements jc_elements(const JCParams& p);

/// Variant in which the white-noise part stays frozen at (1 - purity)/4.
/// Agrees with jc_elements only at purity 1 or gamma_t = 0; the conformance
/// ledger evaluates the closed-form quantifiers against it.
JCStateElements jc_elements_frozen_noise(const JCParams& p);

/// Assembles the X-state matrix from its five entries (no validation).
Matrix4c x_state_matrix(const JCStateElements& e);

/// Throws InternalConsistency if the assembled state fails validate().
DensityMatrix4 jc_state(const JCParams& p);

/// Evolves rho_AB (x) |0><0| under H = sum_j (a sigma+_j + a^dag sigma-_j)
/// (interaction picture at resonance, sigma+ = |0><1|) on qubits (x) Fock
/// space truncated to n_fock levels, then traces out the cavity.
///
/// Throws InvalidInput if n_fock < 3 and InternalConsistency if population
/// reaches the truncation boundary.
DensityMatrix4 jc_unitary_oracle(const JCParams& p, int n_fock = 3);

// ---------------------------------------------------------------------------
// Colored-noise (random telegraph) dephasing.

struct DephasingParams {
  WernerLikeParams state;
  double coupling = 1.0;  // a > 0
  double tau = 1.0;       // inverse flipping rate, > 0
  double t = 0.0;         // >= 0, same units as tau

  /// t / (2 tau).
  double xi() const;
};

/// Memory envelope e^{-xi}(cos(kappa xi) + sin(kappa xi)/kappa) with
/// kappa = sqrt((4 a tau)^2 - 1). For 4 a tau < 1 the hyperbolic continuation
/// is used and 4 a tau = 1 takes the limit e^{-xi}(1 + xi).
///
/// Throws InvalidInput unless a > 0, tau > 0 and t >= 0.
double memory_envelope(double a, double tau, double t);

/// Single-qubit Kraus pair sqrt((1+L)/2) I, sqrt((1-L)/2) sigma_z.
struct KrausPair {
  Matrix2c f1;
  Matrix2c f2;
};

/// Kraus pair for a given envelope value L in [-1, 1]. Values outside that
/// range yield NaN entries rather than throwing, so completeness checks see
/// them.
KrausPair kraus_from_envelope(double lambda);

KrausPair dephasing_kraus(double a, double tau, double t);

/// sum_i K_i rho K_i^dagger.
Matrix4c apply_kraus(const Matrix4c& rho, std::span<const Matrix4c> ops);

/// Two-qubit Kraus operators of the dephasing channel: the single-qubit pair
/// acting on qubit A, identity on B. This is the channel whose action on the
/// Werner-like family damps <00|rho|11> by exactly one power of the envelope.
std::array<Matrix4c, 2> dephasing_kraus_two_qubit(double a, double tau, double t);

/// Diagonal (A, D, D, B), corners <00|rho|11> = C, zero <01|rho|10>.
struct DephasingStateElements {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
  double D = 0.0;
};

DephasingStateElements dephasing_elements(const DephasingParams& p);

/// Applies the Kraus channel numerically and checks it against
/// dephasing_elements(); throws InternalConsistency beyond 1e-10.
DensityMatrix4 dephasing_state(const DephasingParams& p);

}  // namespace qcorr
