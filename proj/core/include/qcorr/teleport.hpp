#pragma once

#include <optional>

#include <Eigen/Dense>

#include "qcorr/dynamics.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

/// Teleportation of a two-qubit input through two copies of the resource,
/// viewed as the Pauli twirl rho -> sum_kl p_kl (s_k x s_l) rho (s_k x s_l).
struct TeleportChannel {
  DensityMatrix4 resource;
  Eigen::Matrix4d p;  // p(k, l) = Tr[K^k rho] Tr[K^l rho]
};

/// Bell-measurement probabilities with K^0 = psi- paired with the identity,
/// K^1 = phi- with s_x, K^2 = phi+ with s_y, K^3 = psi+ with s_z.
TeleportChannel build_channel(const DensityMatrix4& resource);

/// Unvalidated twirl output, for inner loops.
Matrix4c twirl(const Eigen::Matrix4d& p, const Matrix4c& rho);

/// Throws InternalConsistency if the output fails validate().
DensityMatrix4 teleport_output(const TeleportChannel& ch, const InputPureState& s);

/// Uhlmann fidelity between input and output. The pure-input shortcut
/// <psi|rho_out|psi> is evaluated alongside; a gap above 1e-10 throws
/// InternalConsistency.
double fidelity_pointwise(const TeleportChannel& ch, const InputPureState& s);

struct QuadratureSpec {
  int theta_nodes = 64;  // Gauss-Legendre in cos(theta)
  int phi_nodes = 64;    // trapezoid in phi
};

/// (1/4 pi) int dphi int dtheta sin(theta) F(theta, phi).
/// Throws InvalidInput if either resolution is below 64.
double fidelity_average(const TeleportChannel& ch, const QuadratureSpec& spec = {});

struct TeleportReport {
  double theta = 0.0;
  double phi = 0.0;
  double fidelity = 0.0;
  double f_av = 0.0;
  std::optional<double> f_av_closed;
};

TeleportReport make_report(const TeleportChannel& ch, const InputPureState& s, const QuadratureSpec& spec = {});

/// Closed-form teleportation fidelities, evaluated verbatim.
struct ClosedFidelity {
  double f = 0.0;
  double f_av = 0.0;
};

/// JC resource, in terms of the frozen-noise state entries.
ClosedFidelity jc_fav_closed(const JCParams& p, const InputPureState& s);

/// Dephasing resource.
ClosedFidelity dephasing_fav_closed(const DephasingParams& p, const InputPureState& s);

/// Output-state entries of the JC closed form: diagonal (kappa, chi, zeta,
/// kappa), <00|.|11> = theta_c, <01|.|10> = delta, <10|.|01> = big_theta.
struct JCOutputElements {
  double kappa = 0.0;
  double vartheta = 0.0;
  double chi = 0.0;
  double zeta = 0.0;
  Complex delta;
  Complex big_theta;
};
JCOutputElements jc_output_closed(const JCParams& p, const InputPureState& s);

/// Output-state entries of the dephasing closed form: diagonal
/// (varpi, upsilon, upsilon, varpi), <10|.|01> = sigma.
struct DephasingOutputElements {
  double varpi = 0.0;
  double upsilon = 0.0;
  Complex sigma;
};
DephasingOutputElements dephasing_output_closed(const DephasingParams& p, const InputPureState& s);

}  // namespace qcorr
