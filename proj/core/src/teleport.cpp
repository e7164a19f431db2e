#include "qcorr/teleport.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "qcorr/errors.hpp"
#include "qcorr/linalg.hpp"
#include "qcorr/quadrature.hpp"

namespace qcorr {
namespace {

constexpr double kChannelNormTol = 1e-12;
constexpr double kPathAgreementTol = 1e-10;
constexpr int kMinNodes = 64;

// A Pauli string s_k x s_l maps |i> to phase[i] |perm[i]>.
struct SignedPermutation {
  std::array<int, 4> perm{};
  std::array<Complex, 4> phase{};
};

const std::array<SignedPermutation, 16>& pauli_strings() {
  static const std::array<SignedPermutation, 16> table = [] {
    std::array<SignedPermutation, 16> out;
    for (int k = 0; k < 4; ++k) {
      for (int l = 0; l < 4; ++l) {
        const MatrixXc m = linalg::kron(linalg::pauli(k), linalg::pauli(l));
        SignedPermutation& sp = out[static_cast<std::size_t>(4 * k + l)];
        for (int c = 0; c < 4; ++c) {
          for (int r = 0; r < 4; ++r) {
            if (std::abs(m(r, c)) > 0.5) {
              sp.perm[static_cast<std::size_t>(c)] = r;
              sp.phase[static_cast<std::size_t>(c)] = m(r, c);
            }
          }
        }
      }
    }
    return out;
  }();
  return table;
}

// <psi|twirl(|psi><psi|)|psi> = sum_s p_s |<psi|P_s|psi>|^2.
double pure_twirl_fidelity(const Eigen::Matrix4d& p, const Vector4c& psi) {
  const auto& strings = pauli_strings();
  double total = 0.0;
  for (int s = 0; s < 16; ++s) {
    const double weight = p(s / 4, s % 4);
    if (weight == 0.0) continue;
    const SignedPermutation& sp = strings[static_cast<std::size_t>(s)];
    Complex amp = 0.0;
    for (int i = 0; i < 4; ++i) amp += std::conj(psi(sp.perm[i])) * sp.phase[i] * psi(i);
    total += weight * std::norm(amp);
  }
  return total;
}

double overlap(const Vector4c& psi, const Matrix4c& rho) {
  return (psi.adjoint() * rho * psi)(0, 0).real();
}

}  // namespace

TeleportChannel build_channel(const DensityMatrix4& resource) {
  const auto& kets = bell_kets();
  Eigen::Vector4d q;
  for (int k = 0; k < 4; ++k) q(k) = std::max(0.0, overlap(kets[static_cast<std::size_t>(k)], resource.matrix()));
  const Eigen::Matrix4d p = q * q.transpose();
  const double total = p.sum();
  if (std::abs(total - 1.0) > kChannelNormTol) {
    throw InternalConsistency("build_channel: probabilities sum to " + std::to_string(total));
  }
  return {resource, p / total};
}

Matrix4c twirl(const Eigen::Matrix4d& p, const Matrix4c& rho) {
  const auto& strings = pauli_strings();
  Matrix4c out = Matrix4c::Zero();
  for (int s = 0; s < 16; ++s) {
    const double weight = p(s / 4, s % 4);
    if (weight == 0.0) continue;
    const SignedPermutation& sp = strings[static_cast<std::size_t>(s)];
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        out(sp.perm[i], sp.perm[j]) += weight * sp.phase[i] * rho(i, j) * std::conj(sp.phase[j]);
      }
    }
  }
  return out;
}

DensityMatrix4 teleport_output(const TeleportChannel& ch, const InputPureState& s) {
  const Matrix4c out = twirl(ch.p, input_state(s).matrix());
  if (!validate(out).passed) throw InternalConsistency("teleport_output: output is not a valid state");
  return DensityMatrix4::from_matrix(out);
}

double fidelity_pointwise(const TeleportChannel& ch, const InputPureState& s) {
  const Vector4c psi = s.ket();
  const Matrix4c rho_in = psi * psi.adjoint();
  const Matrix4c rho_out = twirl(ch.p, rho_in);
  const double shortcut = overlap(psi, rho_out);
  const double general = linalg::state_fidelity(rho_in, rho_out);
  if (std::abs(shortcut - general) > kPathAgreementTol) {
    throw InternalConsistency("fidelity_pointwise: pure-state shortcut " + std::to_string(shortcut) +
                              " disagrees with Uhlmann fidelity " + std::to_string(general));
  }
  return general;
}

double fidelity_average(const TeleportChannel& ch, const QuadratureSpec& spec) {
  if (spec.theta_nodes < kMinNodes || spec.phi_nodes < kMinNodes) {
    throw InvalidInput("fidelity_average: need at least 64 x 64 quadrature nodes");
  }
  const GaussLegendreRule rule = gauss_legendre(spec.theta_nodes);
  const double dphi = 2.0 * std::numbers::pi / spec.phi_nodes;
  double total = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double theta = std::acos(rule.nodes[i]);
    double ring = 0.0;
    for (int j = 0; j < spec.phi_nodes; ++j) {
      ring += pure_twirl_fidelity(ch.p, InputPureState{theta, j * dphi}.ket());
    }
    total += rule.weights[i] * ring * dphi;
  }
  return std::clamp(total / (4.0 * std::numbers::pi), 0.0, 1.0);
}

TeleportReport make_report(const TeleportChannel& ch, const InputPureState& s, const QuadratureSpec& spec) {
  TeleportReport r;
  r.theta = s.theta;
  r.phi = s.phi;
  r.fidelity = fidelity_pointwise(ch, s);
  r.f_av = fidelity_average(ch, spec);
  return r;
}

JCOutputElements jc_output_closed(const JCParams& p, const InputPureState& s) {
  const JCStateElements e = jc_elements_frozen_noise(p);
  const double purity = p.state.purity;
  const double th = s.theta;
  const double ph = s.phi;
  const Complex e_minus = std::polar(1.0, -ph);
  const Complex e_2plus = std::polar(1.0, 2.0 * ph);
  const double bulk = 4.0 * e.y * e.y + (e.u + e.v) * (e.u + e.v);
  JCOutputElements out;
  out.kappa = 2.0 * e.y * (e.u + e.v);
  out.vartheta = 4.0 * e.z * e.w * std::cos(ph) * std::sin(th);
  out.chi = bulk * std::pow(std::sin(th / 2.0), 2);
  out.zeta = bulk * std::pow(std::cos(th / 2.0), 2);
  out.delta = 2.0 * purity * e_minus * (e.z * e.z + e.w * e.w * e_2plus) * std::sin(th);
  out.big_theta = 2.0 * purity * e_minus * (e.w * e.w + e.z * e.z * e_2plus) * std::sin(th);
  return out;
}

ClosedFidelity jc_fav_closed(const JCParams& p, const InputPureState& s) {
  const double g = p.state.purity;
  const double a = p.state.alpha;
  const double dt = p.delta_t();
  const double th = s.theta;
  const double ph = s.phi;
  const double sa2 = std::pow(std::sin(a), 2);
  const double ca2 = std::pow(std::cos(a), 2);
  const double s2a2 = std::pow(std::sin(2.0 * a), 2);
  const double sdt2 = std::pow(std::sin(dt), 2);

  ClosedFidelity out;
  out.f = (std::pow(6.0 + 5.0 * g + g * std::cos(2.0 * a) + 2.0 * g * std::cos(2.0 * dt) * sa2, 2) * (1.0 + ca2) +
           4.0 * std::pow(std::sin(th), 2) *
               (4.0 * g * g * std::pow(2.0 + std::cos(dt), 2) * s2a2 + std::pow(3.0 - 3.0 * g + 2.0 * g * sdt2 * sa2, 2))) /
          188.0;
  out.f_av = g * ((4.0 / 9.0) * std::cos(dt) * s2a2 - (5.0 * g / 64.0) * std::cos(4.0 * a) +
                  (6.0 + 19.0 * g + 7.0 * g * std::cos(2.0 * a)) / 108.0 +
                  (g / 72.0) * std::cos(4.0 * dt) * std::pow(std::sin(a), 4)) +
             0.25 + (g / 144.0) * (4.0 + 9.0 * g) * std::cos(2.0 * a) + (g / 576.0) * (80.0 + 135.0 * g) +
             (g * g / 18.0) * sdt2 * std::pow(std::sin(a), 6) * std::cos(2.0 * ph);
  return out;
}

DephasingOutputElements dephasing_output_closed(const DephasingParams& p, const InputPureState& s) {
  const DephasingStateElements e = dephasing_elements(p);
  DephasingOutputElements out;
  out.varpi = 2.0 * e.D * (e.A + e.B);
  out.sigma = 2.0 * e.C * e.C * std::polar(1.0, -s.phi) * std::sin(s.theta);
  out.upsilon = 4.0 * e.D * e.D * std::pow(std::cos(s.theta / 2.0), 2) + (e.A + e.B) * std::pow(std::sin(s.theta / 2.0), 2);
  return out;
}

ClosedFidelity dephasing_fav_closed(const DephasingParams& p, const InputPureState& s) {
  const double g = p.state.purity;
  const double lambda = memory_envelope(p.coupling, p.tau, p.t);
  const double s2a2 = std::pow(std::sin(2.0 * p.state.alpha), 2);
  const double low = std::pow((1.0 - g) / 4.0, 2);
  const double high = std::pow((1.0 + g) / 4.0, 2);
  const double corner = g * g * lambda * lambda / 2.0 * s2a2;
  ClosedFidelity out;
  out.f = (low + corner) * std::pow(std::sin(s.theta), 2) + high * (1.0 + std::pow(std::cos(s.theta), 2));
  out.f_av = (2.0 / 3.0) * high + (1.0 / 3.0) * (low + corner);
  return out;
}

}  // namespace qcorr
