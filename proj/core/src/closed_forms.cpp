#include "qcorr/closed_forms.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "qcorr/linalg.hpp"

namespace qcorr {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kPairTol = 1e-12;
constexpr double kLogZeroSlack = 1e-12;

double sq(double x) { return x * x; }

// 2 a b / (a + b), dropped when the sum vanishes.
double harmonic(double a, double b) {
  const double sum = a + b;
  return std::abs(sum) < kPairTol ? 0.0 : 2.0 * a * b / sum;
}

// x ln x with 0 ln 0 = 0; NaN for genuinely negative x.
double xlogx(double x) {
  if (x > 0.0) return x * std::log(x);
  return x > -kLogZeroSlack ? 0.0 : kNaN;
}

double one_minus_max(double a, double b) {
  if (std::isnan(a) || std::isnan(b)) return kNaN;
  return 1.0 - std::max(a, b);
}

}  // namespace

JCClosedForms jc_closed_forms(const JCParams& p) {
  const JCStateElements e = jc_elements_frozen_noise(p);
  const double u = e.u, v = e.v, w = e.w, z = e.z, y = e.y;
  const double g = p.state.purity;
  const double s2a = std::sin(2.0 * p.state.alpha);
  const double c = std::cos(p.delta_t());

  JCClosedForms out;
  const double ryz = std::sqrt(y * y - z * z);
  const double ruv = std::sqrt(u * v - w * w);
  const double outer = u + v + 2.0 * ruv;
  const double inner = y + ryz;
  const double root = std::sqrt(2.0 * inner * outer);
  out.w11 = (2.0 * inner * outer + 4.0 * z * w + u * v * v) / root;
  out.w22 = (2.0 * inner * outer - 4.0 * z * w - u * v * v) / root;
  out.w33 = (u * u - 4.0 * w * w) / (2.0 * outer) + (v * v - 4.0 * z * z) / (4.0 * inner) + (u + v) / 4.0 + ruv + ryz +
            y * y;
  out.lqu = one_minus_max(out.w11, out.w33);

  const double spread = std::sqrt(9.0 * sq(u - v) + sq(2.0 + c) * g * g * s2a * s2a);
  out.eta[0] = (1.0 - g) / 4.0;
  out.eta[1] = out.eta[0] + g * sq(std::sin(p.state.alpha)) * sq(std::sin(p.delta_t())) / 3.0;
  out.eta[2] = 0.5 * (u + v - spread / 3.0);
  out.eta[3] = 0.5 * (u + v + spread / 3.0);

  const double denom = 4.0 * g * (2.0 + c) * s2a;
  const double root16 = std::sqrt(9.0 * sq(u - v) + 16.0 * g * g * sq(2.0 + c) * s2a * s2a);
  const double root1 = std::sqrt(9.0 * sq(u - v) + g * g * sq(2.0 + c) * s2a * s2a);
  out.chi_minus = (3.0 * (u - v) - root16) / denom;
  out.chi_plus = (3.0 * (u - v) + root16) / denom;
  out.chi_minus_alt = (3.0 * (u - v) - root1) / denom;
  out.chi_plus_alt = (3.0 * (u - v) + root1) / denom;

  const double e1 = out.eta[0], e2 = out.eta[1], e3 = out.eta[2], e4 = out.eta[3];
  const double cm = out.chi_minus, cp = out.chi_plus;
  const double nm = cm * cm + 1.0, np = cp * cp + 1.0;
  out.m11 = harmonic(e1, e3) * sq(cm - 1.0) / nm + harmonic(e1, e4) * sq(cp - 1.0) / np +
            harmonic(e2, e3) * sq(cm + 1.0) / nm + harmonic(e2, e4) * sq(cp + 1.0) / np;
  out.m22 = harmonic(e1, e3) * sq(cm + 1.0) / nm + harmonic(e1, e4) * sq(cp + 1.0) / np +
            harmonic(e2, e3) * sq(cm - 1.0) / nm + harmonic(e2, e4) * sq(cp - 1.0) / np;
  out.m33 = harmonic(e3, e4) * sq(cm * cp - 1.0) / (nm * np);
  out.lqfi = one_minus_max(out.m11, out.m33);

  const Matrix4c rho = x_state_matrix(e);
  const Matrix4c diag = rho.diagonal().asDiagonal();
  const linalg::EigenSystem mid = linalg::eig_hermitian(0.5 * (rho + diag));
  double j = 0.0;
  for (double eta : out.eta) j += xlogx(eta);
  j += xlogx(u) + xlogx(v) + 2.0 * xlogx(y);
  for (Eigen::Index k = 0; k < 4; ++k) j -= 2.0 * xlogx(mid.values(k));
  j /= 2.0 * std::numbers::ln2;
  out.coherence = j > -kLogZeroSlack ? std::sqrt(std::max(j, 0.0)) : kNaN;
  return out;
}

DephasingClosedForms dephasing_closed_forms(const DephasingParams& p) {
  const double g = p.state.purity;
  const double a = p.state.alpha;
  const double lam = memory_envelope(p.coupling, p.tau, p.t);
  const double s2a = std::sin(2.0 * a);
  const double c2a = std::cos(2.0 * a);
  const double c4a = std::cos(4.0 * a);

  DephasingClosedForms out;
  const double root = std::sqrt(2.0 * g * g * (1.0 + c4a) + 4.0 * lam * lam * s2a * s2a);
  out.lambda[0] = (1.0 - g) / 4.0;
  out.lambda[1] = out.lambda[0];
  out.lambda[2] = 0.25 * (1.0 + g - root);
  out.lambda[3] = 0.25 * (1.0 + g + root);

  const double eps_root = g * std::sqrt(lam * lam * s2a * s2a + c2a * c2a);
  out.eps_minus = (-c2a - eps_root) / (s2a * lam);
  out.eps_plus = (-c2a + eps_root) / (s2a * lam);

  const double l1 = out.lambda[0], l3 = out.lambda[2], l4 = out.lambda[3];
  out.m11 = 2.0 * (harmonic(l1, l3) + harmonic(l1, l4));
  out.m22 = out.m11;
  out.m33 = 2.0 * harmonic(l3, l4) * sq(out.eps_plus * out.eps_minus - 1.0) /
            ((out.eps_plus * out.eps_plus + 1.0) * (out.eps_minus * out.eps_minus + 1.0));
  out.lqfi = one_minus_max(out.m11, out.m33);

  out.sigma = 1.0 + (2.0 - 3.0 * g) * g - 4.0 * g * g * (lam * lam - 1.0) * s2a * s2a;
  out.theta = 2.0 * (g - 1.0) * std::sqrt(out.sigma) + 2.0 * (g * g - 1.0);
  out.w11 = (sq(out.theta) + g * g * lam * lam * s2a * s2a) / (4.0 * std::sqrt(out.theta));
  out.w22 = out.w11;
  const double head = 3.0 - g + 2.0 * std::sqrt(out.sigma);
  out.w33 = (head * head + 8.0 * g * g * lam * lam * s2a * s2a) / (8.0 * head);
  out.lqu = one_minus_max(out.w11, out.w33);

  out.varpi = 2.0 * g * g * (4.0 + lam * lam + (4.0 - lam * lam) * c4a);
  out.delta = 2.0 * g * g * (1.0 + lam * lam + (1.0 - lam * lam) * c4a);
  const double log16 = std::log(16.0);
  double j = (g - 1.0 - 2.0 * g * sq(std::cos(a)) + (1.0 + g) * std::log(240.0)) / (16.0 * log16);
  j -= g * sq(std::sin(a)) / 2.0;
  for (double sign : {-1.0, 1.0}) {
    const double t1 = 1.0 + g + sign * 2.0 * g * c2a;
    const double t2 = 2.0 + 2.0 * g + sign * std::sqrt(out.varpi);
    const double t3 = 1.0 + g + sign * std::sqrt(out.delta);
    // t log(t/4) = 4 (t/4) log(t/4), with 0 log 0 = 0.
    j += 4.0 * xlogx(t1 / 4.0) / (2.0 * log16);
    j -= 4.0 * xlogx(t2 / 4.0) / (2.0 * log16);
    j += 4.0 * xlogx(t3 / 4.0) / log16;
  }
  out.coherence = j >= 0.0 ? std::sqrt(j) : kNaN;
  return out;
}

}  // namespace qcorr
