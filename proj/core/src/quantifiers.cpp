#include "qcorr/quantifiers.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include "qcorr/errors.hpp"

namespace qcorr {
namespace {

constexpr double kPairTol = 1e-12;
constexpr double kNegativeSlack = 1e-9;
constexpr double kPolishStepTol = 1e-10;
constexpr int kMinDirections = 1000;

// Local observables are (r . sigma) x I, so only the 2x2 factor is needed.
Matrix2c bloch_operator(const Eigen::Vector3d& r) {
  Matrix2c n;
  n << r(2), Complex(r(0), -r(1)), Complex(r(0), r(1)), -r(2);
  return n;
}

// (n x I) m for a 4x4 m.
Matrix4c left_local(const Matrix2c& n, const Matrix4c& m) {
  Matrix4c out;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int j = 0; j < 4; ++j) out(2 * a + b, j) = n(a, 0) * m(b, j) + n(a, 1) * m(2 + b, j);
    }
  }
  return out;
}

// m (n x I).
Matrix4c right_local(const Matrix4c& m, const Matrix2c& n) {
  Matrix4c out;
  for (int i = 0; i < 4; ++i) {
    for (int c = 0; c < 2; ++c) {
      for (int d = 0; d < 2; ++d) out(i, 2 * c + d) = m(i, d) * n(0, c) + m(i, 2 + d) * n(1, c);
    }
  }
  return out;
}

double finish(double raw, const char* what) {
  if (!std::isfinite(raw) || raw < -kNegativeSlack) {
    throw InternalConsistency(std::string(what) + ": value " + std::to_string(raw) + " outside [0, 1]");
  }
  return std::clamp(raw, 0.0, 1.0);
}

double largest_eigenvalue(const CorrelationMatrix3& m) {
  return linalg::eig_symmetric(m).values(0);
}

Eigen::Vector3d polish_on_sphere(const std::function<double(const Eigen::Vector3d&)>& f, Eigen::Vector3d r,
                                 double step) {
  double best = f(r);
  while (step > kPolishStepTol) {
    // Tangent basis at r.
    const Eigen::Vector3d helper = std::abs(r(0)) < 0.9 ? Eigen::Vector3d::UnitX() : Eigen::Vector3d::UnitY();
    const Eigen::Vector3d e1 = r.cross(helper).normalized();
    const Eigen::Vector3d e2 = r.cross(e1);
    bool moved = false;
    for (const Eigen::Vector3d& d : {e1, Eigen::Vector3d(-e1), e2, Eigen::Vector3d(-e2)}) {
      const Eigen::Vector3d candidate = (r + step * d).normalized();
      const double value = f(candidate);
      if (value < best) {
        best = value;
        r = candidate;
        moved = true;
        break;
      }
    }
    if (!moved) step *= 0.5;
  }
  return r;
}

double minimise_on_sphere(const std::function<double(const Eigen::Vector3d&)>& f, int n_dirs) {
  if (n_dirs < kMinDirections) {
    throw InvalidInput("brute-force minimisation needs at least " + std::to_string(kMinDirections) + " directions");
  }
  Eigen::Vector3d best_dir = fibonacci_direction(0, n_dirs);
  double best = f(best_dir);
  for (int i = 1; i < n_dirs; ++i) {
    const Eigen::Vector3d r = fibonacci_direction(i, n_dirs);
    const double value = f(r);
    if (value < best) {
      best = value;
      best_dir = r;
    }
  }
  // Start at twice the lattice spacing so the true minimum lies inside the
  // first pattern.
  const double spacing = std::sqrt(4.0 * std::numbers::pi / n_dirs);
  return f(polish_on_sphere(f, best_dir, 2.0 * spacing));
}

}  // namespace

const char* to_string(Method m) {
  switch (m) {
    case Method::kGeneric:
      return "generic";
    case Method::kClosedForm:
      return "closed_form";
    case Method::kBruteForce:
      return "brute_force";
  }
  return "unknown";
}

Eigen::Vector3d fibonacci_direction(int i, int n) {
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  const double z = 1.0 - (2.0 * i + 1.0) / n;
  const double radius = std::sqrt(std::max(0.0, 1.0 - z * z));
  const double phi = golden_angle * i;
  return {radius * std::cos(phi), radius * std::sin(phi), z};
}

CorrelationMatrix3 skew_correlation_matrix(const DensityMatrix4& rho) {
  const Matrix4c root = linalg::matrix_sqrt_psd(rho.matrix());
  std::array<Matrix4c, 3> local;
  for (int k = 0; k < 3; ++k) local[k] = right_local(root, linalg::pauli(k + 1));
  CorrelationMatrix3 w;
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) {
      w(i, j) = (local[i] * local[j]).trace().real();
      w(j, i) = w(i, j);
    }
  }
  return w;
}

CorrelationMatrix3 fisher_correlation_matrix(const DensityMatrix4& rho) {
  linalg::EigenSystem es = linalg::eig_hermitian(rho.matrix());
  es.values = es.values.cwiseMax(0.0);
  const Matrix4c v = es.vectors;
  std::array<Matrix4c, 3> sigma_eig;
  for (int k = 0; k < 3; ++k) sigma_eig[k] = v.adjoint() * left_local(linalg::pauli(k + 1), v);

  CorrelationMatrix3 m = CorrelationMatrix3::Zero();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const double sum = es.values(i) + es.values(j);
      if (sum < kPairTol) continue;
      const double weight = 2.0 * es.values(i) * es.values(j) / sum;
      for (int k = 0; k < 3; ++k) {
        for (int l = k; l < 3; ++l) {
          m(k, l) += weight * (sigma_eig[k](i, j) * sigma_eig[l](j, i)).real();
        }
      }
    }
  }
  for (int k = 0; k < 3; ++k) {
    for (int l = 0; l < k; ++l) m(k, l) = m(l, k);
  }
  return m;
}

QuantifierResult lqu_generic(const DensityMatrix4& rho) {
  return {finish(1.0 - largest_eigenvalue(skew_correlation_matrix(rho)), "lqu_generic"), Method::kGeneric};
}

QuantifierResult lqfi_generic(const DensityMatrix4& rho) {
  return {finish(1.0 - largest_eigenvalue(fisher_correlation_matrix(rho)), "lqfi_generic"), Method::kGeneric};
}

double skew_information(const Matrix4c& sqrt_rho, const Eigen::Vector3d& r) {
  const Matrix2c n = bloch_operator(r);
  const Matrix4c commutator = right_local(sqrt_rho, n) - left_local(n, sqrt_rho);
  Complex tr = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) tr += commutator(i, j) * commutator(j, i);
  }
  return -0.5 * tr.real();
}

double local_fisher_information(const linalg::EigenSystem& spectrum, const Eigen::Vector3d& r) {
  const Matrix4c v = spectrum.vectors;
  const Matrix4c k = v.adjoint() * left_local(bloch_operator(r), v);
  double variance_part = 0.0;
  double coherent_part = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double ei = std::max(spectrum.values(i), 0.0);
    for (int j = 0; j < 4; ++j) {
      const double ej = std::max(spectrum.values(j), 0.0);
      const double mod2 = std::norm(k(i, j));
      variance_part += ei * mod2;
      const double sum = ei + ej;
      if (sum >= kPairTol) coherent_part += 2.0 * ei * ej / sum * mod2;
    }
  }
  return variance_part - coherent_part;
}

QuantifierResult lqu_brute_force(const DensityMatrix4& rho, int n_dirs) {
  const Matrix4c root = linalg::matrix_sqrt_psd(rho.matrix());
  const double value =
      minimise_on_sphere([&](const Eigen::Vector3d& r) { return skew_information(root, r); }, n_dirs);
  return {finish(value, "lqu_brute_force"), Method::kBruteForce};
}

QuantifierResult lqfi_brute_force(const DensityMatrix4& rho, int n_dirs) {
  const linalg::EigenSystem spectrum = linalg::eig_hermitian(rho.matrix());
  const double value =
      minimise_on_sphere([&](const Eigen::Vector3d& r) { return local_fisher_information(spectrum, r); }, n_dirs);
  return {finish(value, "lqfi_brute_force"), Method::kBruteForce};
}

QuantifierResult coherence_jsd(const DensityMatrix4& rho) {
  const Matrix4c& m = rho.matrix();
  const Matrix4c diag = m.diagonal().asDiagonal();
  const Matrix4c mid = 0.5 * (m + diag);
  const double j = linalg::von_neumann_entropy(mid) -
                   0.5 * (linalg::von_neumann_entropy(m) + linalg::von_neumann_entropy(diag));
  return {std::sqrt(std::max(j, 0.0)), Method::kGeneric};
}

}  // namespace qcorr
