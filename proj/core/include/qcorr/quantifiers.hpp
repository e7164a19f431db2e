#pragma once

#include <Eigen/Dense>

#include "qcorr/linalg.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

/// 3x3 real symmetric matrix indexed by Pauli directions x, y, z on qubit A.
using CorrelationMatrix3 = Eigen::Matrix3d;

enum class Method { kGeneric, kClosedForm, kBruteForce };

const char* to_string(Method m);

struct QuantifierResult {
  double value = 0.0;
  Method method = Method::kGeneric;
};

/// W_ij = Tr{sqrt(rho) (s_i x I) sqrt(rho) (s_j x I)}.
CorrelationMatrix3 skew_correlation_matrix(const DensityMatrix4& rho);

/// M_kl = sum_{i,j} 2 e_i e_j / (e_i + e_j) <i|s_k x I|j><j|s_l x I|i> over
/// the eigenpairs of rho, pairs with e_i + e_j < 1e-12 skipped. The i = j
/// terms are included: they carry the <s_k><s_l> part that makes the
/// quantifier vanish on product states.
CorrelationMatrix3 fisher_correlation_matrix(const DensityMatrix4& rho);

/// Local quantum uncertainty, 1 - lambda_max(W).
QuantifierResult lqu_generic(const DensityMatrix4& rho);

/// Local quantum Fisher information, 1 - lambda_max(M).
QuantifierResult lqfi_generic(const DensityMatrix4& rho);

/// Wigner-Yanase skew information -1/2 Tr([sqrt(rho), K]^2) of the local
/// observable K = (r . sigma) x I, with sqrt(rho) supplied by the caller.
double skew_information(const Matrix4c& sqrt_rho, const Eigen::Vector3d& r);

/// Quantum Fisher information Tr(rho K^2) - sum_{i,j} 2 e_i e_j/(e_i + e_j)
/// |<i|K|j>|^2 of K = (r . sigma) x I, in the normalisation where pure states
/// give the variance of K.
double local_fisher_information(const linalg::EigenSystem& spectrum, const Eigen::Vector3d& r);

/// Minimum direction on the unit sphere: Fibonacci lattice of n_dirs points
/// followed by pattern search in the tangent plane down to a 1e-10 step.
/// Throws InvalidInput if n_dirs < 1000.
QuantifierResult lqu_brute_force(const DensityMatrix4& rho, int n_dirs = 20000);
QuantifierResult lqfi_brute_force(const DensityMatrix4& rho, int n_dirs = 20000);

/// Square root of the quantum Jensen-Shannon divergence between rho and its
/// computational-basis diagonal, entropies in bits.
QuantifierResult coherence_jsd(const DensityMatrix4& rho);

/// Unit vector i of a Fibonacci lattice with n points.
Eigen::Vector3d fibonacci_direction(int i, int n);

}  // namespace qcorr
