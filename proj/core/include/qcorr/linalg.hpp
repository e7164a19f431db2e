#pragma once

#include <complex>

#include <Eigen/Dense>

namespace qcorr {

using Complex = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;
using MatrixXc = Eigen::MatrixXcd;
using Vector4c = Eigen::Vector4cd;
using VectorXc = Eigen::VectorXcd;
using Matrix3r = Eigen::Matrix3d;

namespace linalg {

/// Largest dimension the dense routines are exercised at (the 12x12 case is
/// the two-qubit + three-level cavity Hamiltonian).
inline constexpr Eigen::Index kMaxTestedDim = 12;

/// Hermiticity tolerance applied to every input of eig_hermitian.
inline constexpr double kHermitianTol = 1e-12;

/// Eigenvalues in [-kClampWindow, 0) are clamped to zero by the PSD routines;
/// anything more negative is rejected.
inline constexpr double kClampWindow = 1e-8;

/// Trace tolerance for von_neumann_entropy and state_fidelity inputs.
inline constexpr double kTraceTol = 1e-8;

/// Eigenvalues sorted descending; column k of `vectors` belongs to values(k).
struct EigenSystem {
  Eigen::VectorXd values;
  MatrixXc vectors;

  /// V diag(values) V^dagger.
  MatrixXc reconstruct() const;
};

/// Largest |m - m^dagger| entry.
double hermiticity_defect(const MatrixXc& m);

/// Cyclic complex Jacobi. Runs until the off-diagonal Frobenius norm falls
/// below 1e-14 relative to max(1, ||m||_F). Degenerate eigenspaces come back
/// as some orthonormal basis of the eigenspace.
///
/// Throws InvalidInput if m is not square or deviates from Hermitian by more
/// than kHermitianTol (entrywise).
EigenSystem eig_hermitian(const MatrixXc& m);

/// Real symmetric convenience overload (used for the 3x3 W and M matrices).
EigenSystem eig_symmetric(const Eigen::MatrixXd& m);

/// Principal square root of a PSD Hermitian matrix.
/// Throws NotPositiveSemidefinite when an eigenvalue is below -kClampWindow.
MatrixXc matrix_sqrt_psd(const MatrixXc& m);

/// -Tr(m log2 m) in bits, with 0 log 0 = 0.
/// Throws InvalidState when |Tr m - 1| > kTraceTol or m is not PSD.
double von_neumann_entropy(const MatrixXc& m);

/// Uhlmann fidelity (Tr sqrt(sqrt(a) b sqrt(a)))^2 between density matrices.
/// The square root is taken on the support of the lower-rank argument, so
/// pure inputs do not pick up sqrt-of-roundoff noise.
double state_fidelity(const MatrixXc& a, const MatrixXc& b);

/// Pauli matrices; index 0 is the identity.
const Matrix2c& pauli(int k);

/// Kronecker product of two dense matrices.
MatrixXc kron(const MatrixXc& a, const MatrixXc& b);

}  // namespace linalg
}  // namespace qcorr
