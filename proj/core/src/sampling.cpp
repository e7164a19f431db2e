#include "qcorr/sampling.hpp"

#include <cmath>
#include <numbers>

#include "qcorr/errors.hpp"

namespace qcorr {
namespace {

MatrixXc ginibre(std::mt19937_64& rng, int rows, int cols) {
  std::normal_distribution<double> normal(0.0, 1.0);
  MatrixXc g(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

}  // namespace

DensityMatrix4 random_density_matrix(std::mt19937_64& rng, int rank) {
  if (rank < 1 || rank > 4) throw InvalidInput("random_density_matrix: rank must be in 1..4");
  const MatrixXc g = ginibre(rng, 4, rank);
  Matrix4c m = g * g.adjoint();
  m /= m.trace().real();
  m = 0.5 * (m + m.adjoint()).eval();
  return DensityMatrix4::from_matrix(m);
}

MatrixXc random_unitary(std::mt19937_64& rng, int dim) {
  if (dim < 1) throw InvalidInput("random_unitary: dimension must be positive");
  const MatrixXc g = ginibre(rng, dim, dim);
  Eigen::HouseholderQR<MatrixXc> qr(g);
  MatrixXc q = qr.householderQ();
  const MatrixXc r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < dim; ++k) {
    const Complex d = r(k, k);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(k) *= d / mag;
  }
  return q;
}

Matrix4c random_local_unitary(std::mt19937_64& rng) {
  const MatrixXc a = random_unitary(rng, 2);
  const MatrixXc b = random_unitary(rng, 2);
  return linalg::kron(a, b);
}

InputPureState random_input(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double cos_theta = 2.0 * unit(rng) - 1.0;
  return {std::acos(cos_theta), 2.0 * std::numbers::pi * unit(rng)};
}

}  // namespace qcorr
