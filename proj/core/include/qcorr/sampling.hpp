#pragma once

#include <random>

#include "qcorr/linalg.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

/// Ginibre-distributed two-qubit state G G^dagger / Tr(G G^dagger) with G a
/// 4 x rank complex Gaussian matrix (rank in 1..4).
DensityMatrix4 random_density_matrix(std::mt19937_64& rng, int rank = 4);

/// Haar-random unitary of the given dimension (QR of a Ginibre matrix with
/// the phases of R's diagonal removed).
MatrixXc random_unitary(std::mt19937_64& rng, int dim);

/// U_A x U_B with independent Haar single-qubit factors.
Matrix4c random_local_unitary(std::mt19937_64& rng);

/// Uniformly random pure input on the Bloch sphere of the teleported pair.
InputPureState random_input(std::mt19937_64& rng);

}  // namespace qcorr
