#pragma once

#include <vector>

namespace qcorr {

struct GaussLegendreRule {
  std::vector<double> nodes;    // ascending, in (-1, 1)
  std::vector<double> weights;  // sum to 2
};

/// n-point Gauss-Legendre rule on [-1, 1], exact for polynomials of degree
/// 2n - 1. Newton iteration on P_n from the Tricomi initial guesses.
/// Throws InvalidInput if n < 1.
GaussLegendreRule gauss_legendre(int n);

}  // namespace qcorr
