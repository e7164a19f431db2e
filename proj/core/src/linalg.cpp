#include "qcorr/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "qcorr/errors.hpp"

namespace qcorr::linalg {
namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagTol = 1e-14;

// Eigenvalues below this are solver noise in matrix_sqrt_psd; their square
// roots would otherwise leak in at the 1e-8 level.
constexpr double kSqrtNoiseFloor = kOffDiagTol;

// Eigenvalues at or below this are outside the support in state_fidelity.
constexpr double kSupportTol = 1e-13;

double off_diagonal_norm(const MatrixXc& a) {
  double sum = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i != j) sum += std::norm(a(i, j));
    }
  }
  return std::sqrt(sum);
}

// One Jacobi rotation in the (p, q) plane. The 2x2 block [[a_pp, g e^{i phi}],
// [g e^{-i phi}, a_qq]] is first rotated to real form by diag(1, e^{-i phi})
// and then diagonalised by a real Givens rotation.
void rotate(MatrixXc& a, MatrixXc& v, Eigen::Index p, Eigen::Index q) {
  const Complex apq = a(p, q);
  const double g = std::abs(apq);
  if (g == 0.0) return;
  const Complex phase = apq / g;  // e^{i phi}
  const Complex phase_conj = std::conj(phase);

  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * g);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  // G = [[c, s], [-s e^{-i phi}, c e^{-i phi}]]; A <- G^dagger A G, V <- V G.
  const Eigen::Index n = a.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp - s * phase_conj * akq;
    a(k, q) = s * akp + c * phase_conj * akq;
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk - s * phase * aqk;
    a(q, k) = s * apk + c * phase * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp - s * phase_conj * vkq;
    v(k, q) = s * vkp + c * phase_conj * vkq;
  }
}

void check_state(const MatrixXc& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw InvalidState(std::string(what) + ": matrix is not square");
  }
  const double trace_defect = std::abs(m.trace().real() - 1.0);
  if (trace_defect > kTraceTol) {
    throw InvalidState(std::string(what) + ": trace deviates from one by " + std::to_string(trace_defect));
  }
}

// Eigenvalues with tiny negatives clamped; throws below -kClampWindow.
EigenSystem eig_psd(const MatrixXc& m) {
  EigenSystem es = eig_hermitian(m);
  const double lowest = es.values(es.values.size() - 1);
  if (lowest < -kClampWindow) {
    throw NotPositiveSemidefinite("eigenvalue " + std::to_string(lowest) + " is below the clamping window");
  }
  es.values = es.values.cwiseMax(0.0);
  return es;
}

}  // namespace

MatrixXc EigenSystem::reconstruct() const {
  return vectors * values.cast<Complex>().asDiagonal() * vectors.adjoint();
}

double hermiticity_defect(const MatrixXc& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

EigenSystem eig_hermitian(const MatrixXc& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw InvalidInput("eig_hermitian: expected a non-empty square matrix");
  }
  const double defect = hermiticity_defect(m);
  if (defect > kHermitianTol) {
    throw InvalidInput("eig_hermitian: matrix is not Hermitian (defect " + std::to_string(defect) + ")");
  }

  const Eigen::Index n = m.rows();
  MatrixXc a = 0.5 * (m + m.adjoint());
  MatrixXc v = MatrixXc::Identity(n, n);
  const double scale = std::max(1.0, a.norm());

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) < kOffDiagTol * scale) break;
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        rotate(a, v, p, q);
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return a(i, i).real() > a(j, j).real(); });

  EigenSystem out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index src = order[static_cast<std::size_t>(k)];
    out.values(k) = a(src, src).real();
    out.vectors.col(k) = v.col(src);
  }
  return out;
}

EigenSystem eig_symmetric(const Eigen::MatrixXd& m) {
  return eig_hermitian(m.cast<Complex>());
}

MatrixXc matrix_sqrt_psd(const MatrixXc& m) {
  EigenSystem es = eig_psd(m);
  for (Eigen::Index k = 0; k < es.values.size(); ++k) {
    es.values(k) = es.values(k) < kSqrtNoiseFloor ? 0.0 : std::sqrt(es.values(k));
  }
  return es.reconstruct();
}

double von_neumann_entropy(const MatrixXc& m) {
  check_state(m, "von_neumann_entropy");
  const EigenSystem es = eig_psd(m);
  double s = 0.0;
  for (Eigen::Index k = 0; k < es.values.size(); ++k) {
    const double p = es.values(k);
    if (p > 0.0) s -= p * std::log2(p);
  }
  return std::max(s, 0.0);
}

double state_fidelity(const MatrixXc& a, const MatrixXc& b) {
  check_state(a, "state_fidelity");
  check_state(b, "state_fidelity");
  if (a.rows() != b.rows()) {
    throw InvalidState("state_fidelity: dimension mismatch");
  }
  const EigenSystem ea = eig_psd(a);
  const EigenSystem eb = eig_psd(b);
  const auto rank = [](const EigenSystem& es) { return (es.values.array() > kSupportTol).count(); };

  // F is symmetric; restrict to the support of the lower-rank argument.
  const bool swap = rank(eb) < rank(ea);
  const EigenSystem& support = swap ? eb : ea;
  const MatrixXc& other = swap ? a : b;
  const Eigen::Index r = rank(support);

  const MatrixXc basis = support.vectors.leftCols(r);
  const Eigen::VectorXd roots = support.values.head(r).cwiseSqrt();
  MatrixXc x = basis.adjoint() * other * basis;
  for (Eigen::Index i = 0; i < r; ++i) {
    for (Eigen::Index j = 0; j < r; ++j) x(i, j) *= roots(i) * roots(j);
  }
  x = 0.5 * (x + x.adjoint());

  const EigenSystem ex = eig_psd(x);
  const double root_trace = ex.values.cwiseSqrt().sum();
  return std::clamp(root_trace * root_trace, 0.0, 1.0);
}

const Matrix2c& pauli(int k) {
  static const Matrix2c kPauli[4] = {
      (Matrix2c() << 1, 0, 0, 1).finished(),
      (Matrix2c() << 0, 1, 1, 0).finished(),
      (Matrix2c() << 0, Complex(0, -1), Complex(0, 1), 0).finished(),
      (Matrix2c() << 1, 0, 0, -1).finished(),
  };
  if (k < 0 || k > 3) throw InvalidInput("pauli: index must be in 0..3");
  return kPauli[k];
}

MatrixXc kron(const MatrixXc& a, const MatrixXc& b) {
  MatrixXc out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace qcorr::linalg
