#include "offdiag/states.hpp"

#include <cmath>
#include <string>

namespace offdiag {

DensityOperator make_density(const Matrix& matrix) {
  if (matrix.rows() != matrix.cols() || matrix.rows() < 1)
    throw DimensionMismatch("make_density: matrix must be square, N >= 1");
  if (!is_hermitian(matrix))
    throw NotHermitian("make_density: matrix is not Hermitian");
  SpectralDecomposition eig = hermitian_eig(matrix);
  if (eig.eigenvalues.minCoeff() < kPsdFloor)
    throw NotPSD("make_density: eigenvalue " +
                 std::to_string(eig.eigenvalues.minCoeff()) +
                 " below the PSD floor");
  const double trace = matrix.trace().real();
  if (std::abs(trace - 1.0) > kHermitianTol)
    throw TraceNotOne("make_density: trace is " + std::to_string(trace));
  int rank = 0;
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i)
    if (eig.eigenvalues[i] > kRankTol) ++rank;
  return DensityOperator(matrix, std::move(eig), rank);
}

Matrix shift_unitary(const Matrix& basis) {
  require_unitary(basis);
  const Eigen::Index n = basis.cols();
  Matrix u = Matrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k)
    u += basis.col((k + 1) % n) * basis.col(k).adjoint();
  return u;
}

OrthogonalFamily generate_family(const DensityOperator& rho1) {
  const Eigen::Index n = rho1.dim();
  const SpectralDecomposition& eig = rho1.spectrum();

  OrthogonalFamily family;
  family.basis.resize(n, n);
  family.lambdas.resize(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    family.lambdas[k] = eig.eigenvalues[n - 1 - k];
    family.basis.col(k) = eig.eigenvectors.col(n - 1 - k);
  }
  family.shift = shift_unitary(family.basis);

  // member m carries lambda_k on |A_(k+m mod N)>
  for (Eigen::Index m = 0; m < n; ++m) {
    Matrix rho = Matrix::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
      const Eigen::Index col = (k + m) % n;
      rho += family.lambdas[k] * family.basis.col(col) *
             family.basis.col(col).adjoint();
    }
    rho = (rho + rho.adjoint()) / 2.0;
    family.members.push_back(make_density(rho));
  }
  return family;
}

double max_same_group_overlap(const DensityOperator& rho, const Matrix& u) {
  require_unitary(u);
  if (u.rows() != rho.dim())
    throw DimensionMismatch("overlap: unitary dimension mismatch");
  const SpectralDecomposition& eig = rho.spectrum();
  const Matrix w = eig.eigenvectors.adjoint() * u * eig.eigenvectors;
  double worst = 0.0;
  for (const auto& group : group_degenerate(eig.eigenvalues)) {
    for (Eigen::Index j : group)
      for (Eigen::Index k : group)
        worst = std::max(worst, std::abs(w(j, k)));
  }
  return worst;
}

bool are_orthogonal(const DensityOperator& rho_a, const DensityOperator& rho_b,
                    const Matrix& u) {
  require_unitary(u);
  if (rho_a.dim() != rho_b.dim() || u.rows() != rho_a.dim())
    throw DimensionMismatch("are_orthogonal: dimension mismatch");
  const Matrix transported = u * rho_a.matrix() * u.adjoint();
  if (max_abs(transported - rho_b.matrix()) > kConnectionTol)
    throw NotConnected(
        "are_orthogonal: rho_b does not equal U rho_a U^dag within 1e-8");
  return max_same_group_overlap(rho_a, u) <= kOverlapTol;
}

double interference_profile(const DensityOperator& rho, const Matrix& u,
                            double chi) {
  require_unitary(u);
  if (u.rows() != rho.dim())
    throw DimensionMismatch("interference_profile: dimension mismatch");
  const SpectralDecomposition& eig = rho.spectrum();
  double intensity = 2.0;
  for (Eigen::Index k = 0; k < eig.eigenvalues.size(); ++k) {
    const Complex w =
        eig.eigenvectors.col(k).dot(u * eig.eigenvectors.col(k));
    intensity += 2.0 * eig.eigenvalues[k] * std::abs(w) *
                 std::cos(chi - std::arg(w));
  }
  return intensity;
}

}  // namespace offdiag
