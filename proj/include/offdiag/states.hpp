#pragma once

/*
 * Density operators with cached spectra, the interference criterion for
 * orthogonality of unitarily connected states, and cyclic families of
 * mutually orthogonal density operators.
 */

#include <vector>

#include "offdiag/linalg.hpp"

namespace offdiag {

inline constexpr double kRankTol = 1e-10;
inline constexpr double kOverlapTol = 1e-9;
inline constexpr double kConnectionTol = 1e-8;

class DensityOperator {
 public:
  const Matrix& matrix() const { return matrix_; }
  const SpectralDecomposition& spectrum() const { return spectrum_; }
  int rank() const { return rank_; }
  Eigen::Index dim() const { return matrix_.rows(); }

  /// matrix()^(p/q) from the cached spectrum, negative noise clamped to zero.
  Matrix power(int p, int q) const { return psd_power_from(spectrum_, p, q); }

 private:
  friend DensityOperator make_density(const Matrix&);
  DensityOperator(Matrix m, SpectralDecomposition s, int r)
      : matrix_(std::move(m)), spectrum_(std::move(s)), rank_(r) {}

  Matrix matrix_;
  SpectralDecomposition spectrum_;
  int rank_;
};

/// Validates Hermiticity, positivity and unit trace, caching the spectrum.
DensityOperator make_density(const Matrix& matrix);

/// Cyclic shift on the given orthonormal basis columns:
/// U_g = sum_n |A_(n+1 mod N)><A_n|, so (U_g)^N = identity.
Matrix shift_unitary(const Matrix& basis);

/// N mutually orthogonal density operators obtained by cycling the spectrum
/// of the first member through its own eigenbasis.
struct OrthogonalFamily {
  std::vector<DensityOperator> members;  // members[n] = U_g^n rho1 U_g^-n
  Matrix basis;        // eigenvector columns |A_k>, eigenvalues descending
  Matrix shift;        // U_g built on that basis
  RealVector lambdas;  // spectrum, descending, lambdas[k] attached to |A_k>

  int size() const { return static_cast<int>(members.size()); }
  Eigen::Index dim() const { return basis.rows(); }
};

OrthogonalFamily generate_family(const DensityOperator& rho1);

/// Largest |<A_j|U|A_k>| with j,k inside the same degenerate eigenvalue group
/// of rho. Diagnostic behind are_orthogonal; reduces to the largest diagonal
/// overlap for nondegenerate spectra.
double max_same_group_overlap(const DensityOperator& rho, const Matrix& u);

/// True iff U rho_a U^dag and rho_a interfere flatly for every choice of
/// eigenbasis representatives. Requires rho_b = U rho_a U^dag.
bool are_orthogonal(const DensityOperator& rho_a, const DensityOperator& rho_b,
                    const Matrix& u);

/// Two-beam intensity 2 + 2 sum_k lambda_k |w_k| cos(chi - arg w_k) with
/// w_k = <A_k|U|A_k>; flat in chi exactly for orthogonal pairs.
double interference_profile(const DensityOperator& rho, const Matrix& u,
                            double chi);

}  // namespace offdiag
