#pragma once

/*
 * Off-diagonal phase functionals. The l-point functional evaluates
 * Phi[ Tr(U X_1 U X_2 ... U X_l) ] where the X are rank-1 projectors in the
 * pure case and l-th roots of density operators in the mixed case, with
 * Phi[z] = z/|z|. Traces below a tolerance carry no phase and are reported
 * as indeterminate rather than as an error.
 */

#include <vector>

#include "offdiag/states.hpp"

namespace offdiag {

inline constexpr double kPhaseTol = 1e-9;
inline constexpr double kProjectorTol = 1e-10;

/// Outcome of a phase functional. The raw trace is always kept; the phase
/// factor exists only when |raw_trace| clears the tolerance.
struct PhaseResult {
  Complex raw_trace{0.0, 0.0};
  double tolerance_used = kPhaseTol;
  bool determinate = false;
  Complex phase_factor{0.0, 0.0};  // raw_trace / |raw_trace| if determinate
  double argument = 0.0;           // in (-pi, pi] if determinate, else NaN
};

/// Phi[z] with an indeterminacy threshold on |z|.
PhaseResult phi(Complex z, double tol = kPhaseTol);

/// Phase of Tr(U P_1 U P_2 ... U P_l) for mutually orthogonal rank-1
/// projectors.
PhaseResult gamma_pure(const Matrix& u, const std::vector<Matrix>& projectors,
                       double tol = kPhaseTol);

/// Phase of Tr(U rho_1^(1/l) U rho_2^(1/l) ... U rho_l^(1/l)). Orthogonality
/// of the supplied operators is the caller's responsibility; the connecting
/// unitary is generally unknown here.
PhaseResult gamma_mixed(const Matrix& u,
                        const std::vector<DensityOperator>& rhos,
                        double tol = kPhaseTol);

}  // namespace offdiag
