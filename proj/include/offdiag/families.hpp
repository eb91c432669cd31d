#pragma once

/*
 * Structural results for special unitary families: closed-form qubit traces,
 * diagonal and permuting unitaries on a family eigenbasis, the nonnegative
 * permutation coefficients behind the dimension-parity sign rule, and the
 * solid angle swept by transported Bloch loops.
 */

#include <vector>

#include "offdiag/phases.hpp"

namespace offdiag {

inline constexpr double kPatternTol = 1e-10;
inline constexpr double kUnitModulusTol = 1e-12;
inline constexpr double kPhaseProductTol = 1e-8;
inline constexpr double kCoefficientImagTol = 1e-10;

/// Closed-form qubit traces at one SU(2) scan point, parametrized by the
/// diagonal element eta e^(i alpha) and the larger eigenvalue lambda1.
struct QubitScanPoint {
  double eta;
  double alpha;
  double lambda1;
  Complex t1;   // Tr(U rho1)
  Complex t2;   // Tr(U rho2)
  Complex t12;  // Tr(U sqrt(rho1) U sqrt(rho2))
};

QubitScanPoint qubit_traces(double eta, double alpha, double lambda1);

/// Explicit SU(2) matrix with <1|U|1> = eta e^(i alpha) and
/// U_12 U_21 = eta^2 - 1; offdiag_phase fixes the leftover freedom, which
/// none of the three traces depend on.
Matrix su2_unitary(double eta, double alpha, double offdiag_phase = 0.0);

/// A unitary built from unit-modulus phases together with whether the phase
/// product matches the SU(N) value for its pattern.
struct FlaggedUnitary {
  Matrix matrix;
  bool special;
};

/// U_d = sum_k phases[k] |A_k><A_k| in the given basis (standard basis when
/// empty). SU(N) iff the phase product is +1.
FlaggedUnitary diagonal_unitary(const std::vector<Complex>& phases,
                                const Matrix& basis = Matrix());

/// U_p = sum_k phases[k] |A_k><A_(k+1 mod N)| in the given basis, the cyclic
/// pattern that maps every eigenstate to an orthogonal one. SU(N) iff the
/// phase product is (-1)^(N-1).
FlaggedUnitary permutation_unitary(const std::vector<Complex>& phases,
                                   const Matrix& basis = Matrix());

/// Closed form sum_k (U_kk)^l (lambda_(k-j1) ... lambda_(k-jl))^(1/l) for a
/// unitary diagonal in the family basis; equals the general trace functional.
Complex diagonal_trace(const Matrix& u_d, const OrthogonalFamily& family,
                       const std::vector<int>& sequence);

/// Coefficient value for one full-length member sequence under a permuting
/// SU(N) unitary: (-1)^(N-1) Tr(U_p rho_j1^(1/N) ... U_p rho_jN^(1/N)),
/// real and nonnegative.
struct PermutationCoefficient {
  std::vector<int> sequence;
  double value;
};

PermutationCoefficient f_coefficient(const OrthogonalFamily& family,
                                     const Matrix& u_p,
                                     const std::vector<int>& sequence);

/// Oriented solid angle enclosed by a closed geodesic polygon on the unit
/// sphere, counted with winding multiplicity and reported in [0, 4 pi); the
/// angle is only defined modulo the full sphere. Consecutive waypoints must
/// be neither equal nor antipodal; insert arc midpoints to split long legs.
double spherical_polygon_solid_angle(
    const std::vector<Eigen::Vector3d>& waypoints);

/// Bloch vector of a normalized qubit state.
Eigen::Vector3d bloch_vector(const Vector& state);

}  // namespace offdiag
