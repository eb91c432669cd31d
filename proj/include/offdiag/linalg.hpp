#pragma once

/*
 * Dense complex linear-algebra kernel: Hermitian eigendecomposition with a
 * fixed column-phase convention, fractional powers of positive semidefinite
 * matrices, path-ordered exponentials and trace products.
 */

#include <functional>
#include <vector>

#include "offdiag/types.hpp"

namespace offdiag {

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kPsdFloor = -1e-10;
// Eigenvalues with |lambda| at or below this are rank noise. Fractional
// powers flatten them to zero outright: pow amplifies +1e-16 noise into
// 1e-4..1e-8 spurious weight, which would leak into every root-based trace.
inline constexpr double kSpectrumFloor = 1e-10;
inline constexpr double kDegeneracyTol = 1e-9;
inline constexpr int kDefaultSteps = 1024;

/// Eigensystem of a Hermitian matrix. Eigenvalues ascending; eigenvector
/// columns orthonormal, each rotated so its largest-magnitude entry is real
/// and positive.
struct SpectralDecomposition {
  RealVector eigenvalues;
  Matrix eigenvectors;
};

double max_abs(const Matrix& m);
bool is_hermitian(const Matrix& m, double tol = kHermitianTol);
bool is_unitary(const Matrix& m, double tol = kUnitaryTol);
void require_hermitian(const Matrix& m, double tol = kHermitianTol);
void require_unitary(const Matrix& m, double tol = kUnitaryTol);

SpectralDecomposition hermitian_eig(const Matrix& m);

/// V diag(lambda^(p/q)) V^dag. Eigenvalues at or below kSpectrumFloor are
/// flattened to zero before powering; anything below kPsdFloor raises NotPSD.
Matrix psd_power(const Matrix& m, int p, int q);

/// Same power, reusing an existing decomposition (negative noise clamped).
Matrix psd_power_from(const SpectralDecomposition& eig, int p, int q);

/// exp(-i j t) for Hermitian j.
Matrix unitary_exp(const Matrix& j, double t);

using GeneratorFn = std::function<Matrix(double)>;

/// Path-ordered exponential of -i * generator(s) over [0, s_end]: product of
/// per-step exponentials evaluated at step midpoints, later factors leftmost.
Matrix ordered_exp(const GeneratorFn& generator, double s_end,
                   int steps = kDefaultSteps);

/// Tr(F1 F2 ... Fm) for square factors of equal dimension.
Complex trace_product(const std::vector<Matrix>& factors);

/// Index groups of (near-)degenerate values in a monotone array; adjacent
/// values closer than tol share a group.
std::vector<std::vector<Eigen::Index>> group_degenerate(
    const RealVector& values, double tol = kDegeneracyTol);

}  // namespace offdiag
