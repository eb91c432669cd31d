#pragma once

/*
 * Parallel-transporting unitary paths: horizontal lifts of a generator curve
 * and verification of the transport conditions on discrete paths.
 */

#include <vector>

#include "offdiag/linalg.hpp"

namespace offdiag {

inline constexpr double kPathUnitaryTol = 1e-9;

/// Discretized one-parameter family of unitaries starting at the identity.
struct UnitaryPath {
  std::vector<double> s;        // strictly increasing, s[0] = 0
  std::vector<Matrix> unitaries;

  std::size_t size() const { return s.size(); }
  const Matrix& final_unitary() const { return unitaries.back(); }
};

/// Validates the path invariants (unitarity, identity start, increasing s).
UnitaryPath make_path(std::vector<double> s, std::vector<Matrix> unitaries);

/// Hermitian j minus its diagonal part in the given orthonormal basis. The
/// result has <A_k|j'|A_k> = 0 for every basis column and zero trace.
Matrix project_parallel(const Matrix& j, const Matrix& basis);

/// Horizontal lift of the generator over [0, s_end]: every step removes the
/// generator's diagonal part in the transported frame U(s) * basis, so no
/// basis state accumulates local phase. Midpoint rule with a midpoint-frame
/// corrector; the final unitary lands in SU(N).
UnitaryPath transport_path(const GeneratorFn& generator, const Matrix& basis,
                           double s_end, int steps = kDefaultSteps);

/// Largest discrete local phase accumulation rate over the path,
/// max over k and adjacent samples of |arg <A_k|U_i^dag U_(i+1)|A_k>| / ds.
/// Zero for perfect transport.
double transport_defect(const UnitaryPath& path, const Matrix& basis);

}  // namespace offdiag
