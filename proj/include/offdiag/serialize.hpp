#pragma once

// JSON carriers for matrices, density operators and phase results.
// Matrices serialize as {"dim": N, "re": [[...]], "im": [[...]]} row-major.

#include "json.hpp"
#include "offdiag/phases.hpp"

namespace offdiag {

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

nlohmann::json density_to_json(const DensityOperator& rho);
DensityOperator density_from_json(const nlohmann::json& j);

// {"re", "im", "abs", "status", "arg"}; arg is null when indeterminate.
nlohmann::json phase_to_json(const PhaseResult& result);

}  // namespace offdiag
