#pragma once

/*
 * Scenario runner behind the CLI: JSON configs in, CSV/JSON/text results
 * out. Outputs are deterministic for a fixed seed; reals are printed with 17
 * significant digits so the CSV round-trips doubles exactly.
 */

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "offdiag/families.hpp"
#include "offdiag/twophoton.hpp"

namespace offdiag {

enum class ScenarioKind { qubit_scan, families, two_photon, verify };

ScenarioKind kind_from_string(const std::string& name);
std::string to_string(ScenarioKind kind);

struct OutputSpec {
  std::string path = "-";      // "-" writes to stdout
  std::string format = "";     // csv | json | text; empty picks the default
};

struct Scenario {
  ScenarioKind kind = ScenarioKind::verify;
  std::uint64_t seed = 1;
  int steps = kDefaultSteps;
  double tol = kPhaseTol;
  OutputSpec output;
  nlohmann::json parameters = nlohmann::json::object();
};

/// Parses and validates the scenario envelope; kind-specific parameters are
/// validated by run_scenario before any computation.
Scenario scenario_from_json(const nlohmann::json& config);

/// One verification check outcome. `comparison` tells how measured relates
/// to the bound for a pass ("max <=" or "min >=").
struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double bound = 0.0;
  std::string comparison = "max <=";
  int cases = 0;
};

/// The invariant suite behind the verify scenario.
std::vector<CheckResult> run_verification(std::uint64_t seed, int trials,
                                          int steps);

/// Runs the scenario and writes its outputs. Returns 0 on success and 1 when
/// a verification check fails; configuration and I/O problems throw.
int run_scenario(const Scenario& scenario);

/// %.17g rendering used in all emitted CSV/JSON text.
std::string format_real(double value);

}  // namespace offdiag
