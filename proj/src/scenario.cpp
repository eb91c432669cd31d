#include "offdiag/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <sstream>

#include "offdiag/random.hpp"
#include "offdiag/serialize.hpp"

namespace offdiag {

using nlohmann::json;

std::string format_real(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

ScenarioKind kind_from_string(const std::string& name) {
  if (name == "qubit-scan") return ScenarioKind::qubit_scan;
  if (name == "families") return ScenarioKind::families;
  if (name == "two-photon") return ScenarioKind::two_photon;
  if (name == "verify") return ScenarioKind::verify;
  throw ConfigInvalid("kind: unknown scenario kind '" + name + "'");
}

std::string to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::qubit_scan: return "qubit-scan";
    case ScenarioKind::families: return "families";
    case ScenarioKind::two_photon: return "two-photon";
    case ScenarioKind::verify: return "verify";
  }
  return "unknown";
}

namespace {

void require_keys(const json& j, std::initializer_list<const char*> allowed,
                  const std::string& context) {
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* key : allowed)
      if (item.key() == key) known = true;
    if (!known)
      throw ConfigInvalid(context + ": unknown field '" + item.key() + "'");
  }
}

long get_integer(const json& j, const std::string& key, long fallback,
                 long min_value, const std::string& context) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number_integer())
    throw ConfigInvalid(context + "." + key + ": integer expected");
  const long value = j[key].get<long>();
  if (value < min_value)
    throw ConfigInvalid(context + "." + key + ": must be >= " +
                        std::to_string(min_value));
  return value;
}

double get_real(const json& j, const std::string& key, double fallback,
                const std::string& context) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number())
    throw ConfigInvalid(context + "." + key + ": number expected");
  return j[key].get<double>();
}

std::string get_string(const json& j, const std::string& key,
                       const std::string& fallback,
                       const std::string& context) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_string())
    throw ConfigInvalid(context + "." + key + ": string expected");
  return j[key].get<std::string>();
}

std::vector<double> get_real_list(const json& j, const std::string& key,
                                  std::vector<double> fallback,
                                  const std::string& context) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_array() || j[key].empty())
    throw ConfigInvalid(context + "." + key + ": nonempty array expected");
  std::vector<double> values;
  for (const json& item : j[key]) {
    if (!item.is_number())
      throw ConfigInvalid(context + "." + key + ": numbers expected");
    values.push_back(item.get<double>());
  }
  return values;
}

std::string sequence_label(const std::vector<int>& sequence) {
  std::string label;
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    if (i) label += '-';
    label += std::to_string(sequence[i]);
  }
  return label;
}

// All ordered selections of `length` distinct members out of n.
std::vector<std::vector<int>> all_sequences(int n, int length) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::vector<bool> used(n, false);
  auto recurse = [&](auto&& self) -> void {
    if (static_cast<int>(current.size()) == length) {
      out.push_back(current);
      return;
    }
    for (int i = 0; i < n; ++i) {
      if (used[i]) continue;
      used[i] = true;
      current.push_back(i);
      self(self);
      current.pop_back();
      used[i] = false;
    }
  };
  recurse(recurse);
  return out;
}

std::string status_label(const PhaseResult& result) {
  return result.determinate ? "determinate" : "indeterminate";
}

// ---------------------------------------------------------------------------
// qubit-scan

struct QubitGrid {
  std::vector<double> etas;
  std::vector<double> alphas;
  std::vector<double> lambdas;
};

QubitGrid qubit_grid(const json& params) {
  require_keys(params, {"eta_count", "alpha_count", "lambda1_values"},
               "parameters");
  QubitGrid grid;
  const long eta_count = get_integer(params, "eta_count", 21, 2, "parameters");
  const long alpha_count =
      get_integer(params, "alpha_count", 129, 2, "parameters");
  for (long i = 0; i < eta_count; ++i)
    grid.etas.push_back(static_cast<double>(i) / (eta_count - 1));
  for (long i = 0; i < alpha_count; ++i)
    grid.alphas.push_back(2.0 * std::numbers::pi * i / (alpha_count - 1));
  grid.lambdas = get_real_list(params, "lambda1_values",
                               {0.5, 0.6, 0.75, 0.9, 1.0}, "parameters");
  for (double lambda : grid.lambdas)
    if (lambda < 0.0 || lambda > 1.0)
      throw ConfigInvalid("parameters.lambda1_values: entries must lie in [0, 1]");
  return grid;
}

int run_qubit_scan(const Scenario& scenario, std::ostream& out,
                   const std::string& format) {
  const QubitGrid grid = qubit_grid(scenario.parameters);
  json rows = json::array();
  if (format == "csv") {
    out << "# seed=" << scenario.seed << "\n";
    out << "eta,alpha,lambda1,t1_re,t1_im,t2_re,t2_im,t12_re,t12_im,"
           "t1_status,t2_status,t12_status\n";
  }
  for (double eta : grid.etas) {
    for (double alpha : grid.alphas) {
      for (double lambda1 : grid.lambdas) {
        const QubitScanPoint point = qubit_traces(eta, alpha, lambda1);
        const PhaseResult p1 = phi(point.t1, scenario.tol);
        const PhaseResult p2 = phi(point.t2, scenario.tol);
        const PhaseResult p12 = phi(point.t12, scenario.tol);
        if (format == "csv") {
          out << format_real(eta) << ',' << format_real(alpha) << ','
              << format_real(lambda1) << ',' << format_real(point.t1.real())
              << ',' << format_real(point.t1.imag()) << ','
              << format_real(point.t2.real()) << ','
              << format_real(point.t2.imag()) << ','
              << format_real(point.t12.real()) << ','
              << format_real(point.t12.imag()) << ',' << status_label(p1)
              << ',' << status_label(p2) << ',' << status_label(p12) << '\n';
        } else {
          rows.push_back(json{{"eta", eta},
                              {"alpha", alpha},
                              {"lambda1", lambda1},
                              {"t1", phase_to_json(p1)},
                              {"t2", phase_to_json(p2)},
                              {"t12", phase_to_json(p12)}});
        }
      }
    }
  }
  if (format == "json")
    out << json{{"kind", "qubit-scan"}, {"seed", scenario.seed},
                {"rows", std::move(rows)}}.dump(2)
        << '\n';
  return 0;
}

// ---------------------------------------------------------------------------
// families

int run_families(const Scenario& scenario, std::ostream& out,
                 const std::string& format) {
  const json& params = scenario.parameters;
  require_keys(params, {"n", "spectrum", "unitary", "phases", "length"},
               "parameters");
  const int n =
      static_cast<int>(get_integer(params, "n", 4, 2, "parameters"));
  if (n > 8) throw ConfigInvalid("parameters.n: must be <= 8");
  const std::string unitary_kind =
      get_string(params, "unitary", "permuting", "parameters");
  if (unitary_kind != "permuting" && unitary_kind != "diagonal")
    throw ConfigInvalid("parameters.unitary: 'permuting' or 'diagonal'");
  const int length =
      static_cast<int>(get_integer(params, "length", n, 1, "parameters"));
  if (length > n) throw ConfigInvalid("parameters.length: must be <= n");
  if (unitary_kind == "permuting" && length != n)
    throw ConfigInvalid(
        "parameters.length: permuting tables use full-length sequences");

  Rng rng(scenario.seed);
  RealVector spectrum;
  if (params.contains("spectrum")) {
    const std::vector<double> given =
        get_real_list(params, "spectrum", {}, "parameters");
    if (static_cast<int>(given.size()) != n)
      throw ConfigInvalid("parameters.spectrum: expected n entries");
    spectrum.resize(n);
    for (int i = 0; i < n; ++i) spectrum[i] = given[i];
    double total = spectrum.sum();
    if (std::abs(total - 1.0) > 1e-9)
      throw ConfigInvalid("parameters.spectrum: entries must sum to 1");
  } else {
    spectrum = random_spectrum(n, rng);
  }

  std::vector<Complex> phases;
  if (params.contains("phases")) {
    if (!params["phases"].is_array() ||
        static_cast<int>(params["phases"].size()) != n)
      throw ConfigInvalid("parameters.phases: expected n [re, im] pairs");
    for (const json& pair : params["phases"]) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
          !pair[1].is_number())
        throw ConfigInvalid("parameters.phases: expected [re, im] pairs");
      phases.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
  } else {
    const Complex target =
        unitary_kind == "permuting" && n % 2 == 0 ? Complex(-1.0, 0.0)
        : Complex(1.0, 0.0);
    phases = random_su_phases(n, target, rng);
  }

  Matrix diag_matrix = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) diag_matrix(i, i) = spectrum[i];
  const OrthogonalFamily family = generate_family(make_density(diag_matrix));
  const FlaggedUnitary flagged =
      unitary_kind == "permuting"
          ? permutation_unitary(phases, family.basis)
          : diagonal_unitary(phases, family.basis);

  const double parity_expected = (n % 2 == 0) ? -1.0 : 1.0;
  bool parity_consistent = true;
  json entries = json::array();
  std::ostringstream csv_rows;

  for (const std::vector<int>& sequence : all_sequences(n, length)) {
    Complex trace;
    double f_value = std::numeric_limits<double>::quiet_NaN();
    if (unitary_kind == "permuting") {
      const PermutationCoefficient coefficient =
          f_coefficient(family, flagged.matrix, sequence);
      f_value = coefficient.value;
      trace = parity_expected * coefficient.value;
    } else {
      trace = diagonal_trace(flagged.matrix, family, sequence);
    }
    const PhaseResult result = phi(trace, scenario.tol);
    if (unitary_kind == "permuting" && result.determinate &&
        std::abs(result.phase_factor - Complex(parity_expected, 0.0)) > 1e-6)
      parity_consistent = false;

    if (format == "csv") {
      csv_rows << sequence_label(sequence) << ',';
      if (unitary_kind == "permuting") csv_rows << format_real(f_value) << ',';
      csv_rows << format_real(trace.real()) << ',' << format_real(trace.imag())
               << ',' << status_label(result) << ',';
      if (result.determinate) csv_rows << format_real(result.argument);
      csv_rows << '\n';
    } else {
      json entry{{"sequence", sequence},
                 {"trace", phase_to_json(result)}};
      if (unitary_kind == "permuting") entry["f"] = f_value;
      entries.push_back(std::move(entry));
    }
  }

  if (format == "csv") {
    out << "# seed=" << scenario.seed << "\n";
    if (unitary_kind == "permuting")
      out << "sequence,f,trace_re,trace_im,status,arg\n";
    else
      out << "sequence,trace_re,trace_im,status,arg\n";
    out << csv_rows.str();
  } else {
    json spectrum_json = json::array();
    for (int i = 0; i < n; ++i) spectrum_json.push_back(spectrum[i]);
    json phases_json = json::array();
    for (const Complex& p : phases)
      phases_json.push_back(json::array({p.real(), p.imag()}));
    json report{{"kind", "families"},
                {"seed", scenario.seed},
                {"n", n},
                {"unitary", unitary_kind},
                {"spectrum", std::move(spectrum_json)},
                {"phases", std::move(phases_json)},
                {"special", flagged.special},
                {"entries", std::move(entries)}};
    if (unitary_kind == "permuting")
      report["parity"] = json{{"expected", parity_expected},
                              {"consistent", parity_consistent}};
    out << report.dump(2) << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------------------
// two-photon

RecipeTarget recipe_from_string(const std::string& name) {
  if (name == "gamma1_rho1") return RecipeTarget::gamma1_rho1;
  if (name == "gamma1_rho2") return RecipeTarget::gamma1_rho2;
  if (name == "gamma2") return RecipeTarget::gamma2;
  throw ConfigInvalid("parameters.recipes: unknown recipe '" + name + "'");
}

std::string to_string(RecipeTarget target) {
  switch (target) {
    case RecipeTarget::gamma1_rho1: return "gamma1_rho1";
    case RecipeTarget::gamma1_rho2: return "gamma1_rho2";
    case RecipeTarget::gamma2: return "gamma2";
  }
  return "unknown";
}

int run_two_photon(const Scenario& scenario, std::ostream& out,
                   const std::string& format) {
  const json& params = scenario.parameters;
  require_keys(params,
               {"mode", "r_values", "beta_count", "theta_values", "samples",
                "recipes", "noise", "r", "beta", "theta", "recipe"},
               "parameters");
  const std::string mode = get_string(params, "mode", "scan", "parameters");
  if (mode != "scan" && mode != "fringe")
    throw ConfigInvalid("parameters.mode: 'scan' or 'fringe'");
  const int samples = static_cast<int>(
      get_integer(params, "samples", 64, 8, "parameters"));

  bool noisy = false;
  double mean_pairs = 1000.0;
  if (params.contains("noise")) {
    const json& noise = params["noise"];
    if (!noise.is_object())
      throw ConfigInvalid("parameters.noise: object expected");
    require_keys(noise, {"enabled", "mean_pairs"}, "parameters.noise");
    if (noise.contains("enabled")) {
      if (!noise["enabled"].is_boolean())
        throw ConfigInvalid("parameters.noise.enabled: boolean expected");
      noisy = noise["enabled"].get<bool>();
    }
    mean_pairs = get_real(noise, "mean_pairs", 1000.0, "parameters.noise");
    if (!(mean_pairs > 0.0))
      throw ConfigInvalid("parameters.noise.mean_pairs: must be positive");
  }
  Rng rng(scenario.seed);

  auto scan_fringe = [&](double r, RecipeTarget target, double beta,
                         double theta) {
    const TwoPhotonState state = purify(make_ensemble(r));
    const MeasurementConfig config = recipe(target, beta, theta);
    return noisy ? run_fringe_noisy(state, config, samples, mean_pairs, rng,
                                    scenario.tol)
                 : run_fringe(state, config, samples, scenario.tol);
  };

  if (mode == "fringe") {
    const double r = get_real(params, "r", 0.5, "parameters");
    const double beta = get_real(params, "beta", std::numbers::pi / 3.0,
                                 "parameters");
    const double theta = get_real(params, "theta", 0.0, "parameters");
    const RecipeTarget target = recipe_from_string(
        get_string(params, "recipe", "gamma2", "parameters"));
    const FringeScan scan = scan_fringe(r, target, beta, theta);
    if (format == "csv") {
      out << "# seed=" << scenario.seed << "\n";
      out << "r,beta,theta,chi,intensity\n";
      for (std::size_t i = 0; i < scan.chis.size(); ++i)
        out << format_real(r) << ',' << format_real(beta) << ','
            << format_real(theta) << ',' << format_real(scan.chis[i]) << ','
            << format_real(scan.intensities[i]) << '\n';
    } else {
      json intensities = json::array();
      for (double value : scan.intensities) intensities.push_back(value);
      out << json{{"kind", "two-photon"},
                  {"mode", "fringe"},
                  {"seed", scenario.seed},
                  {"r", r},
                  {"beta", beta},
                  {"theta", theta},
                  {"recipe", to_string(target)},
                  {"visibility", scan.visibility},
                  {"extracted_arg", scan.extracted_arg
                                        ? json(*scan.extracted_arg)
                                        : json(nullptr)},
                  {"intensities", std::move(intensities)}}.dump(2)
          << '\n';
    }
    return 0;
  }

  const std::vector<double> r_values = get_real_list(
      params, "r_values", {0.0, 0.25, 0.5, 0.75, 1.0}, "parameters");
  const long beta_count =
      get_integer(params, "beta_count", 64, 2, "parameters");
  const std::vector<double> theta_values = get_real_list(
      params, "theta_values",
      {0.0, std::numbers::pi / 4.0, std::numbers::pi / 2.0}, "parameters");
  std::vector<RecipeTarget> recipes;
  if (params.contains("recipes")) {
    if (!params["recipes"].is_array() || params["recipes"].empty())
      throw ConfigInvalid("parameters.recipes: nonempty array expected");
    for (const json& name : params["recipes"]) {
      if (!name.is_string())
        throw ConfigInvalid("parameters.recipes: strings expected");
      recipes.push_back(recipe_from_string(name.get<std::string>()));
    }
  } else {
    recipes = {RecipeTarget::gamma1_rho1, RecipeTarget::gamma1_rho2,
               RecipeTarget::gamma2};
  }

  json rows = json::array();
  if (format == "csv") {
    out << "# seed=" << scenario.seed << "\n";
    out << "r,beta,theta,recipe,inner_re,inner_im,extracted_arg,status\n";
  }
  for (double r : r_values) {
    for (long b = 0; b < beta_count; ++b) {
      const double beta = 2.0 * std::numbers::pi * b / beta_count;
      for (double theta : theta_values) {
        for (RecipeTarget target : recipes) {
          const FringeScan scan = scan_fringe(r, target, beta, theta);
          const std::string status =
              scan.extracted_arg ? "determinate" : "indeterminate";
          if (format == "csv") {
            out << format_real(r) << ',' << format_real(beta) << ','
                << format_real(theta) << ',' << to_string(target) << ','
                << format_real(scan.fourier.real()) << ','
                << format_real(scan.fourier.imag()) << ',';
            if (scan.extracted_arg) out << format_real(*scan.extracted_arg);
            out << ',' << status << '\n';
          } else {
            rows.push_back(json{
                {"r", r},
                {"beta", beta},
                {"theta", theta},
                {"recipe", to_string(target)},
                {"inner_re", scan.fourier.real()},
                {"inner_im", scan.fourier.imag()},
                {"extracted_arg", scan.extracted_arg
                                      ? json(*scan.extracted_arg)
                                      : json(nullptr)},
                {"status", status}});
          }
        }
      }
    }
  }
  if (format == "json")
    out << json{{"kind", "two-photon"},
                {"mode", "scan"},
                {"seed", scenario.seed},
                {"rows", std::move(rows)}}.dump(2)
        << '\n';
  return 0;
}

// ---------------------------------------------------------------------------
// verify

int run_verify(const Scenario& scenario, std::ostream& out,
               const std::string& format) {
  const json& params = scenario.parameters;
  require_keys(params, {"trials"}, "parameters");
  const int trials = static_cast<int>(
      get_integer(params, "trials", 200, 1, "parameters"));
  const std::vector<CheckResult> results =
      run_verification(scenario.seed, trials, scenario.steps);
  bool all_passed = true;
  for (const CheckResult& result : results) all_passed &= result.passed;

  if (format == "json") {
    json checks = json::array();
    for (const CheckResult& result : results)
      checks.push_back(json{{"name", result.name},
                            {"passed", result.passed},
                            {"measured", result.measured},
                            {"bound", result.bound},
                            {"comparison", result.comparison},
                            {"cases", result.cases}});
    out << json{{"kind", "verify"},
                {"seed", scenario.seed},
                {"trials", trials},
                {"passed", all_passed},
                {"checks", std::move(checks)}}.dump(2)
        << '\n';
  } else {
    out << "verify: seed=" << scenario.seed << " trials=" << trials << "\n";
    for (const CheckResult& result : results) {
      out << (result.passed ? "[PASS] " : "[FAIL] ") << result.name << " ("
          << result.comparison << " bound: measured="
          << format_real(result.measured)
          << ", bound=" << format_real(result.bound)
          << ", cases=" << result.cases << ")\n";
    }
    out << (all_passed ? "all checks passed" : "CHECK FAILURES PRESENT")
        << "\n";
  }
  return all_passed ? 0 : 1;
}

}  // namespace

Scenario scenario_from_json(const json& config) {
  if (!config.is_object()) throw ConfigInvalid("config: object expected");
  require_keys(config, {"kind", "seed", "steps", "tol", "output", "parameters"},
               "config");
  Scenario scenario;
  if (config.contains("kind")) {
    if (!config["kind"].is_string())
      throw ConfigInvalid("kind: string expected");
    scenario.kind = kind_from_string(config["kind"].get<std::string>());
  }
  if (config.contains("seed")) {
    if (!config["seed"].is_number_unsigned() &&
        !(config["seed"].is_number_integer() && config["seed"].get<long>() >= 0))
      throw ConfigInvalid("seed: nonnegative integer expected");
    scenario.seed = config["seed"].get<std::uint64_t>();
  }
  scenario.steps = static_cast<int>(
      get_integer(config, "steps", kDefaultSteps, 1, "config"));
  scenario.tol = get_real(config, "tol", kPhaseTol, "config");
  if (!(scenario.tol > 0.0))
    throw ConfigInvalid("tol: must be positive");
  if (config.contains("output")) {
    const json& output = config["output"];
    if (!output.is_object()) throw ConfigInvalid("output: object expected");
    require_keys(output, {"path", "format"}, "output");
    scenario.output.path = get_string(output, "path", "-", "output");
    scenario.output.format = get_string(output, "format", "", "output");
  }
  if (config.contains("parameters")) {
    if (!config["parameters"].is_object())
      throw ConfigInvalid("parameters: object expected");
    scenario.parameters = config["parameters"];
  }
  return scenario;
}

int run_scenario(const Scenario& scenario) {
  std::string format = scenario.output.format;
  if (format.empty())
    format = scenario.kind == ScenarioKind::verify ? "text" : "csv";
  if (scenario.kind == ScenarioKind::verify) {
    if (format != "text" && format != "json")
      throw ConfigInvalid("output.format: verify emits 'text' or 'json'");
  } else if (format != "csv" && format != "json") {
    throw ConfigInvalid("output.format: 'csv' or 'json' expected");
  }

  // compute into a buffer first so failures never leave partial files
  std::ostringstream buffer;
  int status = 0;
  switch (scenario.kind) {
    case ScenarioKind::qubit_scan:
      status = run_qubit_scan(scenario, buffer, format);
      break;
    case ScenarioKind::families:
      status = run_families(scenario, buffer, format);
      break;
    case ScenarioKind::two_photon:
      status = run_two_photon(scenario, buffer, format);
      break;
    case ScenarioKind::verify:
      status = run_verify(scenario, buffer, format);
      break;
  }

  if (scenario.output.path == "-") {
    std::cout << buffer.str();
  } else {
    std::ofstream file(scenario.output.path, std::ios::binary);
    if (!file)
      throw IoError("cannot open output file '" + scenario.output.path + "'");
    file << buffer.str();
    if (!file)
      throw IoError("failed writing output file '" + scenario.output.path +
                    "'");
  }
  return status;
}

}  // namespace offdiag
