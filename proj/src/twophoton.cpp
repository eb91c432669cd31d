#include "offdiag/twophoton.hpp"

#include <cmath>
#include <numbers>

namespace offdiag {

PolarizationEnsemble make_ensemble(double r) {
  if (r < 0.0 || r > 1.0)
    throw OutOfRange("make_ensemble: polarization degree must lie in [0, 1]");
  return PolarizationEnsemble{r};
}

TwoPhotonState purify(const PolarizationEnsemble& ensemble) {
  TwoPhotonState state;
  state.amplitudes.setZero();
  state.amplitudes(0) = std::sqrt(0.5 * (1.0 + ensemble.r));  // hh
  state.amplitudes(3) = std::sqrt(0.5 * (1.0 - ensemble.r));  // vv
  return state;
}

Matrix rotation_unitary(double beta, double theta) {
  // exp(-i beta K) with K = |h><v| e^(-i theta) + |v><h| e^(i theta), K^2 = 1
  Matrix u(2, 2);
  const Complex factor = Complex(0.0, -1.0) * std::sin(beta);
  u(0, 0) = std::cos(beta);
  u(0, 1) = factor * std::exp(Complex(0.0, -theta));
  u(1, 0) = factor * std::exp(Complex(0.0, theta));
  u(1, 1) = std::cos(beta);
  return u;
}

Matrix polarization_flip() {
  return rotation_unitary(std::numbers::pi / 2.0, std::numbers::pi / 2.0);
}

namespace {

Eigen::Matrix4cd kron2(const Matrix& a, const Matrix& b) {
  Eigen::Matrix4cd out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

void require_config(const MeasurementConfig& config) {
  for (const Matrix* arm : {&config.us, &config.vs, &config.ua, &config.va}) {
    if (arm->rows() != 2 || arm->cols() != 2)
      throw DimensionMismatch("measurement config: arms must be 2x2");
    require_unitary(*arm);
  }
}

bool chi_on_long_arms(ChiRole role) {
  return role == ChiRole::us || role == ChiRole::ua;
}

}  // namespace

double coincidence_intensity(const TwoPhotonState& state,
                             const MeasurementConfig& config, double chi) {
  require_config(config);
  if (std::abs(state.amplitudes.norm() - 1.0) > 1e-12)
    throw OutOfRange("coincidence_intensity: state is not normalized");
  const Complex shift = std::exp(Complex(0.0, chi));
  Matrix us = config.us, vs = config.vs, ua = config.ua, va = config.va;
  switch (config.chi_role) {
    case ChiRole::us: us *= shift; break;
    case ChiRole::vs: vs *= shift; break;
    case ChiRole::ua: ua *= shift; break;
    case ChiRole::va: va *= shift; break;
  }
  const Eigen::Vector4cd superposed =
      kron2(us, ua) * state.amplitudes + kron2(vs, va) * state.amplitudes;
  return superposed.squaredNorm();
}

MeasurementConfig recipe(RecipeTarget target, double beta, double theta) {
  const Matrix u = rotation_unitary(beta, theta);
  const Matrix f = polarization_flip();
  const Matrix id = Matrix::Identity(2, 2);
  MeasurementConfig config;
  config.chi_role = ChiRole::us;
  switch (target) {
    case RecipeTarget::gamma1_rho1:
      config.us = id;
      config.vs = u;
      config.ua = id;
      config.va = id;
      break;
    case RecipeTarget::gamma1_rho2:
      config.us = f;
      config.vs = u * f;
      config.ua = id;
      config.va = id;
      break;
    case RecipeTarget::gamma2:
      config.us = f;
      config.vs = u;
      config.ua = f;
      config.va = rotation_unitary(beta, -theta);
      break;
  }
  return config;
}

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

FringeScan extract(std::vector<double> chis, std::vector<double> intensities,
                   ChiRole role, double tol) {
  FringeScan scan;
  scan.chis = std::move(chis);
  scan.intensities = std::move(intensities);
  scan.tolerance_used = tol;
  const double kernel_sign = chi_on_long_arms(role) ? 1.0 : -1.0;
  Complex coefficient(0.0, 0.0);
  const std::size_t n = scan.chis.size();
  for (std::size_t j = 0; j < n; ++j)
    coefficient += scan.intensities[j] *
                   std::exp(Complex(0.0, kernel_sign * scan.chis[j]));
  coefficient /= static_cast<double>(n);
  scan.fourier = coefficient;
  scan.visibility = std::abs(coefficient);
  if (scan.visibility >= tol) {
    double arg = std::arg(coefficient);
    if (arg <= -std::numbers::pi) arg += 2.0 * std::numbers::pi;
    scan.extracted_arg = arg;
  }
  return scan;
}

}  // namespace

FringeScan run_fringe(const TwoPhotonState& state,
                      const MeasurementConfig& config, int samples,
                      double tol) {
  if (samples < 8 || !is_power_of_two(samples))
    throw OutOfRange("run_fringe: samples must be a power of two >= 8");
  std::vector<double> chis(samples);
  std::vector<double> intensities(samples);
  for (int j = 0; j < samples; ++j) {
    chis[j] = 2.0 * std::numbers::pi * j / samples;
    intensities[j] = coincidence_intensity(state, config, chis[j]);
  }
  return extract(std::move(chis), std::move(intensities), config.chi_role,
                 tol);
}

FringeScan run_fringe_noisy(const TwoPhotonState& state,
                            const MeasurementConfig& config, int samples,
                            double mean_pairs, Rng& rng, double tol) {
  if (samples < 8 || !is_power_of_two(samples))
    throw OutOfRange("run_fringe: samples must be a power of two >= 8");
  if (!(mean_pairs > 0.0))
    throw OutOfRange("run_fringe_noisy: mean_pairs must be positive");
  std::vector<double> chis(samples);
  std::vector<double> intensities(samples);
  for (int j = 0; j < samples; ++j) {
    chis[j] = 2.0 * std::numbers::pi * j / samples;
    const double ideal = coincidence_intensity(state, config, chis[j]);
    const long counts = rng.poisson(mean_pairs * ideal / 4.0);
    intensities[j] = 4.0 * static_cast<double>(counts) / mean_pairs;
  }
  return extract(std::move(chis), std::move(intensities), config.chi_role,
                 tol);
}

}  // namespace offdiag
