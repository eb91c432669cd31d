#pragma once

/*
 * Polarization-entangled two-photon interferometer model. A purified qubit
 * ensemble enters a pair of interferometer arms; each arm applies 2x2
 * polarization unitaries and one arm carries a variable phase e^(i chi).
 * Coincidence fringes over chi encode Tr[U rho] and Tr[U sqrt(rho1) U
 * sqrt(rho2)], which is how the phase functionals become measurable.
 */

#include <optional>
#include <vector>

#include "offdiag/phases.hpp"
#include "offdiag/random.hpp"

namespace offdiag {

/// Linearly polarized ensemble with polarization degree r in [0, 1].
struct PolarizationEnsemble {
  double r;
};

PolarizationEnsemble make_ensemble(double r);

/// Pure polarization state of the photon pair over (hh, hv, vh, vv).
struct TwoPhotonState {
  Eigen::Vector4cd amplitudes;
};

enum class ChiRole { us, vs, ua, va };

/// Arm unitaries: U_s/U_a act in the pair of long arms, V_s/V_a in the short
/// arms; chi_role marks the arm multiplied by e^(i chi).
struct MeasurementConfig {
  Matrix us;
  Matrix vs;
  Matrix ua;
  Matrix va;
  ChiRole chi_role = ChiRole::us;
};

/// Sampled coincidence fringe with its first Fourier coefficient.
struct FringeScan {
  std::vector<double> chis;
  std::vector<double> intensities;
  Complex fourier{0.0, 0.0};  // frequency-1 coefficient; |fourier| in [0, 1]
  double visibility = 0.0;
  std::optional<double> extracted_arg;  // null iff visibility < tolerance
  double tolerance_used = kPhaseTol;
};

/// Photon-pair purification of rho = diag((1+r)/2, (1-r)/2).
TwoPhotonState purify(const PolarizationEnsemble& ensemble);

/// Rotation of linear polarization by beta along the great circle selected
/// by theta: exp(-i beta [cos(theta) (|h><v| + |v><h|) +
/// sin(theta) (-i|h><v| + i|v><h|)]). Parallel transporting in the h-v basis.
Matrix rotation_unitary(double beta, double theta);

/// Polarization flip U(pi/2, pi/2), the connector between the two orthogonal
/// representations of a linearly polarized ensemble.
Matrix polarization_flip();

/// Coincidence intensity |e^(i chi per role) (U_s x U_a)|Psi> +
/// (V_s x V_a)|Psi>|^2, in [0, 4].
double coincidence_intensity(const TwoPhotonState& state,
                             const MeasurementConfig& config, double chi);

enum class RecipeTarget { gamma1_rho1, gamma1_rho2, gamma2 };

/// Arm settings that make the fringe inner product equal Tr[U(beta,theta)
/// rho1], Tr[U(beta,theta) rho2], or Tr[U sqrt(rho1) U sqrt(rho2)].
MeasurementConfig recipe(RecipeTarget target, double beta, double theta);

/// Samples one fringe period uniformly and extracts visibility and phase
/// from the frequency-1 Fourier coefficient; the kernel sign is chosen per
/// chi_role so the extracted argument equals arg of the inner product.
FringeScan run_fringe(const TwoPhotonState& state,
                      const MeasurementConfig& config, int samples,
                      double tol = kPhaseTol);

/// Shot-noise variant: per-bin coincidence counts are Poisson with mean
/// mean_pairs * I(chi) / 4, rescaled back to intensity units.
FringeScan run_fringe_noisy(const TwoPhotonState& state,
                            const MeasurementConfig& config, int samples,
                            double mean_pairs, Rng& rng,
                            double tol = kPhaseTol);

}  // namespace offdiag
