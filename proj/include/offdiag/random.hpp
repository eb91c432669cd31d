#pragma once

// Seeded generators for random instances: Gaussian-entry matrices, densities
// rho = GG^dag / Tr(GG^dag), Haar unitaries from QR, simplex spectra.

#include <cstdint>
#include <random>
#include <vector>

#include "offdiag/states.hpp"

namespace offdiag {

/// Deterministic random source. Gaussian and Poisson draws are built from
/// raw 53-bit uniforms so that a seed fixes the stream across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform();   // [0, 1)
  double gaussian();  // standard normal
  long poisson(double mean);

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

Matrix random_gaussian_matrix(int n, Rng& rng);
Matrix random_hermitian(int n, Rng& rng);
DensityOperator random_density(int n, Rng& rng);
Matrix random_unitary(int n, Rng& rng);

/// Uniform simplex point, sorted descending.
RealVector random_spectrum(int n, Rng& rng);

/// Spectrum with exactly `rank` nonzero entries, descending.
RealVector random_spectrum_with_rank(int n, int rank, Rng& rng);

std::vector<Complex> random_unit_phases(int n, Rng& rng);

/// n unit-modulus phases whose product equals target (|target| = 1).
std::vector<Complex> random_su_phases(int n, Complex target, Rng& rng);

}  // namespace offdiag
