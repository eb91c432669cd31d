#include "offdiag/random.hpp"

#include <cmath>
#include <numbers>

namespace offdiag {

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

long Rng::poisson(double mean) {
  if (mean < 0.0) throw OutOfRange("poisson: mean must be nonnegative");
  if (mean < 30.0) {
    const double limit = std::exp(-mean);
    long count = -1;
    double product = 1.0;
    do {
      ++count;
      product *= 1.0 - uniform();
    } while (product > limit);
    return count;
  }
  const double draw = mean + std::sqrt(mean) * gaussian();
  return std::max(0L, std::lround(draw));
}

Matrix random_gaussian_matrix(int n, Rng& rng) {
  Matrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      g(i, j) = Complex(rng.gaussian(), rng.gaussian());
  return g;
}

Matrix random_hermitian(int n, Rng& rng) {
  const Matrix g = random_gaussian_matrix(n, rng);
  return (g + g.adjoint()) / 2.0;
}

DensityOperator random_density(int n, Rng& rng) {
  const Matrix g = random_gaussian_matrix(n, rng);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return make_density((rho + rho.adjoint()) / 2.0);
}

Matrix random_unitary(int n, Rng& rng) {
  const Matrix g = random_gaussian_matrix(n, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // sign fix makes the distribution Haar
  for (int j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

RealVector random_spectrum(int n, Rng& rng) {
  RealVector spectrum(n);
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    spectrum[i] = -std::log(1.0 - rng.uniform());
    total += spectrum[i];
  }
  spectrum /= total;
  std::sort(spectrum.data(), spectrum.data() + n, std::greater<double>());
  return spectrum;
}

RealVector random_spectrum_with_rank(int n, int rank, Rng& rng) {
  if (rank < 1 || rank > n)
    throw OutOfRange("random_spectrum_with_rank: rank outside [1, n]");
  RealVector spectrum = RealVector::Zero(n);
  spectrum.head(rank) = random_spectrum(rank, rng);
  return spectrum;
}

std::vector<Complex> random_unit_phases(int n, Rng& rng) {
  std::vector<Complex> phases(n);
  for (int i = 0; i < n; ++i)
    phases[i] = std::exp(Complex(0.0, 2.0 * std::numbers::pi * rng.uniform()));
  return phases;
}

std::vector<Complex> random_su_phases(int n, Complex target, Rng& rng) {
  std::vector<Complex> phases = random_unit_phases(n, rng);
  Complex product(1.0, 0.0);
  for (const Complex& p : phases) product *= p;
  phases.back() *= target / product;
  return phases;
}

}  // namespace offdiag
