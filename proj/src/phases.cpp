#include "offdiag/phases.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace offdiag {

PhaseResult phi(Complex z, double tol) {
  if (!(tol > 0.0)) throw OutOfRange("phi: tolerance must be positive");
  PhaseResult out;
  out.raw_trace = z;
  out.tolerance_used = tol;
  const double mag = std::abs(z);
  if (mag < tol) {
    out.determinate = false;
    out.argument = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  out.determinate = true;
  out.phase_factor = z / mag;
  double arg = std::arg(out.phase_factor);
  if (arg <= -std::numbers::pi) arg += 2.0 * std::numbers::pi;  // (-pi, pi]
  out.argument = arg;
  return out;
}

namespace {

void require_projectors(const std::vector<Matrix>& projectors,
                        Eigen::Index dim) {
  for (const Matrix& p : projectors) {
    if (p.rows() != dim || p.cols() != dim)
      throw DimensionMismatch("gamma_pure: projector dimension mismatch");
    if (!is_hermitian(p, kProjectorTol))
      throw NotProjector("gamma_pure: projector is not Hermitian");
    if (max_abs(p * p - p) > kProjectorTol)
      throw NotProjector("gamma_pure: projector is not idempotent");
    if (std::abs(p.trace() - Complex(1.0, 0.0)) > kProjectorTol)
      throw NotProjector("gamma_pure: projector is not rank 1");
  }
  for (std::size_t i = 0; i < projectors.size(); ++i)
    for (std::size_t j = i + 1; j < projectors.size(); ++j)
      if (max_abs(projectors[i] * projectors[j]) > kProjectorTol)
        throw NotProjector("gamma_pure: projectors are not mutually orthogonal");
}

}  // namespace

PhaseResult gamma_pure(const Matrix& u, const std::vector<Matrix>& projectors,
                       double tol) {
  require_unitary(u);
  if (projectors.empty()) throw LengthZero("gamma_pure: empty projector list");
  require_projectors(projectors, u.rows());
  std::vector<Matrix> factors;
  factors.reserve(2 * projectors.size());
  for (const Matrix& p : projectors) {
    factors.push_back(u);
    factors.push_back(p);
  }
  return phi(trace_product(factors), tol);
}

PhaseResult gamma_mixed(const Matrix& u,
                        const std::vector<DensityOperator>& rhos, double tol) {
  require_unitary(u);
  if (rhos.empty()) throw LengthZero("gamma_mixed: empty density list");
  const int l = static_cast<int>(rhos.size());
  if (l > u.rows())
    throw OutOfRange("gamma_mixed: more states than the dimension allows");
  std::vector<Matrix> factors;
  factors.reserve(2 * rhos.size());
  for (const DensityOperator& rho : rhos) {
    if (rho.dim() != u.rows())
      throw DimensionMismatch("gamma_mixed: state dimension mismatch");
    factors.push_back(u);
    factors.push_back(rho.power(1, l));
  }
  return phi(trace_product(factors), tol);
}

}  // namespace offdiag
