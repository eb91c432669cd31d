#include "offdiag/transport.hpp"

#include <cmath>

namespace offdiag {

UnitaryPath make_path(std::vector<double> s, std::vector<Matrix> unitaries) {
  if (s.size() != unitaries.size())
    throw DimensionMismatch("make_path: sample counts differ");
  if (s.empty()) throw TooFewSamples("make_path: empty path");
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!(s[i] > s[i - 1]))
      throw OutOfRange("make_path: parameter values must strictly increase");
  const Eigen::Index n = unitaries.front().rows();
  if (max_abs(unitaries.front() - Matrix::Identity(n, n)) > kHermitianTol)
    throw OutOfRange("make_path: path must start at the identity");
  for (const Matrix& u : unitaries) {
    if (u.rows() != n || u.cols() != n)
      throw DimensionMismatch("make_path: sample dimension changed");
    require_unitary(u, kPathUnitaryTol);
  }
  return UnitaryPath{std::move(s), std::move(unitaries)};
}

Matrix project_parallel(const Matrix& j, const Matrix& basis) {
  require_hermitian(j);
  require_unitary(basis);
  if (j.rows() != basis.rows())
    throw DimensionMismatch("project_parallel: dimension mismatch");
  const Vector diag = (basis.adjoint() * j * basis).diagonal();
  const Matrix out = j - basis * diag.asDiagonal() * basis.adjoint();
  return (out + out.adjoint()) / 2.0;
}

UnitaryPath transport_path(const GeneratorFn& generator, const Matrix& basis,
                           double s_end, int steps) {
  require_unitary(basis);
  if (steps < 1) throw OutOfRange("transport_path: steps must be >= 1");
  if (!(s_end > 0.0)) throw OutOfRange("transport_path: s_end must be > 0");
  const double ds = s_end / steps;
  const Eigen::Index n = basis.rows();

  std::vector<double> svals;
  std::vector<Matrix> samples;
  svals.reserve(steps + 1);
  samples.reserve(steps + 1);
  Matrix u = Matrix::Identity(n, n);
  svals.push_back(0.0);
  samples.push_back(u);

  for (int k = 0; k < steps; ++k) {
    const Matrix j = generator((k + 0.5) * ds);
    require_hermitian(j);
    if (j.rows() != n)
      throw DimensionMismatch("transport_path: generator dimension mismatch");
    // predictor for the frame at the step midpoint, then the actual step
    Matrix horizontal = project_parallel(j, u * basis);
    const Matrix mid = unitary_exp(horizontal, ds / 2.0) * u;
    horizontal = project_parallel(j, mid * basis);
    u = unitary_exp(horizontal, ds) * u;
    svals.push_back((k + 1) * ds);
    samples.push_back(u);
  }
  return make_path(std::move(svals), std::move(samples));
}

double transport_defect(const UnitaryPath& path, const Matrix& basis) {
  if (path.size() < 2)
    throw TooFewSamples("transport_defect: need at least two samples");
  require_unitary(basis);
  double worst = 0.0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const double ds = path.s[i + 1] - path.s[i];
    const Matrix w = basis.adjoint() *
                     (path.unitaries[i].adjoint() * path.unitaries[i + 1]) *
                     basis;
    for (Eigen::Index k = 0; k < w.rows(); ++k)
      worst = std::max(worst, std::abs(std::arg(w(k, k))) / ds);
  }
  return worst;
}

}  // namespace offdiag
