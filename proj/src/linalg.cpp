#include "offdiag/linalg.hpp"

#include <cmath>
#include <string>

namespace offdiag {

double max_abs(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix& m, double tol) {
  return m.rows() == m.cols() && max_abs(m - m.adjoint()) <= tol;
}

bool is_unitary(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const Matrix gram = m.adjoint() * m;
  return max_abs(gram - Matrix::Identity(m.rows(), m.cols())) <= tol;
}

void require_hermitian(const Matrix& m, double tol) {
  if (!is_hermitian(m, tol))
    throw NotHermitian("matrix is not Hermitian within tolerance " +
                       std::to_string(tol));
}

void require_unitary(const Matrix& m, double tol) {
  if (!is_unitary(m, tol))
    throw NotUnitary("matrix is not unitary within tolerance " +
                     std::to_string(tol));
}

namespace {

// Largest-magnitude entry of each column made real positive.
void fix_column_phases(Matrix& v) {
  for (Eigen::Index c = 0; c < v.cols(); ++c) {
    Eigen::Index pivot = 0;
    v.col(c).cwiseAbs().maxCoeff(&pivot);
    const Complex entry = v(pivot, c);
    const double mag = std::abs(entry);
    if (mag > 0.0) v.col(c) *= std::conj(entry) / mag;
  }
}

}  // namespace

SpectralDecomposition hermitian_eig(const Matrix& m) {
  require_hermitian(m);
  Eigen::SelfAdjointEigenSolver<Matrix> solver((m + m.adjoint()) / 2.0);
  if (solver.info() != Eigen::Success)
    throw Error("hermitian_eig: eigensolver failed to converge");
  SpectralDecomposition out{solver.eigenvalues(), solver.eigenvectors()};
  fix_column_phases(out.eigenvectors);
  return out;
}

Matrix psd_power_from(const SpectralDecomposition& eig, int p, int q) {
  if (p <= 0 || q <= 0)
    throw OutOfRange("psd_power: exponent must be a positive rational p/q");
  const double exponent = static_cast<double>(p) / static_cast<double>(q);
  RealVector powered(eig.eigenvalues.size());
  for (Eigen::Index i = 0; i < powered.size(); ++i) {
    const double value =
        eig.eigenvalues[i] > kSpectrumFloor ? eig.eigenvalues[i] : 0.0;
    powered[i] = std::pow(value, exponent);
  }
  const Matrix out =
      eig.eigenvectors * powered.asDiagonal() * eig.eigenvectors.adjoint();
  return (out + out.adjoint()) / 2.0;
}

Matrix psd_power(const Matrix& m, int p, int q) {
  if (p <= 0 || q <= 0)
    throw OutOfRange("psd_power: exponent must be a positive rational p/q");
  const SpectralDecomposition eig = hermitian_eig(m);
  if (eig.eigenvalues.size() > 0 && eig.eigenvalues.minCoeff() < kPsdFloor)
    throw NotPSD("psd_power: eigenvalue " +
                 std::to_string(eig.eigenvalues.minCoeff()) +
                 " below the PSD floor");
  return psd_power_from(eig, p, q);
}

Matrix unitary_exp(const Matrix& j, double t) {
  const SpectralDecomposition eig = hermitian_eig(j);
  Vector phases(eig.eigenvalues.size());
  for (Eigen::Index i = 0; i < phases.size(); ++i)
    phases[i] = std::exp(Complex(0.0, -eig.eigenvalues[i] * t));
  return eig.eigenvectors * phases.asDiagonal() * eig.eigenvectors.adjoint();
}

Matrix ordered_exp(const GeneratorFn& generator, double s_end, int steps) {
  if (steps < 1) throw OutOfRange("ordered_exp: steps must be >= 1");
  const double ds = s_end / steps;
  Matrix u;
  for (int k = 0; k < steps; ++k) {
    const Matrix j = generator((k + 0.5) * ds);
    require_hermitian(j);
    if (k == 0) {
      u = Matrix::Identity(j.rows(), j.cols());
    } else if (j.rows() != u.rows()) {
      throw DimensionMismatch("ordered_exp: generator dimension changed");
    }
    u = unitary_exp(j, ds) * u;
  }
  return u;
}

Complex trace_product(const std::vector<Matrix>& factors) {
  if (factors.empty()) throw LengthZero("trace_product: empty factor list");
  const Eigen::Index n = factors.front().rows();
  for (const Matrix& f : factors)
    if (f.rows() != n || f.cols() != n)
      throw DimensionMismatch(
          "trace_product: factors must be square with equal dimension");
  Matrix acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) acc = acc * factors[i];
  return acc.trace();
}

std::vector<std::vector<Eigen::Index>> group_degenerate(
    const RealVector& values, double tol) {
  std::vector<std::vector<Eigen::Index>> groups;
  std::vector<Eigen::Index> current;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (!current.empty() &&
        std::abs(values[i] - values[i - 1]) >= tol) {
      groups.push_back(current);
      current.clear();
    }
    current.push_back(i);
  }
  if (!current.empty()) groups.push_back(current);
  return groups;
}

}  // namespace offdiag
