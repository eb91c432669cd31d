#include "offdiag/families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace offdiag {

QubitScanPoint qubit_traces(double eta, double alpha, double lambda1) {
  if (eta < 0.0 || eta > 1.0)
    throw OutOfRange("qubit_traces: eta must lie in [0, 1]");
  if (lambda1 < 0.0 || lambda1 > 1.0)
    throw OutOfRange("qubit_traces: lambda1 must lie in [0, 1]");
  const double lambda2 = 1.0 - lambda1;
  const Complex up = std::exp(Complex(0.0, alpha));
  const Complex dn = std::conj(up);
  QubitScanPoint point;
  point.eta = eta;
  point.alpha = alpha;
  point.lambda1 = lambda1;
  point.t1 = eta * (lambda1 * up + lambda2 * dn);
  point.t2 = eta * (lambda1 * dn + lambda2 * up);
  point.t12 = 2.0 * eta * eta * std::sqrt(lambda1 * lambda2) *
                  std::cos(2.0 * alpha) -
              1.0 + eta * eta;
  return point;
}

Matrix su2_unitary(double eta, double alpha, double offdiag_phase) {
  if (eta < 0.0 || eta > 1.0)
    throw OutOfRange("su2_unitary: eta must lie in [0, 1]");
  const double off = std::sqrt(std::max(0.0, 1.0 - eta * eta));
  Matrix u(2, 2);
  u(0, 0) = eta * std::exp(Complex(0.0, alpha));
  u(0, 1) = off * std::exp(Complex(0.0, offdiag_phase));
  u(1, 0) = -off * std::exp(Complex(0.0, -offdiag_phase));
  u(1, 1) = eta * std::exp(Complex(0.0, -alpha));
  return u;
}

namespace {

Matrix resolve_basis(const Matrix& basis, Eigen::Index n) {
  if (basis.size() == 0) return Matrix::Identity(n, n);
  if (basis.rows() != n || basis.cols() != n)
    throw DimensionMismatch("unitary pattern: basis dimension mismatch");
  require_unitary(basis);
  return basis;
}

void require_unit_modulus(const std::vector<Complex>& phases) {
  for (const Complex& p : phases)
    if (std::abs(std::abs(p) - 1.0) > kUnitModulusTol)
      throw NotUnitModulus("pattern phase has modulus " +
                           std::to_string(std::abs(p)));
}

Complex phase_product(const std::vector<Complex>& phases) {
  Complex product(1.0, 0.0);
  for (const Complex& p : phases) product *= p;
  return product;
}

void require_sequence(const std::vector<int>& sequence, int n,
                      bool full_length) {
  if (sequence.empty()) throw LengthZero("sequence: empty index list");
  if (full_length && static_cast<int>(sequence.size()) != n)
    throw OutOfRange("sequence: expected exactly " + std::to_string(n) +
                     " indices");
  if (static_cast<int>(sequence.size()) > n)
    throw OutOfRange("sequence: more indices than family members");
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    if (sequence[i] < 0 || sequence[i] >= n)
      throw OutOfRange("sequence: index " + std::to_string(sequence[i]) +
                       " outside [0, " + std::to_string(n) + ")");
    for (std::size_t j = i + 1; j < sequence.size(); ++j)
      if (sequence[i] == sequence[j])
        throw OutOfRange("sequence: indices must be distinct");
  }
}

}  // namespace

FlaggedUnitary diagonal_unitary(const std::vector<Complex>& phases,
                                const Matrix& basis) {
  if (phases.empty()) throw LengthZero("diagonal_unitary: empty phase list");
  require_unit_modulus(phases);
  const Eigen::Index n = static_cast<Eigen::Index>(phases.size());
  const Matrix b = resolve_basis(basis, n);
  Matrix core = Matrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) core(k, k) = phases[k];
  FlaggedUnitary out;
  out.matrix = b * core * b.adjoint();
  out.special =
      std::abs(phase_product(phases) - Complex(1.0, 0.0)) <= kPhaseProductTol;
  return out;
}

FlaggedUnitary permutation_unitary(const std::vector<Complex>& phases,
                                   const Matrix& basis) {
  if (phases.size() < 2)
    throw OutOfRange("permutation_unitary: need at least two phases");
  require_unit_modulus(phases);
  const Eigen::Index n = static_cast<Eigen::Index>(phases.size());
  const Matrix b = resolve_basis(basis, n);
  Matrix core = Matrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) core(k, (k + 1) % n) = phases[k];
  const double target = (n % 2 == 0) ? -1.0 : 1.0;  // (-1)^(N-1)
  FlaggedUnitary out;
  out.matrix = b * core * b.adjoint();
  out.special = std::abs(phase_product(phases) - Complex(target, 0.0)) <=
                kPhaseProductTol;
  return out;
}

Complex diagonal_trace(const Matrix& u_d, const OrthogonalFamily& family,
                       const std::vector<int>& sequence) {
  const int n = family.size();
  require_sequence(sequence, n, /*full_length=*/false);
  if (u_d.rows() != family.dim() || u_d.cols() != family.dim())
    throw DimensionMismatch("diagonal_trace: unitary dimension mismatch");
  const Matrix w = family.basis.adjoint() * u_d * family.basis;
  for (Eigen::Index j = 0; j < w.rows(); ++j)
    for (Eigen::Index k = 0; k < w.cols(); ++k)
      if (j != k && std::abs(w(j, k)) > kPatternTol)
        throw NotDiagonalInBasis(
            "diagonal_trace: unitary is not diagonal in the family basis");
  const int l = static_cast<int>(sequence.size());
  Complex total(0.0, 0.0);
  for (int k = 0; k < n; ++k) {
    double root_product = 1.0;
    for (int j : sequence) {
      const int idx = ((k - j) % n + n) % n;
      const double lambda =
          family.lambdas[idx] > kSpectrumFloor ? family.lambdas[idx] : 0.0;
      root_product *= std::pow(lambda, 1.0 / l);
    }
    total += std::pow(w(k, k), l) * root_product;
  }
  return total;
}

PermutationCoefficient f_coefficient(const OrthogonalFamily& family,
                                     const Matrix& u_p,
                                     const std::vector<int>& sequence) {
  const int n = family.size();
  require_sequence(sequence, n, /*full_length=*/true);
  if (u_p.rows() != family.dim() || u_p.cols() != family.dim())
    throw DimensionMismatch("f_coefficient: unitary dimension mismatch");

  const Matrix w = family.basis.adjoint() * u_p * family.basis;
  std::vector<Complex> phases(n);
  for (Eigen::Index j = 0; j < w.rows(); ++j) {
    for (Eigen::Index k = 0; k < w.cols(); ++k) {
      if (k == (j + 1) % n) {
        if (std::abs(std::abs(w(j, k)) - 1.0) > kPhaseProductTol)
          throw NotPermuting(
              "f_coefficient: pattern entry does not have unit modulus");
        phases[j] = w(j, k);
      } else if (std::abs(w(j, k)) > kPatternTol) {
        throw NotPermuting(
            "f_coefficient: unitary is not permuting in the family basis");
      }
    }
  }
  const double target = (n % 2 == 0) ? -1.0 : 1.0;
  if (std::abs(phase_product(phases) - Complex(target, 0.0)) >
      kPhaseProductTol)
    throw NotPermuting(
        "f_coefficient: phase product does not match the SU(N) value");

  std::vector<Matrix> factors;
  factors.reserve(2 * sequence.size());
  for (int j : sequence) {
    factors.push_back(u_p);
    factors.push_back(family.members[j].power(1, n));
  }
  const Complex scaled = target * trace_product(factors);
  if (std::abs(scaled.imag()) > kCoefficientImagTol)
    throw NotPermuting("f_coefficient: trace has imaginary residue " +
                       std::to_string(scaled.imag()));
  double value = scaled.real();
  if (value < 0.0) {
    if (value < -kCoefficientImagTol)
      throw NotPermuting("f_coefficient: negative coefficient " +
                         std::to_string(value));
    value = 0.0;
  }
  return PermutationCoefficient{sequence, value};
}

namespace {

// Signed solid angle of a spherical triangle, in (-2 pi, 2 pi).
double signed_triangle_angle(const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                             const Eigen::Vector3d& c) {
  const double numerator = a.dot(b.cross(c));
  const double denominator = 1.0 + a.dot(b) + b.dot(c) + c.dot(a);
  return 2.0 * std::atan2(numerator, denominator);
}

}  // namespace

double spherical_polygon_solid_angle(
    const std::vector<Eigen::Vector3d>& waypoints) {
  const std::size_t m = waypoints.size();
  if (m < 3)
    throw TooFewSamples("solid_angle: need at least three waypoints");
  std::vector<Eigen::Vector3d> pts(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double norm = waypoints[i].norm();
    if (norm <= 0.0) throw OutOfRange("solid_angle: zero waypoint");
    pts[i] = waypoints[i] / norm;
  }
  for (std::size_t i = 0; i < m; ++i) {
    const Eigen::Vector3d& cur = pts[i];
    const Eigen::Vector3d& next = pts[(i + 1) % m];
    if (cur.cross(next).norm() < 1e-12)
      throw OutOfRange(
          "solid_angle: consecutive waypoints equal or antipodal");
  }

  // fan the polygon from an apex that is safely off every edge plane, then
  // sum signed triangle angles; self-overlapping loops count area with
  // multiplicity, as the holonomy does
  const Eigen::Vector3d candidates[] = {
      Eigen::Vector3d(0.372677, 0.717137, 0.588348).normalized(),
      Eigen::Vector3d(1.0, 0.0, 0.0),
      Eigen::Vector3d(0.0, 1.0, 0.0),
      Eigen::Vector3d(0.0, 0.0, 1.0),
      Eigen::Vector3d(1.0, 1.0, 1.0).normalized(),
      Eigen::Vector3d(-0.5, 0.25, 0.75).normalized()};
  Eigen::Vector3d apex = candidates[0];
  double best_margin = -1.0;
  for (const Eigen::Vector3d& candidate : candidates) {
    double margin = 1.0;
    for (std::size_t i = 0; i < m; ++i) {
      const Eigen::Vector3d edge_normal =
          pts[i].cross(pts[(i + 1) % m]).normalized();
      margin = std::min(margin, std::abs(candidate.dot(edge_normal)));
      margin = std::min(margin, 1.0 - std::abs(candidate.dot(pts[i])));
    }
    if (margin > best_margin) {
      best_margin = margin;
      apex = candidate;
    }
  }

  double total = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    total += signed_triangle_angle(apex, pts[i], pts[(i + 1) % m]);

  // the enclosed angle is defined modulo the full sphere
  const double sphere = 4.0 * std::numbers::pi;
  total = std::fmod(total, sphere);
  if (total < 0.0) total += sphere;
  return total;
}

Eigen::Vector3d bloch_vector(const Vector& state) {
  if (state.size() != 2)
    throw DimensionMismatch("bloch_vector: qubit state expected");
  const Complex cross = std::conj(state[0]) * state[1];
  return Eigen::Vector3d(2.0 * cross.real(), 2.0 * cross.imag(),
                         std::norm(state[0]) - std::norm(state[1]));
}

}  // namespace offdiag
