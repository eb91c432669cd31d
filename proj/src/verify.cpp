#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "offdiag/random.hpp"
#include "offdiag/scenario.hpp"
#include "offdiag/transport.hpp"

// The invariant suite behind the verify scenario. Each check draws its own
// seeded stream so trial counts do not shift other checks' cases.

namespace offdiag {

namespace {

constexpr double kPi = std::numbers::pi;

struct Recorder {
  CheckResult result;

  Recorder(std::string name, double bound, std::string comparison = "max <=") {
    result.name = std::move(name);
    result.bound = bound;
    result.comparison = std::move(comparison);
    result.measured = result.comparison == "min >="
                          ? std::numeric_limits<double>::infinity()
                          : 0.0;
  }

  void record(double value) {
    if (result.comparison == "min >=")
      result.measured = std::min(result.measured, value);
    else
      result.measured = std::max(result.measured, value);
    ++result.cases;
  }

  CheckResult finish() {
    result.passed = result.comparison == "min >="
                        ? result.measured >= result.bound
                        : result.measured <= result.bound;
    return result;
  }
};

int dim_for(int trial) { return 2 + trial % 5; }  // cycles 2..6

Matrix shift_power(const Matrix& shift, int power) {
  Matrix out = Matrix::Identity(shift.rows(), shift.cols());
  for (int i = 0; i < power; ++i) out = shift * out;
  return out;
}

GeneratorFn rotating_axis_generator(double amplitude, double theta0) {
  return [amplitude, theta0](double s) {
    const double theta = theta0 + kPi * s;
    Matrix j(2, 2);
    j(0, 0) = 0.0;
    j(0, 1) = amplitude * std::exp(Complex(0.0, -theta));
    j(1, 0) = amplitude * std::exp(Complex(0.0, theta));
    j(1, 1) = 0.0;
    return j;
  };
}

// Closed loop of meridian legs, each rotating the Bloch vector by pi about a
// different equatorial axis. Returns the generator (one unit of s per leg)
// and the polygon waypoints (pole, equator midpoint, pole, ...).
struct BlochLoop {
  GeneratorFn generator;
  std::vector<Eigen::Vector3d> waypoints;
  int legs;
};

BlochLoop make_lune_loop(const std::vector<double>& thetas) {
  BlochLoop loop;
  loop.legs = static_cast<int>(thetas.size());
  loop.generator = [thetas](double s) {
    const int leg = std::min(static_cast<int>(s),
                             static_cast<int>(thetas.size()) - 1);
    Matrix j(2, 2);
    j(0, 0) = 0.0;
    j(0, 1) = (kPi / 2.0) * std::exp(Complex(0.0, -thetas[leg]));
    j(1, 0) = (kPi / 2.0) * std::exp(Complex(0.0, thetas[leg]));
    j(1, 1) = 0.0;
    return j;
  };
  Eigen::Vector3d point(0.0, 0.0, 1.0);
  for (double theta : thetas) {
    const Eigen::Vector3d axis(std::cos(theta), std::sin(theta), 0.0);
    loop.waypoints.push_back(point);
    loop.waypoints.push_back(axis.cross(point));
    point = -point;
  }
  return loop;
}

CheckResult check_spectral_reconstruction(std::uint64_t seed, int trials) {
  Recorder rec("spectral-reconstruction", 1e-12);
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const int n = 1 + t % 8;
    const Matrix m = random_hermitian(n, rng);
    const SpectralDecomposition eig = hermitian_eig(m);
    const Matrix rebuilt = eig.eigenvectors * eig.eigenvalues.asDiagonal() *
                           eig.eigenvectors.adjoint();
    const double scale = std::max(max_abs(m), 1e-300);
    rec.record(max_abs(rebuilt - m) / scale);
  }
  return rec.finish();
}

CheckResult check_eigenvector_unitarity(std::uint64_t seed, int trials) {
  Recorder rec("eigenvector-unitarity", 1e-12);
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const int n = 1 + t % 8;
    const SpectralDecomposition eig = hermitian_eig(random_hermitian(n, rng));
    rec.record(max_abs(eig.eigenvectors.adjoint() * eig.eigenvectors -
                       Matrix::Identity(n, n)));
  }
  return rec.finish();
}

CheckResult check_psd_root_power(std::uint64_t seed, int trials) {
  Recorder rec("psd-root-power", 1e-10);
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const int n = 2 + t % 7;
    const Matrix g = random_gaussian_matrix(n, rng);
    Matrix m = g * g.adjoint();
    m /= m.trace().real();
    m = (m + m.adjoint()) / 2.0;
    const int l = 1 + t % n;
    Matrix power = Matrix::Identity(n, n);
    const Matrix root = psd_power(m, 1, l);
    for (int i = 0; i < l; ++i) power = power * root;
    rec.record(max_abs(power - m));
  }
  return rec.finish();
}

CheckResult check_ordered_exp_unitarity(std::uint64_t seed, int trials) {
  Recorder rec("ordered-exp-unitarity", 1e-10 * 128);
  Rng rng(seed);
  const int cases = std::min(trials, 24);
  for (int t = 0; t < cases; ++t) {
    const int n = dim_for(t);
    const Matrix a = random_hermitian(n, rng);
    const Matrix b = random_hermitian(n, rng);
    const Matrix u = ordered_exp(
        [&](double s) { return Matrix(a + std::sin(s) * b); }, 1.5, 128);
    rec.record(max_abs(u.adjoint() * u - Matrix::Identity(n, n)));
  }
  return rec.finish();
}

CheckResult check_trace_cyclic(std::uint64_t seed, int trials) {
  Recorder rec("trace-cyclic-invariance", 1e-12);
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const int n = dim_for(t);
    const int count = 2 + t % 4;
    std::vector<Matrix> factors;
    for (int i = 0; i < count; ++i)
      factors.push_back(random_gaussian_matrix(n, rng));
    const Complex base = trace_product(factors);
    std::rotate(factors.begin(), factors.begin() + 1 + t % (count - 1),
                factors.end());
    const Complex rotated = trace_product(factors);
    rec.record(std::abs(base - rotated) / std::max(std::abs(base), 1e-6));
  }
  return rec.finish();
}

CheckResult check_family_orthogonality(std::uint64_t seed, int trials) {
  Recorder rec("family-orthogonality", kOverlapTol);
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const int n = dim_for(t);
    const OrthogonalFamily family = generate_family(random_density(n, rng));
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (a == b) continue;
        const Matrix connector = shift_power(family.shift, ((b - a) % n + n) % n);
        if (!are_orthogonal(family.members[a], family.members[b], connector))
          rec.record(1.0);  // forces failure
        rec.record(max_same_group_overlap(family.members[a], connector));
      }
    }
  }
  return rec.finish();
}

CheckResult check_orthogonality_gauge(std::uint64_t seed, int trials) {
  Recorder rec("orthogonality-gauge-invariance", 0.0);
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const int n = 4;
    const Matrix basis = random_unitary(n, rng);
    RealVector spectrum = random_spectrum(n, rng);
    const bool degenerate = t % 2 == 0;
    if (degenerate) {
      const double merged = (spectrum[0] + spectrum[1]) / 2.0;
      spectrum[0] = spectrum[1] = merged;
    }
    Matrix lambda = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) lambda(i, i) = spectrum[i];

    // same state, different eigenbasis representatives
    Matrix mixer = Matrix::Identity(n, n);
    if (degenerate)
      mixer.block(0, 0, 2, 2) = random_unitary(2, rng);
    for (int i = 0; i < n; ++i)
      mixer.col(i) *= std::exp(Complex(0.0, 2.0 * kPi * rng.uniform()));
    const Matrix basis_b = basis * mixer;

    const Matrix rho_a = basis * lambda * basis.adjoint();
    const Matrix rho_b = basis_b * lambda * basis_b.adjoint();
    const DensityOperator da = make_density((rho_a + rho_a.adjoint()) / 2.0);
    const DensityOperator db = make_density((rho_b + rho_b.adjoint()) / 2.0);

    // orthogonal connector (shift by 2 clears degenerate pairs) and a
    // generic non-orthogonal one
    const Matrix shift = shift_unitary(basis);
    const Matrix u1 = shift_power(shift, 2);
    const Matrix u2 = random_unitary(n, rng);
    for (const Matrix& u : {u1, u2}) {
      const DensityOperator ta = make_density(
          ((u * da.matrix() * u.adjoint()) +
           (u * da.matrix() * u.adjoint()).adjoint()) / 2.0);
      const bool verdict_a = are_orthogonal(da, ta, u);
      const bool verdict_b = are_orthogonal(db, ta, u);
      rec.record(verdict_a == verdict_b ? 0.0 : 1.0);
    }
  }
  return rec.finish();
}

CheckResult check_family_spectrum(std::uint64_t seed, int trials) {
  Recorder rec("family-spectrum-shared", 1e-10);
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const int n = dim_for(t);
    const DensityOperator rho1 = random_density(n, rng);
    const OrthogonalFamily family = generate_family(rho1);
    for (const DensityOperator& member : family.members)
      rec.record((member.spectrum().eigenvalues -
                  rho1.spectrum().eigenvalues).cwiseAbs().maxCoeff());
  }
  return rec.finish();
}

CheckResult check_fringe_flatness(std::uint64_t seed, int trials) {
  Recorder rec("orthogonal-pair-fringe-flatness", 1e-9);
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const int n = dim_for(t);
    const DensityOperator rho = random_density(n, rng);
    const Matrix basis = rho.spectrum().eigenvectors;
    const int hops = 1 + t % (n - 1);
    Matrix core = Matrix::Zero(n, n);
    const std::vector<Complex> phases = random_unit_phases(n, rng);
    for (int k = 0; k < n; ++k) core(k, (k + hops) % n) = phases[k];
    const Matrix u = basis * core * basis.adjoint();
    double lo = 1e300, hi = -1e300;
    for (int i = 0; i < 64; ++i) {
      const double value =
          interference_profile(rho, u, 2.0 * kPi * i / 64.0);
      lo = std::min(lo, value);
      hi = std::max(hi, value);
    }
    rec.record(hi - lo);
  }
  return rec.finish();
}

CheckResult check_projection_traceless(std::uint64_t seed, int trials) {
  Recorder rec("projection-traceless", 1e-12);
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const int n = dim_for(t);
    const Matrix j = random_hermitian(n, rng);
    const Matrix basis = random_unitary(n, rng);
    const Matrix projected = project_parallel(j, basis);
    const double scale = std::max(max_abs(j), 1.0);
    rec.record(std::abs(projected.trace()) / scale);
    const Matrix in_basis = basis.adjoint() * projected * basis;
    for (int k = 0; k < n; ++k)
      rec.record(std::abs(in_basis(k, k)) / scale);
  }
  return rec.finish();
}

CheckResult check_transport_convergence(std::uint64_t seed, int trials) {
  Recorder rec("transport-second-order", 1.0);
  Rng rng(seed);
  const int cases = std::min(trials, 5);
  for (int t = 0; t < cases; ++t) {
    const double amplitude = 0.5 + 1.5 * rng.uniform();
    const double theta0 = 2.0 * kPi * rng.uniform();
    const GeneratorFn gen = rotating_axis_generator(amplitude, theta0);
    const Matrix basis = Matrix::Identity(2, 2);
    const Matrix coarse =
        transport_path(gen, basis, 1.0, 256).final_unitary();
    const Matrix fine = transport_path(gen, basis, 1.0, 512).final_unitary();
    const Matrix reference =
        transport_path(gen, basis, 1.0, 4096).final_unitary();
    const double ratio =
        max_abs(coarse - reference) / max_abs(fine - reference);
    rec.record(std::abs(ratio - 4.0));
  }
  return rec.finish();
}

CheckResult check_transport_pure_phase(std::uint64_t seed, int trials) {
  Recorder rec("transport-pure-phase", 1e-12);
  Rng rng(seed);
  const int cases = std::min(trials, 16);
  for (int t = 0; t < cases; ++t) {
    const Matrix basis = random_unitary(2, rng);
    const GeneratorFn gen = rotating_axis_generator(
        0.5 + rng.uniform(), 2.0 * kPi * rng.uniform());
    const Matrix u =
        transport_path(gen, basis, 1.0, 128).final_unitary();
    for (int k = 0; k < 2; ++k) {
      const Matrix projector =
          basis.col(k) * basis.col(k).adjoint();
      const PhaseResult result = gamma_pure(u, {projector});
      const Complex overlap = basis.col(k).dot(u * basis.col(k));
      rec.record(std::abs(result.raw_trace - overlap));
    }
  }
  return rec.finish();
}

CheckResult check_gamma_cyclic(std::uint64_t seed, int trials) {
  Recorder rec("gamma-cyclic-invariance", 1e-12);
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const int n = dim_for(t);
    const OrthogonalFamily family = generate_family(random_density(n, rng));
    const Matrix u = random_unitary(n, rng);
    const int l = 2 + t % (n - 1);
    std::vector<DensityOperator> rhos;
    for (int i = 0; i < l; ++i) rhos.push_back(family.members[i]);
    const Complex base = gamma_mixed(u, rhos).raw_trace;
    std::rotate(rhos.begin(), rhos.begin() + 1 + t % (l - 1 > 0 ? l - 1 : 1),
                rhos.end());
    const Complex rotated = gamma_mixed(u, rhos).raw_trace;
    rec.record(std::abs(base - rotated) / std::max(std::abs(base), 1e-6));
  }
  return rec.finish();
}

CheckResult check_gamma_gauge(std::uint64_t seed, int trials) {
  Recorder rec("gamma-gauge-invariance", 1e-11);
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const int n = dim_for(t);
    const Matrix basis = random_unitary(n, rng);
    const RealVector spectrum = random_spectrum(n, rng);
    const Matrix u = random_unitary(n, rng);
    const int l = 1 + t % n;

    auto build = [&](const Matrix& b) {
      std::vector<DensityOperator> rhos;
      for (int m = 0; m < l; ++m) {
        Matrix rho = Matrix::Zero(n, n);
        for (int k = 0; k < n; ++k) {
          const int col = (k + m) % n;
          rho += spectrum[k] * b.col(col) * b.col(col).adjoint();
        }
        rhos.push_back(make_density((rho + rho.adjoint()) / 2.0));
      }
      return rhos;
    };

    Matrix rephased = basis;
    for (int i = 0; i < n; ++i)
      rephased.col(i) *= std::exp(Complex(0.0, 2.0 * kPi * rng.uniform()));
    const Complex base = gamma_mixed(u, build(basis)).raw_trace;
    const Complex other = gamma_mixed(u, build(rephased)).raw_trace;
    rec.record(std::abs(base - other));
  }
  return rec.finish();
}

CheckResult check_u1_covariance(std::uint64_t seed, int trials) {
  Recorder rec("u1-covariance", 1e-12);
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const int n = dim_for(t);
    const OrthogonalFamily family = generate_family(random_density(n, rng));
    const Matrix u = random_unitary(n, rng);
    const int l = 1 + t % n;
    std::vector<DensityOperator> rhos;
    for (int i = 0; i < l; ++i) rhos.push_back(family.members[i]);
    const double angle = 2.0 * kPi * rng.uniform();
    const Complex base = gamma_mixed(u, rhos).raw_trace;
    const Complex shifted =
        gamma_mixed(std::exp(Complex(0.0, angle)) * u, rhos).raw_trace;
    const Complex expected =
        std::exp(Complex(0.0, l * angle)) * base;
    rec.record(std::abs(shifted - expected) /
               std::max(std::abs(base), 1e-6));
  }
  return rec.finish();
}

CheckResult check_pure_limit(std::uint64_t seed, int trials) {
  Recorder rec("pure-state-limit", 1e-11);
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const int n = dim_for(t);
    const Matrix basis = random_unitary(n, rng);
    const Matrix u = random_unitary(n, rng);
    const int l = 1 + t % n;
    std::vector<Matrix> projectors;
    std::vector<DensityOperator> rhos;
    for (int k = 0; k < l; ++k) {
      Matrix p = basis.col(k) * basis.col(k).adjoint();
      p = (p + p.adjoint()) / 2.0;
      projectors.push_back(p);
      rhos.push_back(make_density(p));
    }
    const Complex pure = gamma_pure(u, projectors).raw_trace;
    const Complex mixed = gamma_mixed(u, rhos).raw_trace;
    rec.record(std::abs(pure - mixed));
  }
  return rec.finish();
}

CheckResult check_qubit_completeness(std::uint64_t, int) {
  Recorder rec("qubit-completeness", 1e-9, "min >=");
  for (int e = 0; e <= 20; ++e) {
    const double eta = e / 20.0;
    for (int a = 0; a < 65; ++a) {
      const double alpha = 2.0 * kPi * a / 64.0;
      for (double lambda1 : {0.5, 0.6, 0.75, 0.9, 1.0}) {
        const QubitScanPoint point = qubit_traces(eta, alpha, lambda1);
        rec.record(std::max({std::abs(point.t1), std::abs(point.t2),
                             std::abs(point.t12)}));
      }
    }
  }
  return rec.finish();
}

CheckResult check_parity_theorem(std::uint64_t seed, int trials) {
  Recorder rec("permutation-parity", 1e-6);
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const int n = 2 + t % 4;  // 2..5
    const double target = (n % 2 == 0) ? -1.0 : 1.0;
    Matrix lambda = Matrix::Zero(n, n);
    const RealVector spectrum = random_spectrum(n, rng);
    for (int i = 0; i < n; ++i) lambda(i, i) = spectrum[i];
    const OrthogonalFamily family = generate_family(make_density(lambda));
    const FlaggedUnitary u_p = permutation_unitary(
        random_su_phases(n, Complex(target, 0.0), rng), family.basis);

    // a random full-length sequence
    std::vector<int> sequence(n);
    for (int i = 0; i < n; ++i) sequence[i] = i;
    for (int i = n - 1; i > 0; --i)
      std::swap(sequence[i],
                sequence[static_cast<int>(rng.uniform() * (i + 1))]);
    const PermutationCoefficient coefficient =
        f_coefficient(family, u_p.matrix, sequence);
    if (coefficient.value > 1e-9) {
      const PhaseResult result = phi(Complex(target * coefficient.value, 0.0));
      rec.record(std::abs(result.phase_factor - Complex(target, 0.0)));
    } else {
      rec.record(0.0);
    }
  }
  return rec.finish();
}

CheckResult check_identity_coefficient(std::uint64_t seed, int trials) {
  Recorder rec("identity-sequence-coefficient", 1e-10);
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const int n = 2 + t % 4;
    const double target = (n % 2 == 0) ? -1.0 : 1.0;
    Matrix lambda = Matrix::Zero(n, n);
    const RealVector spectrum = random_spectrum(n, rng);
    for (int i = 0; i < n; ++i) lambda(i, i) = spectrum[i];
    const OrthogonalFamily family = generate_family(make_density(lambda));
    const FlaggedUnitary u_p = permutation_unitary(
        random_su_phases(n, Complex(target, 0.0), rng), family.basis);
    std::vector<int> identity(n);
    for (int i = 0; i < n; ++i) identity[i] = i;
    rec.record(std::abs(f_coefficient(family, u_p.matrix, identity).value -
                        1.0));
  }
  return rec.finish();
}

CheckResult check_diagonal_closed_form(std::uint64_t seed, int trials) {
  Recorder rec("diagonal-closed-form", 1e-11);
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const int n = dim_for(t);
    const OrthogonalFamily family = generate_family(random_density(n, rng));
    const FlaggedUnitary u_d = diagonal_unitary(
        random_su_phases(n, Complex(1.0, 0.0), rng), family.basis);
    const int l = 1 + t % n;
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    for (int i = n - 1; i > 0; --i)
      std::swap(pool[i], pool[static_cast<int>(rng.uniform() * (i + 1))]);
    std::vector<int> sequence(pool.begin(), pool.begin() + l);
    std::vector<DensityOperator> rhos;
    for (int j : sequence) rhos.push_back(family.members[j]);
    const Complex closed = diagonal_trace(u_d.matrix, family, sequence);
    const Complex general = gamma_mixed(u_d.matrix, rhos).raw_trace;
    rec.record(std::abs(closed - general));
  }
  return rec.finish();
}

CheckResult check_solid_angle(std::uint64_t seed, int trials) {
  Recorder rec("transported-loop-solid-angle", 1e-8);
  Rng rng(seed);
  const int cases = std::min(trials, 12);
  for (int t = 0; t < cases; ++t) {
    const int legs = (t % 2 == 0) ? 2 : 4;
    std::vector<double> thetas;
    for (int i = 0; i < legs; ++i)
      thetas.push_back(2.0 * kPi * rng.uniform());
    const BlochLoop loop = make_lune_loop(thetas);
    const UnitaryPath path =
        transport_path(loop.generator, Matrix::Identity(2, 2),
                       static_cast<double>(loop.legs), 256 * loop.legs);
    const Complex holonomy = path.final_unitary()(0, 0);
    const double omega = spherical_polygon_solid_angle(loop.waypoints);
    rec.record(std::abs(holonomy - std::exp(Complex(0.0, -omega / 2.0))));
  }
  return rec.finish();
}

CheckResult check_twophoton_oracle(std::uint64_t seed, int trials) {
  Recorder rec("two-photon-oracle", 1e-9);
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const double r = rng.uniform();
    const double beta = 2.0 * kPi * rng.uniform();
    const double theta = 2.0 * kPi * rng.uniform();
    const TwoPhotonState state = purify(make_ensemble(r));
    const Matrix u = rotation_unitary(beta, theta);
    const DensityOperator rho1 = make_density(
        (Matrix(2, 2) << Complex((1 + r) / 2.0), Complex(0.0), Complex(0.0),
         Complex((1 - r) / 2.0)).finished());
    const DensityOperator rho2 = make_density(
        (Matrix(2, 2) << Complex((1 - r) / 2.0), Complex(0.0), Complex(0.0),
         Complex((1 + r) / 2.0)).finished());

    const Complex trace1 = gamma_mixed(u, {rho1}).raw_trace;
    const Complex trace2 = gamma_mixed(u, {rho2}).raw_trace;
    const Complex trace12 = gamma_mixed(u, {rho1, rho2}).raw_trace;

    const FringeScan scan1 = run_fringe(
        state, recipe(RecipeTarget::gamma1_rho1, beta, theta), 64);
    const FringeScan scan2 = run_fringe(
        state, recipe(RecipeTarget::gamma1_rho2, beta, theta), 64);
    const FringeScan scan12 =
        run_fringe(state, recipe(RecipeTarget::gamma2, beta, theta), 64);

    rec.record(std::abs(scan1.fourier - trace1));
    rec.record(std::abs(scan2.fourier - trace2));
    rec.record(std::abs(scan12.fourier - trace12));
  }
  return rec.finish();
}

CheckResult check_gamma2_theta_independence(std::uint64_t seed, int trials) {
  Recorder rec("gamma2-theta-independence", 1e-10);
  Rng rng(seed);
  const int cases = std::min(trials, 40);
  for (int t = 0; t < cases; ++t) {
    const double r = rng.uniform();
    const double beta = 2.0 * kPi * rng.uniform();
    const TwoPhotonState state = purify(make_ensemble(r));
    Complex first(0.0, 0.0);
    for (int i = 0; i < 16; ++i) {
      const double theta = 2.0 * kPi * i / 16.0;
      const FringeScan scan =
          run_fringe(state, recipe(RecipeTarget::gamma2, beta, theta), 64);
      if (i == 0)
        first = scan.fourier;
      else
        rec.record(std::abs(scan.fourier - first));
    }
  }
  return rec.finish();
}

CheckResult check_gamma1_sign_jumps(std::uint64_t seed, int trials) {
  Recorder rec("gamma1-sign-jumps", 0.0);
  Rng rng(seed);
  const int cases = std::min(trials, 40);
  for (int t = 0; t < cases; ++t) {
    const double r = rng.uniform();
    const double theta = 2.0 * kPi * rng.uniform();
    const TwoPhotonState state = purify(make_ensemble(r));
    for (RecipeTarget target :
         {RecipeTarget::gamma1_rho1, RecipeTarget::gamma1_rho2}) {
      std::vector<Complex> inner(64);
      for (int b = 0; b < 64; ++b)
        inner[b] = run_fringe(state,
                              recipe(target, 2.0 * kPi * b / 64.0, theta), 64)
                       .fourier;
      for (Complex value : inner)
        rec.record(std::abs(value.imag()) > 1e-9 ? 1.0 : 0.0);
      // sign flips across beta = pi/2 and 3 pi/2 (grid indices 16, 48)
      for (int center : {16, 48}) {
        int before = center - 1, after = center + 1;
        while (std::abs(inner[before].real()) < 1e-9) --before;
        while (std::abs(inner[after].real()) < 1e-9) ++after;
        const bool flipped = inner[before].real() * inner[after].real() < 0.0;
        rec.record(flipped ? 0.0 : 1.0);
      }
    }
  }
  return rec.finish();
}

CheckResult check_rotation_transport_defect(std::uint64_t seed, int trials,
                                            int steps) {
  Recorder rec("rotation-transport-defect", 1e-6);
  Rng rng(seed);
  const int cases = std::min(trials, 8);
  // never certify below the pinned resolution; extra steps only add rigor
  const int path_steps = std::max(steps, 4096);
  for (int t = 0; t < cases; ++t) {
    const double beta = 0.2 + 1.8 * rng.uniform();
    const double theta = 2.0 * kPi * rng.uniform();
    Matrix k(2, 2);
    k(0, 0) = k(1, 1) = 0.0;
    k(0, 1) = beta * std::exp(Complex(0.0, -theta));
    k(1, 0) = beta * std::exp(Complex(0.0, theta));
    const UnitaryPath path = transport_path(
        [&](double) { return k; }, Matrix::Identity(2, 2), 1.0, path_steps);
    rec.record(transport_defect(path, Matrix::Identity(2, 2)));
    rec.record(max_abs(path.final_unitary() - rotation_unitary(beta, theta)));
  }
  return rec.finish();
}

}  // namespace

std::vector<CheckResult> run_verification(std::uint64_t seed, int trials,
                                          int steps) {
  std::vector<CheckResult> results;
  std::uint64_t stream = seed;
  auto next_seed = [&stream]() { return ++stream * 0x9e3779b97f4a7c15ULL; };
  results.push_back(check_spectral_reconstruction(next_seed(), trials));
  results.push_back(check_eigenvector_unitarity(next_seed(), trials));
  results.push_back(check_psd_root_power(next_seed(), trials));
  results.push_back(check_ordered_exp_unitarity(next_seed(), trials));
  results.push_back(check_trace_cyclic(next_seed(), trials));
  results.push_back(check_family_orthogonality(next_seed(), trials));
  results.push_back(check_orthogonality_gauge(next_seed(), trials));
  results.push_back(check_family_spectrum(next_seed(), trials));
  results.push_back(check_fringe_flatness(next_seed(), trials));
  results.push_back(check_projection_traceless(next_seed(), trials));
  results.push_back(check_transport_convergence(next_seed(), trials));
  results.push_back(check_transport_pure_phase(next_seed(), trials));
  results.push_back(check_gamma_cyclic(next_seed(), trials));
  results.push_back(check_gamma_gauge(next_seed(), trials));
  results.push_back(check_u1_covariance(next_seed(), trials));
  results.push_back(check_pure_limit(next_seed(), trials));
  results.push_back(check_qubit_completeness(next_seed(), trials));
  results.push_back(check_parity_theorem(next_seed(), trials));
  results.push_back(check_identity_coefficient(next_seed(), trials));
  results.push_back(check_diagonal_closed_form(next_seed(), trials));
  results.push_back(check_solid_angle(next_seed(), trials));
  results.push_back(check_twophoton_oracle(next_seed(), trials));
  results.push_back(check_gamma2_theta_independence(next_seed(), trials));
  results.push_back(check_gamma1_sign_jumps(next_seed(), trials));
  results.push_back(check_rotation_transport_defect(next_seed(), trials, steps));
  return results;
}

}  // namespace offdiag
