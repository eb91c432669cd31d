// Acceptance suite. Each criterion prints one pass/fail line with the
// measured extremes, its tolerance, and the elapsed time against the budget.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "offdiag/families.hpp"
#include "offdiag/phases.hpp"
#include "offdiag/random.hpp"
#include "offdiag/transport.hpp"
#include "offdiag/twophoton.hpp"

using namespace offdiag;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool condition, const std::string& message) {
    if (!condition && passed) {
      passed = false;
      detail = message;
    }
  }
};

std::string fmt(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.3g", value);
  return buffer;
}

// ---------------------------------------------------------------------------
// 1. normalization identity: gamma^(N) of a full family under U_g^dag is +1

Outcome criterion_normalization() {
  Outcome outcome;
  Rng rng(1001);
  double worst = 0.0;
  for (int n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const OrthogonalFamily family = generate_family(random_density(n, rng));
      const PhaseResult result =
          gamma_mixed(family.shift.adjoint(), family.members);
      worst = std::max(worst, std::abs(result.raw_trace - Complex(1.0, 0.0)));
      outcome.require(result.determinate, "phase must be determinate");
      outcome.require(std::abs(result.phase_factor - Complex(1.0, 0.0)) <=
                          1e-10,
                      "phase factor is not +1");
    }
  }
  outcome.require(worst <= 1e-10, "raw trace deviates from 1 by " + fmt(worst));
  outcome.detail = "max |trace - 1| = " + fmt(worst) + " (tol 1e-10)";
  return outcome;
}

// ---------------------------------------------------------------------------
// 2. qubit nodal completeness on the default grid

Outcome criterion_qubit_grid() {
  Outcome outcome;
  Rng rng(1002);
  double worst_match = 0.0;
  double worst_floor = 1e300;
  double worst_node = 0.0;
  long points = 0;

  for (double lambda1 : {0.5, 0.6, 0.75, 0.9, 1.0}) {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = lambda1;
    m(1, 1) = 1.0 - lambda1;
    const OrthogonalFamily family = generate_family(make_density(m));
    const DensityOperator& rho1 = family.members[0];
    const DensityOperator& rho2 = family.members[1];
    for (int e = 0; e <= 20; ++e) {
      const double eta = e / 20.0;
      for (int a = 0; a <= 128; ++a) {
        const double alpha = 2.0 * kPi * a / 128.0;
        ++points;
        const QubitScanPoint point = qubit_traces(eta, alpha, lambda1);
        const Matrix u = su2_unitary(eta, alpha, 2.0 * kPi * rng.uniform());
        worst_match = std::max(
            {worst_match,
             std::abs(gamma_mixed(u, {rho1}).raw_trace - point.t1),
             std::abs(gamma_mixed(u, {rho2}).raw_trace - point.t2),
             std::abs(gamma_mixed(u, {rho1, rho2}).raw_trace - point.t12)});
        worst_floor = std::min(
            worst_floor, std::max({std::abs(point.t1), std::abs(point.t2),
                                   std::abs(point.t12)}));
        if (eta == 0.0)
          worst_node =
              std::max(worst_node, std::abs(point.t12 - Complex(-1.0, 0.0)));
        if (lambda1 == 0.5 && (a == 32 || a == 96))  // cos(alpha) = 0
          worst_node =
              std::max(worst_node, std::abs(point.t12 - Complex(-1.0, 0.0)));
      }
    }
  }
  outcome.require(points >= 10000, "grid has fewer than 10^4 points");
  outcome.require(worst_match <= 1e-11,
                  "closed form vs gamma_mixed: " + fmt(worst_match));
  outcome.require(worst_floor > 1e-9,
                  "simultaneous indeterminacy, floor " + fmt(worst_floor));
  outcome.require(worst_node <= 1e-12, "nodal t12 deviates " + fmt(worst_node));
  outcome.detail = std::to_string(points) + " points, max |closed-general| = " +
                   fmt(worst_match) + " (tol 1e-11), min max-trace = " +
                   fmt(worst_floor) + " (floor 1e-9), nodal dev = " +
                   fmt(worst_node) + " (tol 1e-12)";
  return outcome;
}

// ---------------------------------------------------------------------------
// 3. rank-vanishing for diagonal SU unitaries

Outcome criterion_rank_vanishing() {
  Outcome outcome;
  Rng rng(1003);
  const int n = 4;
  double worst = 0.0;
  for (int rank = 1; rank <= 3; ++rank) {
    for (int trial = 0; trial < 5; ++trial) {
      const RealVector spectrum = random_spectrum_with_rank(n, rank, rng);
      Matrix m = Matrix::Zero(n, n);
      for (int i = 0; i < n; ++i) m(i, i) = spectrum[i];
      const OrthogonalFamily family = generate_family(make_density(m));
      const FlaggedUnitary u_d = diagonal_unitary(
          random_su_phases(n, Complex(1.0, 0.0), rng), family.basis);
      for (int l = rank + 1; l <= n; ++l) {
        std::vector<int> sequence(l);
        std::vector<bool> used(n, false);
        // walk every ordered selection of l distinct members
        std::function<void(int)> walk = [&](int depth) {
          if (depth == l) {
            std::vector<DensityOperator> rhos;
            for (int j : sequence) rhos.push_back(family.members[j]);
            worst = std::max(
                worst, std::abs(gamma_mixed(u_d.matrix, rhos).raw_trace));
            return;
          }
          for (int i = 0; i < n; ++i) {
            if (used[i]) continue;
            used[i] = true;
            sequence[depth] = i;
            walk(depth + 1);
            used[i] = false;
          }
        };
        walk(0);
      }
    }
  }
  outcome.require(worst <= 1e-10, "trace above tolerance: " + fmt(worst));
  outcome.detail = "max |trace| with l > rank = " + fmt(worst) + " (tol 1e-10)";
  return outcome;
}

// ---------------------------------------------------------------------------
// 4. permutation parity theorem

Outcome criterion_parity() {
  Outcome outcome;
  Rng rng(1004);
  double worst_imag = 0.0;
  double worst_identity = 0.0;
  double worst_phase = 0.0;
  double worst_short = 0.0;
  double most_negative = 0.0;
  for (int n = 2; n <= 5; ++n) {
    const double target = (n % 2 == 0) ? -1.0 : 1.0;
    const OrthogonalFamily family = generate_family(random_density(n, rng));
    const FlaggedUnitary u_p = permutation_unitary(
        random_su_phases(n, Complex(target, 0.0), rng), family.basis);

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    do {
      std::vector<DensityOperator> rhos;
      for (int j : order) rhos.push_back(family.members[j]);
      const Complex trace = gamma_mixed(u_p.matrix, rhos).raw_trace;
      worst_imag = std::max(worst_imag, std::abs(trace.imag()));
      const double f_value = target * trace.real();
      most_negative = std::min(most_negative, f_value);
      const PermutationCoefficient coefficient =
          f_coefficient(family, u_p.matrix, order);
      if (order[0] == 0 && std::is_sorted(order.begin(), order.end()))
        worst_identity =
            std::max(worst_identity, std::abs(coefficient.value - 1.0));
      if (coefficient.value > 1e-9) {
        const PhaseResult gamma = phi(trace);
        outcome.require(gamma.determinate, "expected a determinate phase");
        worst_phase = std::max(
            worst_phase, std::abs(gamma.phase_factor - Complex(target, 0.0)));
      }
    } while (std::next_permutation(order.begin(), order.end()));

    // every shorter sequence is indeterminate
    for (int l = 1; l < n; ++l) {
      std::vector<int> sequence(l);
      std::vector<bool> used(n, false);
      std::function<void(int)> walk = [&](int depth) {
        if (depth == l) {
          std::vector<DensityOperator> rhos;
          for (int j : sequence) rhos.push_back(family.members[j]);
          worst_short = std::max(
              worst_short, std::abs(gamma_mixed(u_p.matrix, rhos).raw_trace));
          return;
        }
        for (int i = 0; i < n; ++i) {
          if (used[i]) continue;
          used[i] = true;
          sequence[depth] = i;
          walk(depth + 1);
          used[i] = false;
        }
      };
      walk(0);
    }
  }
  outcome.require(worst_imag <= 1e-10, "imaginary residue " + fmt(worst_imag));
  outcome.require(most_negative >= -1e-10,
                  "negative coefficient " + fmt(most_negative));
  outcome.require(worst_identity <= 1e-10,
                  "identity sequence deviates " + fmt(worst_identity));
  outcome.require(worst_phase <= 1e-6, "parity sign broken " + fmt(worst_phase));
  outcome.require(worst_short <= 1e-10,
                  "short sequence trace " + fmt(worst_short));
  outcome.detail = "max imag = " + fmt(worst_imag) +
                   " (tol 1e-10), |f_id - 1| = " + fmt(worst_identity) +
                   " (tol 1e-10), parity dev = " + fmt(worst_phase) +
                   ", short-sequence max = " + fmt(worst_short) +
                   " (tol 1e-10)";
  return outcome;
}

// ---------------------------------------------------------------------------
// 5. two-photon oracle equivalence

Outcome criterion_two_photon() {
  Outcome outcome;
  double worst_match = 0.0;
  double worst_closed = 0.0;
  double worst_theta = 0.0;
  double worst_imag = 0.0;
  int flips_missing = 0;

  const std::vector<double> thetas{0.0, kPi / 4.0, kPi / 2.0};
  for (double r : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const TwoPhotonState state = purify(make_ensemble(r));
    Matrix rho1m = Matrix::Zero(2, 2), rho2m = Matrix::Zero(2, 2);
    rho1m(0, 0) = (1.0 + r) / 2.0;
    rho1m(1, 1) = (1.0 - r) / 2.0;
    rho2m(0, 0) = rho1m(1, 1);
    rho2m(1, 1) = rho1m(0, 0);
    const DensityOperator rho1 = make_density(rho1m);
    const DensityOperator rho2 = make_density(rho2m);

    std::vector<std::vector<Complex>> gamma1_curves(
        2, std::vector<Complex>(64));
    for (int b = 0; b < 64; ++b) {
      const double beta = 2.0 * kPi * b / 64.0;
      Complex gamma2_first(0.0, 0.0);
      for (std::size_t t = 0; t < thetas.size(); ++t) {
        const double theta = thetas[t];
        const Matrix u = rotation_unitary(beta, theta);
        const FringeScan scan1 = run_fringe(
            state, recipe(RecipeTarget::gamma1_rho1, beta, theta), 64);
        const FringeScan scan2 = run_fringe(
            state, recipe(RecipeTarget::gamma1_rho2, beta, theta), 64);
        const FringeScan scan12 =
            run_fringe(state, recipe(RecipeTarget::gamma2, beta, theta), 64);

        worst_match = std::max(
            {worst_match,
             std::abs(scan1.fourier - gamma_mixed(u, {rho1}).raw_trace),
             std::abs(scan2.fourier - gamma_mixed(u, {rho2}).raw_trace),
             std::abs(scan12.fourier -
                      gamma_mixed(u, {rho1, rho2}).raw_trace)});

        const double closed = std::sqrt(1.0 - r * r) * std::cos(beta) *
                                  std::cos(beta) -
                              std::sin(beta) * std::sin(beta);
        worst_closed =
            std::max(worst_closed,
                     std::abs(scan12.fourier - Complex(closed, 0.0)));
        if (t == 0)
          gamma2_first = scan12.fourier;
        else
          worst_theta =
              std::max(worst_theta, std::abs(scan12.fourier - gamma2_first));

        if (t == 0) {
          gamma1_curves[0][b] = scan1.fourier;
          gamma1_curves[1][b] = scan2.fourier;
        }
        worst_imag = std::max({worst_imag, std::abs(scan1.fourier.imag()),
                               std::abs(scan2.fourier.imag())});
      }
    }
    for (const std::vector<Complex>& curve : gamma1_curves) {
      for (int center : {16, 48}) {
        int before = center - 1, after = center + 1;
        while (before > 0 && std::abs(curve[before].real()) < 1e-9) --before;
        while (after < 63 && std::abs(curve[after].real()) < 1e-9) ++after;
        if (!(curve[before].real() * curve[after].real() < 0.0))
          ++flips_missing;
      }
    }
  }
  outcome.require(worst_match <= 1e-9,
                  "fringe vs trace: " + fmt(worst_match));
  outcome.require(worst_closed <= 1e-9,
                  "gamma2 closed form: " + fmt(worst_closed));
  outcome.require(worst_theta <= 1e-10,
                  "theta dependence: " + fmt(worst_theta));
  outcome.require(worst_imag <= 1e-9, "gamma1 not real: " + fmt(worst_imag));
  outcome.require(flips_missing == 0, "missing sign flips");
  outcome.detail = "max |fringe-trace| = " + fmt(worst_match) +
                   " (tol 1e-9), closed-form dev = " + fmt(worst_closed) +
                   " (tol 1e-9), theta spread = " + fmt(worst_theta) +
                   " (tol 1e-10), sign flips ok";
  return outcome;
}

// ---------------------------------------------------------------------------
// 6. transport certification

Outcome criterion_transport() {
  Outcome outcome;
  Rng rng(1006);
  double worst_defect = 0.0;
  for (int trial = 0; trial < 4; ++trial) {
    const double beta = 0.2 + 1.8 * rng.uniform();
    const double theta = 2.0 * kPi * rng.uniform();
    Matrix k(2, 2);
    k(0, 0) = k(1, 1) = 0.0;
    k(0, 1) = beta * std::exp(Complex(0.0, -theta));
    k(1, 0) = beta * std::exp(Complex(0.0, theta));
    const UnitaryPath path = transport_path(
        [&](double) { return k; }, Matrix::Identity(2, 2), 1.0, 4096);
    worst_defect =
        std::max(worst_defect, transport_defect(path, Matrix::Identity(2, 2)));
  }
  outcome.require(worst_defect < 1e-6, "defect " + fmt(worst_defect));

  // second-order step-halving ratio, measured on a smooth noncommuting
  // generator of the same rotation family (a constant generator is
  // integrated exactly at any step count, leaving nothing to measure)
  double ratio_seen = 0.0;
  for (int trial = 0; trial < 3; ++trial) {
    const double amplitude = 0.8 + 1.2 * rng.uniform();
    const double theta0 = 2.0 * kPi * rng.uniform();
    const GeneratorFn gen = [amplitude, theta0](double s) {
      const double theta = theta0 + kPi * s;
      Matrix j(2, 2);
      j(0, 0) = j(1, 1) = 0.0;
      j(0, 1) = amplitude * std::exp(Complex(0.0, -theta));
      j(1, 0) = amplitude * std::exp(Complex(0.0, theta));
      return j;
    };
    const Matrix basis = Matrix::Identity(2, 2);
    const Matrix reference =
        transport_path(gen, basis, 1.0, 32768).final_unitary();
    const double err_half =
        max_abs(transport_path(gen, basis, 1.0, 2048).final_unitary() -
                reference);
    const double err_full =
        max_abs(transport_path(gen, basis, 1.0, 4096).final_unitary() -
                reference);
    const double ratio = err_half / err_full;
    ratio_seen = ratio;
    outcome.require(ratio >= 3.0 && ratio <= 5.0,
                    "halving ratio " + fmt(ratio) + " outside [3, 5]");
  }
  outcome.detail = "max defect = " + fmt(worst_defect) +
                   " (tol 1e-6), last halving ratio = " + fmt(ratio_seen) +
                   " (window [3, 5])";
  return outcome;
}

// ---------------------------------------------------------------------------
// 7. randomized property suites, 200 cases each

Outcome criterion_properties() {
  Outcome outcome;
  const int cases = 200;

  // gauge invariance under eigenphase randomization
  {
    Rng rng(1007);
    double worst = 0.0;
    for (int t = 0; t < cases; ++t) {
      const int n = 2 + t % 5;
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
      worst = std::max(worst,
                       std::abs(gamma_mixed(u, build(basis)).raw_trace -
                                gamma_mixed(u, build(rephased)).raw_trace));
    }
    outcome.require(worst <= 1e-11, "gauge invariance: " + fmt(worst));
    outcome.detail += "gauge " + fmt(worst) + " (tol 1e-11)";
  }

  // cyclic invariance
  {
    Rng rng(1008);
    double worst = 0.0;
    for (int t = 0; t < cases; ++t) {
      const int n = 2 + t % 5;
      const OrthogonalFamily family = generate_family(random_density(n, rng));
      const Matrix u = random_unitary(n, rng);
      const int l = 2 + t % (n - 1 > 0 ? n - 1 : 1);
      std::vector<DensityOperator> rhos;
      for (int i = 0; i < l; ++i) rhos.push_back(family.members[i]);
      const Complex base = gamma_mixed(u, rhos).raw_trace;
      std::rotate(rhos.begin(), rhos.begin() + 1, rhos.end());
      const Complex rotated = gamma_mixed(u, rhos).raw_trace;
      worst = std::max(worst, std::abs(base - rotated) /
                                  std::max(std::abs(base), 1.0));
    }
    outcome.require(worst <= 1e-12, "cyclic invariance: " + fmt(worst));
    outcome.detail += ", cyclic " + fmt(worst) + " (tol 1e-12)";
  }

  // U(1) covariance
  {
    Rng rng(1009);
    double worst = 0.0;
    for (int t = 0; t < cases; ++t) {
      const int n = 2 + t % 5;
      const OrthogonalFamily family = generate_family(random_density(n, rng));
      const Matrix u = random_unitary(n, rng);
      const int l = 1 + t % n;
      std::vector<DensityOperator> rhos;
      for (int i = 0; i < l; ++i) rhos.push_back(family.members[i]);
      const double angle = 2.0 * kPi * rng.uniform();
      const Complex base = gamma_mixed(u, rhos).raw_trace;
      const Complex shifted =
          gamma_mixed(std::exp(Complex(0.0, angle)) * u, rhos).raw_trace;
      worst = std::max(
          worst, std::abs(shifted - std::exp(Complex(0.0, l * angle)) * base) /
                     std::max(std::abs(base), 1.0));
    }
    outcome.require(worst <= 1e-12, "U(1) covariance: " + fmt(worst));
    outcome.detail += ", u1 " + fmt(worst) + " (tol 1e-12)";
  }

  // pure-state limit
  {
    Rng rng(1010);
    double worst = 0.0;
    for (int t = 0; t < cases; ++t) {
      const int n = 2 + t % 5;
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
      worst = std::max(worst, std::abs(gamma_pure(u, projectors).raw_trace -
                                       gamma_mixed(u, rhos).raw_trace));
    }
    outcome.require(worst <= 1e-11, "pure-state limit: " + fmt(worst));
    outcome.detail += ", pure-limit " + fmt(worst) + " (tol 1e-11)";
  }

  // orthogonal-pair fringe flatness
  {
    Rng rng(1011);
    double worst = 0.0;
    for (int t = 0; t < cases; ++t) {
      const int n = 2 + t % 5;
      const DensityOperator rho = random_density(n, rng);
      const Matrix basis = rho.spectrum().eigenvectors;
      const int hops = 1 + t % (n - 1);
      Matrix core = Matrix::Zero(n, n);
      const std::vector<Complex> phases = random_unit_phases(n, rng);
      for (int k = 0; k < n; ++k) core(k, (k + hops) % n) = phases[k];
      const Matrix u = basis * core * basis.adjoint();
      double lo = 1e300, hi = -1e300;
      for (int i = 0; i < 64; ++i) {
        const double value = interference_profile(rho, u, 2.0 * kPi * i / 64.0);
        lo = std::min(lo, value);
        hi = std::max(hi, value);
      }
      worst = std::max(worst, hi - lo);
    }
    outcome.require(worst <= 1e-9, "fringe flatness: " + fmt(worst));
    outcome.detail += ", flatness " + fmt(worst) + " (tol 1e-9)";
  }

  outcome.detail = "5 suites x 200 cases: " + outcome.detail;
  return outcome;
}

struct Criterion {
  int index;
  std::string name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "normalization identity", 1.0, criterion_normalization},
      {2, "qubit nodal completeness", 10.0, criterion_qubit_grid},
      {3, "rank-vanishing", 5.0, criterion_rank_vanishing},
      {4, "permutation parity theorem", 30.0, criterion_parity},
      {5, "two-photon oracle equivalence", 10.0, criterion_two_photon},
      {6, "transport certification", 5.0, criterion_transport},
      {7, "property suites", 60.0, criterion_properties},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criterion.run();
    } catch (const std::exception& e) {
      outcome.passed = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (elapsed > criterion.budget_seconds) {
      outcome.passed = false;
      outcome.detail += " [over budget]";
    }
    if (!outcome.passed) ++failures;
    std::printf("[%s] criterion %d: %s | %s | %.2fs of %.0fs budget\n",
                outcome.passed ? "PASS" : "FAIL", criterion.index,
                criterion.name.c_str(), outcome.detail.c_str(), elapsed,
                criterion.budget_seconds);
  }
  if (failures == 0)
    std::printf("acceptance: all %zu criteria passed\n", criteria.size());
  else
    std::printf("acceptance: %d criteria FAILED\n", failures);
  return failures;
}
