// Acceptance suite: eleven numbered end-to-end checks over the whole
// library, each printing one [PASS]/[FAIL] line with the measured values.
// Exit code 0 only when every check passes.  Tolerances are the contract
// gates, never loosened to match the implementation.

#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "absphase/classical_limit.hpp"
#include "absphase/classical_oscillator.hpp"
#include "absphase/fock_core.hpp"
#include "absphase/phase_operators.hpp"
#include "absphase/restricted_space.hpp"

using namespace absphase;

namespace {

constexpr double kPi = std::numbers::pi;

int g_failures = 0;

void report(int index, const std::string& label, bool pass,
            const std::string& detail) {
  std::printf("[%s] %2d. %s — %s\n", pass ? "PASS" : "FAIL", index,
              label.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return std::string(buf);
}

// --- 1: closed form vs quadrature --------------------------------------

void criterion_1() {
  const int n_max = 128;
  const TruncatedOperator analytic = build_phi_analytic(n_max);
  const TruncatedOperator quad = build_operator_from_phase_function(
      [](double phi) { return phi; }, make_phase_grid(1024), n_max);
  const double dev = (analytic.entries - quad.entries).cwiseAbs().maxCoeff();
  report(1, "phase matrix: closed form vs 1024-point quadrature, n_max 128",
         dev < 1e-8, "max element deviation " + fmt(dev) + " (gate 1e-8)");
}

// --- 2: diagonal law and first off-diagonal ------------------------------

void criterion_2() {
  const int n_max = 128;
  const TruncatedOperator phi = build_phi_analytic(n_max);
  double diag_dev = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    diag_dev = std::max(diag_dev,
                        std::abs(phi.entries(n, n).real() - kPi / 2.0));
  }
  const double corner_dev =
      std::abs(phi.entries(0, 1).real() - (-2.0 * std::sqrt(2.0) / kPi));
  report(2, "diagonal pi/2 for n <= 128 and <0|Phi|1> = -2*sqrt(2)/pi",
         diag_dev < 1e-12 && corner_dev < 1e-12,
         "diagonal deviation " + fmt(diag_dev) + ", corner deviation " +
             fmt(corner_dev) + " (gates 1e-12)");
}

// --- 3: correction identities -------------------------------------------

void criterion_3() {
  const double cos_residual = verify_cos_identity(128);
  const double sin2_residual = verify_sin2_identity(128);
  report(3, "cosine and squared-sine correction identities, n_max 128",
         cos_residual < 1e-10 && sin2_residual < 1e-10,
         "residuals " + fmt(cos_residual) + " and " + fmt(sin2_residual) +
             " (gates 1e-10)");
}

// --- 4: trig closure -----------------------------------------------------

void criterion_4() {
  const int n_max = 128;
  const PhaseGrid grid = make_phase_grid(1024);
  // sin^2 and cos^2 as operator functions (spectral construction); their sum
  // is the identity wherever the basis resolves the integrands.
  const TruncatedOperator sin2 = build_operator_from_phase_function(
      [](double p) { const double s = std::sin(p); return s * s; }, grid,
      n_max);
  const TruncatedOperator cos2 = build_operator_from_phase_function(
      [](double p) { const double c = std::cos(p); return c * c; }, grid,
      n_max);
  double closure = 0.0;
  for (int n = 0; n <= n_max - 1; ++n) {
    for (int m = 0; m <= n_max - 1; ++m) {
      const double expected = (n == m) ? 1.0 : 0.0;
      closure = std::max(closure, std::abs(sin2.entries(n, m) +
                                           cos2.entries(n, m) - expected));
    }
  }
  // Commutator of the truncated factors; the outermost two bands carry the
  // truncation contamination of the products, the interior does not.
  const TruncatedOperator sin_phi = build_sin_phi(n_max, grid);
  const TruncatedOperator cos_phi = build_operator_from_phase_function(
      [](double p) { return std::cos(p); }, grid, n_max);
  const TruncatedOperator sc = matmul(sin_phi, cos_phi);
  const TruncatedOperator cs = matmul(cos_phi, sin_phi);
  double comm = 0.0;
  for (int n = 0; n <= n_max - 2; ++n) {
    for (int m = 0; m <= n_max - 2; ++m) {
      comm = std::max(comm, std::abs(sc.entries(n, m) - cs.entries(n, m)));
    }
  }
  report(4, "trig closure: sin^2+cos^2 = identity, [sin, cos] = 0 (interior)",
         closure < 1e-10 && comm < 1e-10,
         "closure residual " + fmt(closure) + ", commutator residual " +
             fmt(comm) + " (gates 1e-10)");
}

// --- 5: acid-test moments ------------------------------------------------

void criterion_5() {
  const PhaseGrid grid = make_phase_grid(1024);
  double first_dev = 0.0;
  for (int n = 0; n <= 128; ++n) {
    first_dev = std::max(
        first_dev, std::abs(number_state_moment(n, 1, grid) - kPi / 2.0));
  }
  double second_dev = 0.0;
  bool decreasing = true;
  double prev_excess = 1e300;
  for (int n = 1; n <= 50; ++n) {
    const double excess =
        number_state_moment(n, 2, grid) - kPi * kPi / 3.0;
    second_dev = std::max(second_dev,
                          std::abs(excess - 1.0 / (2.0 * n * n)));
    if (excess >= prev_excess) decreasing = false;
    prev_excess = excess;
  }
  report(5, "moments: <Phi> = pi/2 (n <= 128), <Phi^2> excess = 1/(2n^2)",
         first_dev < 1e-12 && second_dev < 1e-10 && decreasing,
         "first-moment deviation " + fmt(first_dev) + " (gate 1e-12), " +
             "excess deviation " + fmt(second_dev) +
             " (gate 1e-10), decreasing: " + (decreasing ? "yes" : "no"));
}

// --- 6: classical limit sweep ---------------------------------------------

void criterion_6() {
  const std::vector<double> nbar_list = {4.0, 16.0, 64.0, 256.0};
  const std::vector<std::pair<PhaseObservable, const char*>> observables = {
      {PhaseObservable::Phi, "phi"},     {PhaseObservable::SinPhi, "sin"},
      {PhaseObservable::CosPhi, "cos"},  {PhaseObservable::Sin2Phi, "sin2"},
      {PhaseObservable::Cos2Phi, "cos2"}};
  bool pass = true;
  double worst_final = 0.0;
  std::string first_failure;
  for (double theta : {0.5, 1.0, 2.0}) {
    for (const auto& [obs, name] : observables) {
      const LimitSweepResult sweep = limit_sweep(obs, theta, nbar_list);
      worst_final = std::max(worst_final, sweep.errors.back());
      const bool ok =
          sweep.monotone_after_first && sweep.errors.back() < 0.08;
      if (!ok && first_failure.empty()) {
        first_failure = std::string(name) + " at theta " + fmt(theta) +
                        " (final error " + fmt(sweep.errors.back()) + ")";
      }
      pass = pass && ok;
    }
  }
  report(6, "classical limit: 5 observables, theta {0.5,1,2}, nbar 4..256",
         pass,
         pass ? "all monotone after the first point; worst final error " +
                    fmt(worst_final) + " (gate 0.08)"
              : "first failure: " + first_failure);
}

// --- 7: Fourier oracles ----------------------------------------------------

void criterion_7() {
  bool within_bounds = true;
  double worst_margin = 0.0;  // error / bound, must stay <= 1
  for (double theta : {0.3, 1.0, 2.0, 3.0}) {
    for (int s_max : {51, 201, 1001}) {
      const double e1 =
          std::abs(fourier_abs_theta(theta, s_max) - std::abs(theta));
      const double r1 = e1 / fourier_abs_theta_tail_bound(s_max);
      const double e2 = std::abs(fourier_abs_sin(theta, s_max) -
                                 std::abs(std::sin(theta)));
      const double r2 = e2 / fourier_abs_sin_tail_bound(s_max);
      worst_margin = std::max({worst_margin, r1, r2});
      within_bounds = within_bounds && r1 <= 1.0 && r2 <= 1.0;
    }
  }
  const double spot_theta = std::abs(fourier_abs_theta(kPi / 2.0, 201) -
                                     kPi / 2.0);
  const double spot_sin = std::abs(fourier_abs_sin(kPi / 2.0, 4000) - 1.0);
  const bool spot_ok =
      spot_theta < 1e-12 && spot_sin < fourier_abs_sin_tail_bound(4000);
  report(7, "Fourier oracles within analytic tail bounds + spot values",
         within_bounds && spot_ok,
         "worst error/bound " + fmt(worst_margin) + ", |sum(pi/2) - pi/2| = " +
             fmt(spot_theta) + ", |sin-series(pi/2) - 1| = " + fmt(spot_sin));
}

// --- 8: restricted-space commutator ---------------------------------------

void criterion_8() {
  std::mt19937 rng(20260814);
  double worst_identity = 0.0;
  double worst_projection = 0.0;
  bool uncertainty_ok = true;
  const int samples = 1000;
  for (int trial = 0; trial < samples; ++trial) {
    const MomentumSuperposition state = random_superposition(rng);
    worst_identity = std::max(
        worst_identity,
        std::abs(commutator_expectation(state) - commutator_prediction(state)));
    const MomentumSuperposition projected = subspace_C_projection(state);
    worst_projection = std::max(
        worst_projection,
        std::abs(commutator_expectation(projected) - Complex(0.0, 1.0)));
    uncertainty_ok = uncertainty_ok && uncertainty_check(state).satisfied;
  }
  report(8, "box commutator identity, projection, uncertainty (1000 states)",
         worst_identity < 1e-10 && worst_projection < 1e-10 && uncertainty_ok,
         "identity deviation " + fmt(worst_identity) +
             ", post-projection deviation " + fmt(worst_projection) +
             " (gates 1e-10), uncertainty " +
             (uncertainty_ok ? "satisfied" : "VIOLATED"));
}

// --- 9: finite-dimensional limit -------------------------------------------

void criterion_9() {
  double spectrum_dev = 0.0;
  for (int m : {2, 8, 64, 256}) {
    FiniteDimConfig cfg;
    cfg.m = m;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(finite_theta_matrix(cfg));
    if (solver.info() != Eigen::Success) {
      report(9, "finite-dimensional angle matrix", false,
             "eigenvalue solve failed at m = " + std::to_string(m));
      return;
    }
    for (int l = -m / 2; l <= m / 2; ++l) {
      spectrum_dev = std::max(
          spectrum_dev,
          std::abs(solver.eigenvalues()(l + m / 2) - 2.0 * kPi * l / (m + 1)));
    }
  }

  const std::vector<int> m_list = {64, 128, 256, 512, 1024};
  const std::vector<double> errors = finite_to_rotator_limit(0, 1, m_list);
  bool ratios_ok = true;
  double worst_ratio_gap = 0.0;
  for (size_t i = 0; i + 1 < errors.size(); ++i) {
    const double ratio = errors[i + 1] / errors[i];
    ratios_ok = ratios_ok && ratio >= 0.4 && ratio <= 0.6;
    worst_ratio_gap = std::max(worst_ratio_gap, std::abs(ratio - 0.5));
  }
  report(9, "finite angle matrix: uniform spectrum + 1/m element limit",
         spectrum_dev < 1e-10 && ratios_ok,
         "spectrum deviation " + fmt(spectrum_dev) +
             " (gate 1e-10), doubling ratios within 0.5 +- " +
             fmt(worst_ratio_gap) + " (gate [0.4, 0.6])");
}

// --- 10: classical oscillator ----------------------------------------------

void criterion_10() {
  const OscillatorParams params{1.3, 2.1};

  std::vector<double> t_grid;
  for (int k = 0; k <= 1000; ++k) t_grid.push_back(0.01 * k);
  const double trajectory_dev =
      trajectory_phase_check(params, 1.7, 0.6, t_grid);

  std::mt19937 rng(55555);
  std::normal_distribution<double> gauss(0.0, 2.0);
  bool branch_exact = true;
  for (int trial = 0; trial < 500; ++trial) {
    const double q = gauss(rng);
    const double p = gauss(rng);
    if (q == 0.0 && p == 0.0) continue;
    const PhasePoint a = inverse_transform(q, p, params);
    const PhasePoint b = inverse_transform(-q, -p, params);
    branch_exact = branch_exact && a.Q == b.Q && a.P == b.P;
  }

  const double energy = 3.7;
  const double j_plus = action_integral(params, energy, +1, 256);
  const double j_minus = action_integral(params, energy, -1, 256);
  const double action_dev =
      std::max(std::abs(j_plus - energy / params.omega),
               std::abs(j_minus + energy / params.omega));

  report(10, "oscillator: trajectory phase, branch invariance, action",
         trajectory_dev < 1e-9 && branch_exact && action_dev < 1e-6,
         "trajectory deviation " + fmt(trajectory_dev) +
             " (gate 1e-9), branch invariance " +
             (branch_exact ? "bitwise" : "BROKEN") + ", action deviation " +
             fmt(action_dev) + " (gate 1e-6, opposite signs)");
}

// --- 11: number-phase counterexample ----------------------------------------

void criterion_11() {
  double worst = 0.0;
  for (int n : {1, 2, 3}) {
    const double plus = npcr_counterexample(n, 0.2, 0.5, 256, -1);
    const double minus = npcr_counterexample(n, 0.2, 0.5, 256, +1);
    worst = std::max({worst, std::abs(plus - n), std::abs(minus + n)});
  }
  report(11, "window states give number averages +n and -n (n = 1, 2, 3)",
         worst < 1e-8, "worst deviation " + fmt(worst) + " (gate 1e-8)");
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  if (g_failures == 0) {
    std::printf("all 11 acceptance checks passed\n");
    return 0;
  }
  std::printf("%d acceptance check(s) FAILED\n", g_failures);
  return 1;
}
