#include "absphase/classical_limit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "absphase/phase_operators.hpp"

namespace absphase {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

double coherent_expectation_exact(const TruncatedOperator& op,
                                  const CoherentAmplitude& amp, Exec exec) {
  const std::vector<Complex> state = coherent_coeffs(amp, op.n_max);
  // The truncated coherent vector's norm deficit is below 1e-10 by
  // construction (coherent_coeffs throws otherwise), so the unit-norm check
  // inside expectation() passes.
  return expectation_real(op, state, /*require_unit_norm=*/true, exec);
}

double phi_asymptotic_average(double theta, double nbar, int s_max) {
  if (!(nbar >= 1.0)) {
    throw std::invalid_argument(
        "the asymptotic average applies for nbar >= 1, got " +
        std::to_string(nbar));
  }
  if (s_max < 51) {
    throw std::invalid_argument("asymptotic truncation needs s_max >= 51");
  }
  double sum = 0.0;
  for (int s = 1; s <= s_max; s += 2) {
    sum += std::cos(s * theta) / (static_cast<double>(s) * s);
  }
  return kPi / 2.0 - (4.0 / kPi) * sum;
}

double fourier_abs_theta(double theta, int s_max) {
  if (s_max < 2) throw std::invalid_argument("fourier sums need s_max >= 2");
  if (std::abs(theta) > kPi) {
    throw std::invalid_argument("fourier_abs_theta needs |theta| <= pi");
  }
  double sum = 0.0;
  for (int s = 1; s <= s_max; s += 2) {
    sum += std::cos(s * theta) / (static_cast<double>(s) * s);
  }
  return kPi / 2.0 - (4.0 / kPi) * sum;
}

double fourier_abs_sin(double theta, int s_max) {
  if (s_max < 2) throw std::invalid_argument("fourier sums need s_max >= 2");
  if (std::abs(theta) > kPi) {
    throw std::invalid_argument("fourier_abs_sin needs |theta| <= pi");
  }
  double sum = 0.0;
  for (int s = 2; s <= s_max; s += 2) {
    sum += std::cos(s * theta) / (static_cast<double>(s) * s - 1.0);
  }
  return 2.0 / kPi - (4.0 / kPi) * sum;
}

double fourier_abs_theta_tail_bound(int s_max) {
  if (s_max < 2) throw std::invalid_argument("tail bound needs s_max >= 2");
  return 4.0 / (kPi * s_max);
}

double fourier_abs_sin_tail_bound(int s_max) {
  if (s_max < 2) throw std::invalid_argument("tail bound needs s_max >= 2");
  return 4.0 / (kPi * (s_max - 1.0));
}

double classical_target(PhaseObservable obs, double theta) {
  switch (obs) {
    case PhaseObservable::Phi:
      return std::abs(theta);
    case PhaseObservable::SinPhi:
      return std::abs(std::sin(theta));
    case PhaseObservable::CosPhi:
      return std::cos(theta);
    case PhaseObservable::Sin2Phi: {
      const double s = std::sin(theta);
      return s * s;
    }
    case PhaseObservable::Cos2Phi: {
      const double c = std::cos(theta);
      return c * c;
    }
  }
  throw std::invalid_argument("unknown phase observable");
}

TruncatedOperator build_phase_observable(PhaseObservable obs, int n_max,
                                         const PhaseGrid& grid, Exec exec) {
  switch (obs) {
    case PhaseObservable::Phi:
      return build_phi_analytic(n_max);
    case PhaseObservable::SinPhi:
      return build_operator_from_phase_function(
          [](double phi) { return std::sin(phi); }, grid, n_max, exec);
    case PhaseObservable::CosPhi:
      return build_operator_from_phase_function(
          [](double phi) { return std::cos(phi); }, grid, n_max, exec);
    case PhaseObservable::Sin2Phi:
      return build_operator_from_phase_function(
          [](double phi) {
            const double s = std::sin(phi);
            return s * s;
          },
          grid, n_max, exec);
    case PhaseObservable::Cos2Phi:
      return build_operator_from_phase_function(
          [](double phi) {
            const double c = std::cos(phi);
            return c * c;
          },
          grid, n_max, exec);
  }
  throw std::invalid_argument("unknown phase observable");
}

LimitSweepResult limit_sweep(PhaseObservable obs, double theta,
                             const std::vector<double>& nbar_list, Exec exec) {
  if (nbar_list.empty()) {
    throw std::invalid_argument("limit_sweep needs a non-empty nbar list");
  }
  if (!std::is_sorted(nbar_list.begin(), nbar_list.end())) {
    throw std::invalid_argument("limit_sweep needs an ascending nbar list");
  }

  LimitSweepResult result;
  result.theta = theta;
  result.target = classical_target(obs, theta);
  result.nbar_list = nbar_list;

  const int n_max = coherent_cutoff(nbar_list.back());
  const PhaseGrid grid = make_phase_grid(default_grid_points(n_max));
  const TruncatedOperator op = build_phase_observable(obs, n_max, grid, exec);

  for (double nbar : nbar_list) {
    const CoherentAmplitude amp = make_coherent_amplitude(nbar, theta);
    const double value = coherent_expectation_exact(op, amp, exec);
    result.values.push_back(value);
    result.errors.push_back(std::abs(value - result.target));
  }

  result.monotone_after_first = true;
  for (size_t i = 1; i + 1 < result.errors.size(); ++i) {
    if (result.errors[i + 1] > result.errors[i] + kSweepNoiseFloor) {
      result.monotone_after_first = false;
      break;
    }
  }
  return result;
}

}  // namespace absphase
