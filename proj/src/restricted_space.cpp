#include "absphase/restricted_space.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

namespace absphase {

namespace {

constexpr double kPi = std::numbers::pi;

double parity_sign(int k) { return (k % 2 == 0) ? 1.0 : -1.0; }

// Closed-form x matrix element <p_n| x |p_n'> for n != n'.
Complex x_element(int n, int n_prime, const BoxConfig& box) {
  const int d = n - n_prime;
  return Complex(0.0, -1.0) * box.L * parity_sign(d) / (2.0 * kPi * d);
}

// Closed-form x^2 matrix element <p_n| x^2 |p_n'>.
double x2_element(int n, int n_prime, const BoxConfig& box) {
  if (n == n_prime) return box.L * box.L / 12.0;
  const int d = n - n_prime;
  return parity_sign(d) * box.L * box.L /
         (2.0 * kPi * kPi * static_cast<double>(d) * d);
}

double momentum_eigenvalue(int n, const BoxConfig& box) {
  return 2.0 * kPi * box.hbar * n / box.L;
}

}  // namespace

void check_superposition(const MomentumSuperposition& state) {
  if (state.support.empty()) {
    throw std::invalid_argument("momentum superposition has empty support");
  }
  if (state.support.size() != state.coeffs.size()) {
    throw std::invalid_argument(
        "momentum superposition support and coefficient counts differ");
  }
  if (!(state.box.L > 0.0) || !(state.box.hbar > 0.0)) {
    throw std::invalid_argument("box needs L > 0 and hbar > 0");
  }
  std::set<int> seen(state.support.begin(), state.support.end());
  if (seen.size() != state.support.size()) {
    throw std::invalid_argument(
        "momentum superposition support indices must be distinct");
  }
  double norm2 = 0.0;
  for (const Complex& c : state.coeffs) norm2 += std::norm(c);
  if (std::abs(norm2 - 1.0) > 1e-12) {
    std::ostringstream msg;
    msg << "momentum superposition norm^2 = " << norm2
        << " deviates from 1 by more than 1e-12";
    throw std::invalid_argument(msg.str());
  }
}

Matrix rotator_angle_matrix(int K) {
  if (K < 1) {
    throw std::invalid_argument("rotator_angle_matrix needs index range >= 1");
  }
  const int dim = 2 * K + 1;
  Matrix theta = Matrix::Zero(dim, dim);
  for (int a = 0; a < dim; ++a) {
    for (int b = 0; b < dim; ++b) {
      if (a == b) continue;
      const int n = a - K;
      const int n_prime = b - K;
      theta(a, b) = Complex(0.0, 1.0) * parity_sign(n - n_prime) /
                    static_cast<double>(n_prime - n);
    }
  }
  return theta;
}

Complex commutator_expectation(const MomentumSuperposition& state) {
  check_superposition(state);
  const size_t terms = state.support.size();
  Complex acc(0.0, 0.0);
  for (size_t i = 0; i < terms; ++i) {
    for (size_t j = 0; j < terms; ++j) {
      const int n = state.support[i];
      const int n_prime = state.support[j];
      if (n == n_prime) continue;  // x is off-diagonal only
      const double p_diff = momentum_eigenvalue(n, state.box) -
                            momentum_eigenvalue(n_prime, state.box);
      acc += std::conj(state.coeffs[i]) * state.coeffs[j] * p_diff *
             x_element(n, n_prime, state.box);
    }
  }
  return acc;
}

Complex alternating_sum(const MomentumSuperposition& state) {
  Complex acc(0.0, 0.0);
  for (size_t i = 0; i < state.support.size(); ++i) {
    acc += parity_sign(state.support[i]) * state.coeffs[i];
  }
  return acc;
}

Complex commutator_prediction(const MomentumSuperposition& state) {
  check_superposition(state);
  const double weight = std::norm(alternating_sum(state));
  return Complex(0.0, state.box.hbar * (1.0 - weight));
}

UncertaintyReport uncertainty_check(const MomentumSuperposition& state) {
  check_superposition(state);
  const size_t terms = state.support.size();

  double mean_x = 0.0;
  double mean_x2 = 0.0;
  for (size_t i = 0; i < terms; ++i) {
    for (size_t j = 0; j < terms; ++j) {
      const int n = state.support[i];
      const int n_prime = state.support[j];
      const Complex weight = std::conj(state.coeffs[i]) * state.coeffs[j];
      if (n != n_prime) {
        mean_x += (weight * x_element(n, n_prime, state.box)).real();
      }
      mean_x2 += (weight * x2_element(n, n_prime, state.box)).real();
    }
  }

  double mean_p = 0.0;
  double mean_p2 = 0.0;
  for (size_t i = 0; i < terms; ++i) {
    const double p = momentum_eigenvalue(state.support[i], state.box);
    const double prob = std::norm(state.coeffs[i]);
    mean_p += prob * p;
    mean_p2 += prob * p * p;
  }

  UncertaintyReport report;
  report.dx = std::sqrt(std::max(mean_x2 - mean_x * mean_x, 0.0));
  report.dp = std::sqrt(std::max(mean_p2 - mean_p * mean_p, 0.0));
  report.bound =
      0.5 * state.box.hbar * std::abs(1.0 - std::norm(alternating_sum(state)));
  report.satisfied = report.dx * report.dp >= report.bound - 1e-12;
  return report;
}

MomentumSuperposition subspace_C_projection(const MomentumSuperposition& state) {
  check_superposition(state);
  const size_t terms = state.support.size();

  // The constraint sum_n (-1)^n psi_n = 0 is <v, psi> = 0 with the real
  // vector v_n = (-1)^n on the support; project orthogonally and
  // renormalize.
  const Complex overlap = alternating_sum(state);
  MomentumSuperposition projected = state;
  for (size_t i = 0; i < terms; ++i) {
    projected.coeffs[i] -=
        overlap * parity_sign(state.support[i]) / static_cast<double>(terms);
  }
  double norm2 = 0.0;
  for (const Complex& c : projected.coeffs) norm2 += std::norm(c);
  if (norm2 < 1e-24) {
    throw DegenerateProjectionError(
        "projection onto the vanishing-alternating-sum subspace annihilates "
        "the state");
  }
  const double inv_norm = 1.0 / std::sqrt(norm2);
  for (Complex& c : projected.coeffs) c *= inv_norm;
  return projected;
}

double npcr_counterexample(int n, double phi0, double delta, int grid_points,
                           int exponent_sign) {
  if (n < 0) throw std::invalid_argument("npcr_counterexample needs n >= 0");
  if (!(delta > 0.0)) {
    throw std::invalid_argument("npcr_counterexample needs window width > 0");
  }
  if (grid_points < 2) {
    throw std::invalid_argument("npcr_counterexample needs grid_points >= 2");
  }
  if (exponent_sign != 1 && exponent_sign != -1) {
    throw std::invalid_argument("exponent_sign must be +1 or -1");
  }

  const double amplitude = 1.0 / std::sqrt(delta);
  const auto psi = [&](double phi) {
    return std::polar(amplitude, exponent_sign * n * phi);
  };
  // Five-point central difference; the step balances truncation against
  // rounding far below the 1e-8 scale of interest.
  const double h = 1e-5;
  const auto dpsi = [&](double phi) {
    return (-psi(phi + 2.0 * h) + 8.0 * psi(phi + h) - 8.0 * psi(phi - h) +
            psi(phi - 2.0 * h)) /
           (12.0 * h);
  };

  // Gauss-Legendre rule on (0, pi) rescaled onto (phi0, phi0 + delta).
  const PhaseGrid base = make_phase_grid(grid_points);
  Complex acc(0.0, 0.0);
  for (int k = 0; k < base.points(); ++k) {
    const double phi = phi0 + base.nodes[k] * (delta / kPi);
    const double w = base.weights[k] * (delta / kPi);
    acc += w * std::conj(psi(phi)) * Complex(0.0, 1.0) * dpsi(phi);
  }
  return acc.real();
}

Matrix finite_theta_matrix(const FiniteDimConfig& cfg) {
  if (cfg.m < 2 || cfg.m % 2 != 0) {
    throw std::invalid_argument(
        "finite_theta_matrix needs an even dimension parameter m >= 2, got " +
        std::to_string(cfg.m));
  }
  const int dim = cfg.m + 1;
  const double scale = dim / (2.0 * kPi);
  Matrix theta = Matrix::Zero(dim, dim);
  for (int a = 0; a < dim; ++a) {
    for (int b = 0; b < dim; ++b) {
      if (a == b) continue;
      const int diff = b - a;  // column index minus row index
      const Complex denom =
          scale * (Complex(1.0, 0.0) -
                   std::exp(Complex(0.0, 2.0 * kPi * diff / dim)));
      theta(a, b) = parity_sign(diff) / denom;
    }
  }
  return theta;
}

std::vector<double> finite_to_rotator_limit(int n, int n_prime,
                                            const std::vector<int>& m_list) {
  if (n == n_prime) {
    throw std::invalid_argument("finite_to_rotator_limit needs n != n'");
  }
  if (m_list.empty() || !std::is_sorted(m_list.begin(), m_list.end())) {
    throw std::invalid_argument(
        "finite_to_rotator_limit needs an ascending, non-empty m list");
  }
  const int diff = n_prime - n;
  const Complex target =
      Complex(0.0, 1.0) * parity_sign(diff) / static_cast<double>(diff);

  std::vector<double> errors;
  errors.reserve(m_list.size());
  for (int m : m_list) {
    if (m < 2 * std::abs(diff) + 2 || m % 2 != 0) {
      std::ostringstream msg;
      msg << "m = " << m << " must be even and >= " << 2 * std::abs(diff) + 2
          << " for the (" << n << ", " << n_prime << ") element";
      throw std::invalid_argument(msg.str());
    }
    const int dim = m + 1;
    const Complex denom =
        (dim / (2.0 * kPi)) *
        (Complex(1.0, 0.0) - std::exp(Complex(0.0, 2.0 * kPi * diff / dim)));
    const Complex element = parity_sign(diff) / denom;
    errors.push_back(std::abs(element - target));
  }
  return errors;
}

MomentumSuperposition random_superposition(std::mt19937& rng, int min_terms,
                                           int max_terms, int index_range) {
  if (min_terms < 1 || max_terms < min_terms) {
    throw std::invalid_argument("random_superposition needs a valid term range");
  }
  if (2 * index_range + 1 < max_terms) {
    throw std::invalid_argument(
        "index range too small for the requested support size");
  }
  std::uniform_int_distribution<int> term_count(min_terms, max_terms);
  std::uniform_int_distribution<int> index_pick(-index_range, index_range);
  std::normal_distribution<double> gauss(0.0, 1.0);

  const int terms = term_count(rng);
  std::set<int> indices;
  while (static_cast<int>(indices.size()) < terms) {
    indices.insert(index_pick(rng));
  }

  MomentumSuperposition state;
  state.support.assign(indices.begin(), indices.end());
  state.coeffs.resize(state.support.size());
  double norm2 = 0.0;
  for (Complex& c : state.coeffs) {
    c = Complex(gauss(rng), gauss(rng));
    norm2 += std::norm(c);
  }
  const double inv_norm = 1.0 / std::sqrt(norm2);
  for (Complex& c : state.coeffs) c *= inv_norm;
  return state;
}

}  // namespace absphase
