#include "absphase/phase_operators.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace absphase {

namespace {

constexpr double kPi = std::numbers::pi;

// Table of phase-state coefficients c_n(phi_k), one contiguous row per level
// n.  Filled serially so the quadrature kernels below share identical input
// bits regardless of execution variant.
std::vector<double> coefficient_table(const PhaseGrid& grid, int n_max) {
  const int points = grid.points();
  std::vector<double> table(static_cast<size_t>(n_max + 1) * points);
  const double c0 = 1.0 / std::sqrt(kPi);
  const double amp = std::sqrt(2.0 / kPi);
  for (int k = 0; k < points; ++k) table[k] = c0;
  for (int n = 1; n <= n_max; ++n) {
    double* row = table.data() + static_cast<size_t>(n) * points;
    for (int k = 0; k < points; ++k) row[k] = amp * std::cos(n * grid.nodes[k]);
  }
  return table;
}

// Shared inner kernel: one symmetric matrix element
// sum_k fw_k c_n(phi_k) c_m(phi_k) with k ascending.
double assemble_element(const double* row_n, const double* row_m,
                        const double* fw, int points) {
  double acc = 0.0;
  for (int k = 0; k < points; ++k) acc += fw[k] * row_n[k] * row_m[k];
  return acc;
}

}  // namespace

int default_grid_points(int n_max) {
  return n_max > 256 ? 4 * n_max : 1024;
}

TruncatedOperator build_number(int n_max) {
  TruncatedOperator op = make_zero_operator(n_max);
  for (int n = 0; n <= n_max; ++n) op.entries(n, n) = static_cast<double>(n);
  op.hermitian = true;
  return op;
}

TruncatedOperator build_phi_analytic(int n_max) {
  TruncatedOperator op = make_zero_operator(n_max);
  for (int n = 0; n <= n_max; ++n) op.entries(n, n) = kPi / 2.0;
  const double two_over_pi = 2.0 / kPi;
  for (int n = 0; n <= n_max; ++n) {
    for (int m = n + 1; m <= n_max; ++m) {
      if ((n + m) % 2 == 0) continue;  // even n + m vanishes exactly
      double value;
      if (n == 0) {
        value = -2.0 * std::sqrt(2.0) / (kPi * m * m);
      } else {
        const double sum = static_cast<double>(n + m);
        const double diff = static_cast<double>(m - n);
        value = -two_over_pi * (1.0 / (sum * sum) + 1.0 / (diff * diff));
      }
      op.entries(n, m) = value;
      op.entries(m, n) = value;
    }
  }
  op.hermitian = true;
  return op;
}

TruncatedOperator build_operator_from_phase_function(
    const std::function<double(double)>& f, const PhaseGrid& grid, int n_max,
    Exec exec) {
  check_level_cutoff(n_max);
  const int points = grid.points();
  if (points < 2) {
    throw std::invalid_argument("phase grid is empty or degenerate");
  }

  const std::vector<double> table = coefficient_table(grid, n_max);
  std::vector<double> fw(static_cast<size_t>(points));
  for (int k = 0; k < points; ++k) fw[k] = grid.weights[k] * f(grid.nodes[k]);

  TruncatedOperator op = make_zero_operator(n_max);
  const int dim = n_max + 1;
  const double* base = table.data();
  const double* fwp = fw.data();

  if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
    for (int n = 0; n < dim; ++n) {
      const double* row_n = base + static_cast<size_t>(n) * points;
      for (int m = n; m < dim; ++m) {
        const double* row_m = base + static_cast<size_t>(m) * points;
        const double value = assemble_element(row_n, row_m, fwp, points);
        op.entries(n, m) = value;
        op.entries(m, n) = value;
      }
    }
  } else {
    for (int n = 0; n < dim; ++n) {
      const double* row_n = base + static_cast<size_t>(n) * points;
      for (int m = n; m < dim; ++m) {
        const double* row_m = base + static_cast<size_t>(m) * points;
        const double value = assemble_element(row_n, row_m, fwp, points);
        op.entries(n, m) = value;
        op.entries(m, n) = value;
      }
    }
  }

  op.hermitian = true;  // real f and real coefficients: symmetric real matrix
  if (points < 4 * n_max) {
    std::ostringstream note;
    note << "grid of " << points
         << " points may be insufficient for cosine bandwidth 2*n_max = "
         << 2 * n_max << " (recommended: >= " << 4 * n_max << " points)";
    op.accuracy_note = note.str();
  }
  return op;
}

LadderOperators build_ladder_and_trig(int n_max) {
  if (n_max < 2) {
    throw std::invalid_argument(
        "ladder/trig construction needs n_max >= 2, got " +
        std::to_string(n_max));
  }
  LadderOperators out;
  out.E = make_zero_operator(n_max);
  for (int n = 0; n < n_max; ++n) out.E.entries(n, n + 1) = 1.0;
  out.E.hermitian = false;

  out.E_dagger = make_zero_operator(n_max);
  out.E_dagger.entries = out.E.entries.adjoint();
  out.E_dagger.hermitian = false;

  out.C = scale(add(out.E, out.E_dagger), Complex(0.5, 0.0));
  TruncatedOperator diff = make_zero_operator(n_max);
  diff.entries = out.E.entries - out.E_dagger.entries;
  out.S = scale(diff, Complex(1.0, 0.0) / Complex(0.0, 2.0));
  return out;
}

double verify_cos_identity(int n_max, Exec exec) {
  if (n_max < 2) {
    throw std::invalid_argument("verify_cos_identity needs n_max >= 2");
  }
  const PhaseGrid grid = make_phase_grid(default_grid_points(n_max));
  const TruncatedOperator cos_phi = build_operator_from_phase_function(
      [](double phi) { return std::cos(phi); }, grid, n_max, exec);
  const LadderOperators ladder = build_ladder_and_trig(n_max);

  const double corner = 0.5 * (std::sqrt(2.0) - 1.0);
  double residual = 0.0;
  for (int n = 0; n <= n_max - 1; ++n) {
    for (int m = 0; m <= n_max - 1; ++m) {
      Complex expected = ladder.C.entries(n, m);
      if ((n == 0 && m == 1) || (n == 1 && m == 0)) expected += corner;
      residual = std::max(residual,
                          std::abs(cos_phi.entries(n, m) - expected));
    }
  }
  return residual;
}

double verify_sin2_identity(int n_max, Exec exec) {
  if (n_max < 3) {
    throw std::invalid_argument("verify_sin2_identity needs n_max >= 3");
  }
  const PhaseGrid grid = make_phase_grid(default_grid_points(n_max));
  const TruncatedOperator sin2_phi = build_operator_from_phase_function(
      [](double phi) { const double s = std::sin(phi); return s * s; }, grid,
      n_max, exec);
  const LadderOperators ladder = build_ladder_and_trig(n_max);
  const TruncatedOperator s_squared = matmul(ladder.S, ladder.S, exec);

  const double corner = 0.25 * (1.0 - std::sqrt(2.0));
  double residual = 0.0;
  for (int n = 0; n <= n_max - 2; ++n) {
    for (int m = 0; m <= n_max - 2; ++m) {
      Complex expected = s_squared.entries(n, m);
      if ((n == 0 && m == 2) || (n == 2 && m == 0)) expected += corner;
      if (n == 0 && m == 0) expected += 0.25;
      if (n == 1 && m == 1) expected -= 0.25;
      residual = std::max(residual,
                          std::abs(sin2_phi.entries(n, m) - expected));
    }
  }
  return residual;
}

TruncatedOperator build_sin_phi(int n_max, const PhaseGrid& grid, Exec exec) {
  return build_operator_from_phase_function(
      [](double phi) { return std::sin(phi); }, grid, n_max, exec);
}

double sin_phi_diagonal(int n) {
  if (n < 0) throw std::invalid_argument("sin_phi_diagonal needs n >= 0");
  if (n == 0) return 2.0 / kPi;
  const double nn = static_cast<double>(n) * n;
  return (2.0 + 2.0 / (1.0 - 4.0 * nn)) / kPi;
}

double number_state_density(int n, double phi) {
  if (n < 0) throw std::invalid_argument("number_state_density needs n >= 0");
  if (phi < 0.0 || phi > kPi) {
    throw std::domain_error("number_state_density is defined on [0, pi]");
  }
  if (n == 0) return 1.0 / kPi;
  return (1.0 + std::cos(2.0 * n * phi)) / kPi;
}

PhaseDistribution number_state_distribution(int n, const PhaseGrid& grid) {
  if (n < 0) {
    throw std::invalid_argument("number_state_distribution needs n >= 0");
  }
  PhaseDistribution dist;
  dist.n = n;
  dist.grid = grid;
  dist.density.resize(grid.nodes.size());
  for (size_t k = 0; k < grid.nodes.size(); ++k) {
    dist.density[k] = number_state_density(n, grid.nodes[k]);
  }
  return dist;
}

double number_state_moment(int n, int m) {
  return number_state_moment(n, m, make_phase_grid(1024));
}

double number_state_moment(int n, int m, const PhaseGrid& grid) {
  if (n < 0 || m < 0) {
    throw std::invalid_argument("number_state_moment needs n >= 0 and m >= 0");
  }
  double acc = 0.0;
  for (size_t k = 0; k < grid.nodes.size(); ++k) {
    acc += grid.weights[k] * std::pow(grid.nodes[k], m) *
           number_state_density(n, grid.nodes[k]);
  }
  return acc;
}

TruncatedOperator time_operator(const TruncatedOperator& phi, double omega) {
  if (!(omega > 0.0)) {
    throw std::invalid_argument("time_operator needs omega > 0, got " +
                                std::to_string(omega));
  }
  return scale(phi, Complex(1.0 / omega, 0.0));
}

}  // namespace absphase
