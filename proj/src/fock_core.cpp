#include "absphase/fock_core.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace absphase {

namespace {

constexpr double kPi = std::numbers::pi;

std::atomic<Exec>& default_exec_slot() {
  static std::atomic<Exec> slot{Exec::Parallel};
  return slot;
}

double squared_norm(const std::vector<Complex>& v) {
  double s = 0.0;
  for (const Complex& c : v) s += std::norm(c);
  return s;
}

// Legendre polynomial value and derivative at x, by upward recurrence.
void legendre_eval(int degree, double x, double* value, double* derivative) {
  double p_prev = 1.0;  // P_0
  double p = x;         // P_1
  for (int k = 1; k < degree; ++k) {
    const double p_next = ((2.0 * k + 1.0) * x * p - k * p_prev) / (k + 1.0);
    p_prev = p;
    p = p_next;
  }
  *value = p;
  *derivative = degree * (x * p - p_prev) / (x * x - 1.0);
}

}  // namespace

Exec default_exec() { return default_exec_slot().load(); }

void set_default_exec(Exec exec) { default_exec_slot().store(exec); }

void set_thread_count(int threads) {
#ifdef _OPENMP
  omp_set_num_threads(threads < 1 ? 1 : threads);
#else
  (void)threads;
#endif
}

void check_level_cutoff(int n_max) {
  if (n_max < 1 || n_max > kMaxLevels) {
    std::ostringstream msg;
    msg << "level cutoff n_max = " << n_max << " outside [1, " << kMaxLevels
        << "]";
    throw std::invalid_argument(msg.str());
  }
}

TruncatedOperator make_zero_operator(int n_max) {
  check_level_cutoff(n_max);
  TruncatedOperator op;
  op.n_max = n_max;
  op.entries = Matrix::Zero(n_max + 1, n_max + 1);
  op.hermitian = true;
  return op;
}

TruncatedOperator make_identity_operator(int n_max) {
  TruncatedOperator op = make_zero_operator(n_max);
  op.entries.setIdentity();
  return op;
}

bool matrix_is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i; j < m.cols(); ++j) {
      if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) return false;
    }
  }
  return true;
}

PhaseGrid make_phase_grid(int points) {
  if (points < 2) {
    throw std::invalid_argument("phase grid needs at least 2 points, got " +
                                std::to_string(points));
  }

  // Gauss-Legendre nodes on [-1, 1] by Newton iteration, then affine map to
  // (0, pi).  The initial guesses run from the largest root downward, so the
  // mapped nodes are filled back-to-front to come out ascending.
  PhaseGrid grid;
  grid.nodes.resize(points);
  grid.weights.resize(points);
  for (int i = 0; i < points; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (points + 0.5));
    double value = 0.0;
    double derivative = 1.0;
    for (int iter = 0; iter < 100; ++iter) {
      legendre_eval(points, x, &value, &derivative);
      const double step = value / derivative;
      x -= step;
      if (std::abs(step) <= 1e-15) break;
    }
    legendre_eval(points, x, &value, &derivative);
    const int slot = points - 1 - i;
    grid.nodes[slot] = (x + 1.0) * (kPi / 2.0);
    grid.weights[slot] =
        kPi / ((1.0 - x * x) * derivative * derivative);
  }

  for (int k = 0; k < points; ++k) {
    if (!(grid.nodes[k] > 0.0 && grid.nodes[k] < kPi) ||
        (k > 0 && !(grid.nodes[k] > grid.nodes[k - 1]))) {
      throw std::runtime_error("phase grid construction failed to converge");
    }
  }
  return grid;
}

CoherentAmplitude make_coherent_amplitude(double nbar, double theta) {
  if (!(nbar >= 0.0)) {
    throw std::invalid_argument("coherent amplitude needs nbar >= 0, got " +
                                std::to_string(nbar));
  }
  // Wrap theta into (-pi, pi].
  double t = std::fmod(theta, 2.0 * kPi);
  if (t <= -kPi) t += 2.0 * kPi;
  if (t > kPi) t -= 2.0 * kPi;
  return CoherentAmplitude{nbar, t};
}

int coherent_cutoff(double nbar) {
  if (!(nbar >= 0.0)) {
    throw std::invalid_argument("coherent cutoff needs nbar >= 0");
  }
  return static_cast<int>(std::ceil(nbar + 10.0 * std::sqrt(nbar) + 50.0));
}

std::vector<double> phase_state_coeffs(double phi, int n_max) {
  if (!(phi > 0.0 && phi < kPi)) {
    throw std::domain_error(
        "phase angle must lie strictly inside (0, pi), got " +
        std::to_string(phi));
  }
  if (n_max < 0) {
    throw std::invalid_argument("phase_state_coeffs needs n_max >= 0");
  }
  std::vector<double> c(static_cast<size_t>(n_max) + 1);
  c[0] = 1.0 / std::sqrt(kPi);
  const double amp = std::sqrt(2.0 / kPi);
  for (int n = 1; n <= n_max; ++n) {
    c[n] = amp * std::cos(n * phi);
  }
  return c;
}

std::vector<Complex> coherent_coeffs(const CoherentAmplitude& amp, int n_max) {
  if (!(amp.nbar >= 0.0)) {
    throw std::invalid_argument("coherent_coeffs needs nbar >= 0");
  }
  if (n_max < 1) {
    throw std::invalid_argument("coherent_coeffs needs n_max >= 1");
  }
  std::vector<Complex> c(static_cast<size_t>(n_max) + 1, Complex(0.0, 0.0));
  if (amp.nbar == 0.0) {
    c[0] = 1.0;
    return c;
  }
  const double log_nbar = std::log(amp.nbar);
  for (int n = 0; n <= n_max; ++n) {
    // log |c_n| = -nbar/2 + (n/2) log(nbar) - log(n!)/2, via log-gamma.
    const double log_mag =
        -0.5 * amp.nbar + 0.5 * n * log_nbar - 0.5 * std::lgamma(n + 1.0);
    c[n] = std::polar(std::exp(log_mag), n * amp.theta);
  }
  const double deficit = 1.0 - squared_norm(c);
  if (deficit >= 1e-10) {
    std::ostringstream msg;
    msg << "coherent-state cutoff n_max = " << n_max
        << " leaves norm deficit " << deficit << " (>= 1e-10) at nbar = "
        << amp.nbar << "; the default cutoff rule suggests n_max = "
        << coherent_cutoff(amp.nbar);
    throw CutoffInsufficientError(msg.str(), deficit);
  }
  return c;
}

namespace {

// Shared inner kernel: row of partial sums t_i = sum_j M(i,j) v_j with j
// ascending.  Used verbatim by the serial and parallel expectation paths so
// both produce identical floating-point results.
Complex expectation_row(const Matrix& m, const std::vector<Complex>& v,
                        int i) {
  const int dim = static_cast<int>(v.size());
  Complex acc(0.0, 0.0);
  for (int j = 0; j < dim; ++j) acc += m(i, j) * v[j];
  return acc;
}

}  // namespace

Complex expectation(const TruncatedOperator& op,
                    const std::vector<Complex>& state, bool require_unit_norm,
                    Exec exec) {
  const int dim = op.dim();
  if (static_cast<int>(state.size()) != dim) {
    std::ostringstream msg;
    msg << "state length " << state.size() << " does not match operator size "
        << dim;
    throw std::invalid_argument(msg.str());
  }
  if (require_unit_norm) {
    const double norm2 = squared_norm(state);
    if (std::abs(norm2 - 1.0) > 1e-10) {
      std::ostringstream msg;
      msg << "state norm^2 = " << norm2
          << " deviates from 1 by more than 1e-10 (pass "
             "require_unit_norm=false to evaluate anyway)";
      throw std::invalid_argument(msg.str());
    }
  }

  std::vector<Complex> row_partials(static_cast<size_t>(dim));
  if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int i = 0; i < dim; ++i) {
      row_partials[i] = expectation_row(op.entries, state, i);
    }
  } else {
    for (int i = 0; i < dim; ++i) {
      row_partials[i] = expectation_row(op.entries, state, i);
    }
  }

  // Final contraction is always serial and ascending, independent of exec.
  Complex result(0.0, 0.0);
  for (int i = 0; i < dim; ++i) {
    result += std::conj(state[i]) * row_partials[i];
  }
  return result;
}

double expectation_real(const TruncatedOperator& op,
                        const std::vector<Complex>& state,
                        bool require_unit_norm, Exec exec) {
  const Complex value = expectation(op, state, require_unit_norm, exec);
  if (op.hermitian && std::abs(value.imag()) >= 1e-10) {
    std::ostringstream msg;
    msg << "expectation of an operator flagged Hermitian has imaginary part "
        << value.imag() << " (>= 1e-10); the flag is inconsistent";
    throw std::runtime_error(msg.str());
  }
  return value.real();
}

namespace {

void check_same_cutoff(const TruncatedOperator& a, const TruncatedOperator& b,
                       const char* what) {
  if (a.n_max != b.n_max) {
    std::ostringstream msg;
    msg << what << " needs equal cutoffs, got n_max = " << a.n_max << " and "
        << b.n_max;
    throw std::invalid_argument(msg.str());
  }
}

// Shared inner kernel for the dense product: one output element, summation
// index ascending.
Complex matmul_element(const Matrix& a, const Matrix& b, int i, int j) {
  const int dim = static_cast<int>(a.rows());
  Complex acc(0.0, 0.0);
  for (int k = 0; k < dim; ++k) acc += a(i, k) * b(k, j);
  return acc;
}

}  // namespace

TruncatedOperator matmul(const TruncatedOperator& a, const TruncatedOperator& b,
                         Exec exec) {
  check_same_cutoff(a, b, "matmul");
  TruncatedOperator out = make_zero_operator(a.n_max);
  const int dim = a.dim();
  if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) {
        out.entries(i, j) = matmul_element(a.entries, b.entries, i, j);
      }
    }
  } else {
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) {
        out.entries(i, j) = matmul_element(a.entries, b.entries, i, j);
      }
    }
  }
  out.hermitian = matrix_is_hermitian(out.entries);
  return out;
}

TruncatedOperator add(const TruncatedOperator& a, const TruncatedOperator& b) {
  check_same_cutoff(a, b, "add");
  TruncatedOperator out = make_zero_operator(a.n_max);
  out.entries = a.entries + b.entries;
  out.hermitian = matrix_is_hermitian(out.entries);
  return out;
}

TruncatedOperator scale(const TruncatedOperator& a, Complex factor) {
  TruncatedOperator out = make_zero_operator(a.n_max);
  out.entries = a.entries * factor;
  out.hermitian = matrix_is_hermitian(out.entries);
  return out;
}

}  // namespace absphase
