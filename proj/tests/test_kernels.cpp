// Bitwise-equality tests for the dual-path kernels: the parallel variants
// must reproduce the serial reference exactly, for any thread count, because
// they distribute only independent output elements and keep every summation
// in the same order.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "absphase/classical_limit.hpp"
#include "absphase/fock_core.hpp"
#include "absphase/phase_operators.hpp"

using namespace absphase;

namespace {

// Deterministic dense random operator with complex Gaussian entries.
TruncatedOperator random_operator(int n_max, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  TruncatedOperator op = make_zero_operator(n_max);
  for (int i = 0; i <= n_max; ++i) {
    for (int j = 0; j <= n_max; ++j) {
      op.entries(i, j) = Complex(gauss(rng), gauss(rng));
    }
  }
  op.hermitian = matrix_is_hermitian(op.entries);
  return op;
}

std::vector<Complex> random_unit_state(int n_max, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Complex> state(static_cast<size_t>(n_max) + 1);
  double norm2 = 0.0;
  for (Complex& c : state) {
    c = Complex(gauss(rng), gauss(rng));
    norm2 += std::norm(c);
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (Complex& c : state) c *= inv;
  return state;
}

bool bitwise_equal(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (a(i, j).real() != b(i, j).real()) return false;
      if (a(i, j).imag() != b(i, j).imag()) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("default execution variant is settable") {
  const Exec original = default_exec();
  set_default_exec(Exec::Serial);
  CHECK(default_exec() == Exec::Serial);
  set_default_exec(Exec::Parallel);
  CHECK(default_exec() == Exec::Parallel);
  set_default_exec(original);
}

TEST_CASE("operator assembly is bitwise identical across variants") {
  const int n_max = 96;
  const PhaseGrid grid = make_phase_grid(512);
  const auto f = [](double phi) { return phi * std::sin(phi); };
  const TruncatedOperator serial =
      build_operator_from_phase_function(f, grid, n_max, Exec::Serial);
  for (int threads : {1, 3, 8}) {
    set_thread_count(threads);
    const TruncatedOperator parallel =
        build_operator_from_phase_function(f, grid, n_max, Exec::Parallel);
    CHECK(bitwise_equal(serial.entries, parallel.entries));
  }
}

TEST_CASE("matmul is bitwise identical across variants") {
  const int n_max = 80;
  const TruncatedOperator a = random_operator(n_max, 11);
  const TruncatedOperator b = random_operator(n_max, 22);
  const TruncatedOperator serial = matmul(a, b, Exec::Serial);
  for (int threads : {1, 3, 8}) {
    set_thread_count(threads);
    const TruncatedOperator parallel = matmul(a, b, Exec::Parallel);
    CHECK(bitwise_equal(serial.entries, parallel.entries));
  }
}

TEST_CASE("expectation is bitwise identical across variants") {
  const int n_max = 200;
  const TruncatedOperator op = random_operator(n_max, 33);
  const std::vector<Complex> state = random_unit_state(n_max, 44);
  const Complex serial = expectation(op, state, true, Exec::Serial);
  for (int threads : {1, 3, 8}) {
    set_thread_count(threads);
    const Complex parallel = expectation(op, state, true, Exec::Parallel);
    CHECK(serial.real() == parallel.real());
    CHECK(serial.imag() == parallel.imag());
  }
}

TEST_CASE("identity residuals are bitwise stable across variants") {
  const int n_max = 48;
  const double cos_serial = verify_cos_identity(n_max, Exec::Serial);
  const double sin2_serial = verify_sin2_identity(n_max, Exec::Serial);
  set_thread_count(4);
  CHECK(cos_serial == verify_cos_identity(n_max, Exec::Parallel));
  CHECK(sin2_serial == verify_sin2_identity(n_max, Exec::Parallel));
}

TEST_CASE("limit sweeps are bitwise stable across variants") {
  const std::vector<double> nbar_list = {2.0, 8.0};
  const LimitSweepResult serial =
      limit_sweep(PhaseObservable::CosPhi, 1.2, nbar_list, Exec::Serial);
  set_thread_count(6);
  const LimitSweepResult parallel =
      limit_sweep(PhaseObservable::CosPhi, 1.2, nbar_list, Exec::Parallel);
  REQUIRE(serial.values.size() == parallel.values.size());
  for (size_t i = 0; i < serial.values.size(); ++i) {
    CHECK(serial.values[i] == parallel.values[i]);
  }
}
