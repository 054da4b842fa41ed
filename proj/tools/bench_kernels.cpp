// Timing harness for the dual-path kernels: operator assembly by quadrature,
// the dense product, and expectation values.  Reports serial vs parallel
// wall time and verifies on the way that both paths agree bitwise (the
// design invariant that makes the parallel path safe to use by default).
//
// Usage: bench_kernels [n_max] [grid_points] [repeats]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "absphase/fock_core.hpp"
#include "absphase/phase_operators.hpp"

using namespace absphase;

namespace {

double now_seconds() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

bool bitwise_equal(const Matrix& a, const Matrix& b) {
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (a(i, j).real() != b(i, j).real() ||
          a(i, j).imag() != b(i, j).imag()) {
        return false;
      }
    }
  }
  return true;
}

template <typename F>
double best_of(int repeats, F&& body) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const double t0 = now_seconds();
    body();
    best = std::min(best, now_seconds() - t0);
  }
  return best;
}

void report(const char* label, double serial, double parallel, bool same) {
  std::printf("%-22s serial %8.3f ms   parallel %8.3f ms   speedup %5.2fx   "
              "bitwise %s\n",
              label, serial * 1e3, parallel * 1e3, serial / parallel,
              same ? "OK" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const int n_max = argc > 1 ? std::atoi(argv[1]) : 256;
  const int grid_points = argc > 2 ? std::atoi(argv[2]) : 2048;
  const int repeats = argc > 3 ? std::atoi(argv[3]) : 3;
  if (n_max < 2 || grid_points < 2 || repeats < 1) {
    std::fprintf(stderr,
                 "usage: bench_kernels [n_max >= 2] [grid_points >= 2] "
                 "[repeats >= 1]\n");
    return 2;
  }

#ifdef _OPENMP
  std::printf("n_max %d, grid %d, repeats %d, OpenMP max threads %d\n\n",
              n_max, grid_points, repeats, omp_get_max_threads());
#else
  std::printf("n_max %d, grid %d, repeats %d, OpenMP unavailable "
              "(parallel path falls back to serial)\n\n",
              n_max, grid_points, repeats);
#endif

  bool all_bitwise = true;
  const PhaseGrid grid = make_phase_grid(grid_points);
  const auto f = [](double phi) { return phi; };

  // --- operator assembly ---------------------------------------------------
  TruncatedOperator assembled_serial;
  TruncatedOperator assembled_parallel;
  const double assemble_serial = best_of(repeats, [&] {
    assembled_serial =
        build_operator_from_phase_function(f, grid, n_max, Exec::Serial);
  });
  const double assemble_parallel = best_of(repeats, [&] {
    assembled_parallel =
        build_operator_from_phase_function(f, grid, n_max, Exec::Parallel);
  });
  const bool assemble_same =
      bitwise_equal(assembled_serial.entries, assembled_parallel.entries);
  all_bitwise = all_bitwise && assemble_same;
  report("assemble(phi)", assemble_serial, assemble_parallel, assemble_same);

  // --- dense product ---------------------------------------------------------
  TruncatedOperator product_serial;
  TruncatedOperator product_parallel;
  const double matmul_serial = best_of(repeats, [&] {
    product_serial =
        matmul(assembled_serial, assembled_serial, Exec::Serial);
  });
  const double matmul_parallel = best_of(repeats, [&] {
    product_parallel =
        matmul(assembled_serial, assembled_serial, Exec::Parallel);
  });
  const bool matmul_same =
      bitwise_equal(product_serial.entries, product_parallel.entries);
  all_bitwise = all_bitwise && matmul_same;
  report("matmul", matmul_serial, matmul_parallel, matmul_same);

  // --- expectation values ----------------------------------------------------
  std::mt19937 rng(12345);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Complex> state(static_cast<size_t>(n_max) + 1);
  double norm2 = 0.0;
  for (Complex& c : state) {
    c = Complex(gauss(rng), gauss(rng));
    norm2 += std::norm(c);
  }
  for (Complex& c : state) c /= std::sqrt(norm2);

  // Single-vector expectation is memory-light; repeat it to get measurable
  // times.
  const int inner = 50;
  Complex value_serial(0.0, 0.0);
  Complex value_parallel(0.0, 0.0);
  const double expect_serial = best_of(repeats, [&] {
    for (int r = 0; r < inner; ++r) {
      value_serial = expectation(assembled_serial, state, true, Exec::Serial);
    }
  });
  const double expect_parallel = best_of(repeats, [&] {
    for (int r = 0; r < inner; ++r) {
      value_parallel =
          expectation(assembled_serial, state, true, Exec::Parallel);
    }
  });
  const bool expect_same = value_serial.real() == value_parallel.real() &&
                           value_serial.imag() == value_parallel.imag();
  all_bitwise = all_bitwise && expect_same;
  report("expectation x50", expect_serial, expect_parallel, expect_same);

  std::printf("\n%s\n", all_bitwise
                            ? "all parallel kernels bitwise-identical to the "
                              "serial reference"
                            : "BITWISE MISMATCH between kernel variants");
  return all_bitwise ? 0 : 1;
}
