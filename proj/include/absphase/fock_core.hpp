#pragma once

// Core types for dense operator work on a truncated harmonic-oscillator
// (Fock) basis: the operator container, Gauss-Legendre phase grids on
// (0, pi), phase-state and coherent-state coefficient vectors, and dense
// algebra (matmul / add / scale / expectation).
//
// Every routine is a pure function of its arguments.  Kernels that offer a
// parallel path distribute only independent output elements across OpenMP
// threads and keep all inner summations in ascending index order, so the
// serial and parallel variants produce bitwise-identical results.

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace absphase {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

// Highest supported truncation level.  Matrix elements of the phase
// observable decay only quadratically, so sparse storage never pays off and
// we cap the dense block instead.
inline constexpr int kMaxLevels = 4096;

// Execution variant for the dual-path kernels.  Serial is the reference
// implementation; Parallel uses OpenMP over independent output elements and
// falls back to the serial path when OpenMP is unavailable.
enum class Exec { Serial, Parallel };

Exec default_exec();
void set_default_exec(Exec exec);

// Caps the OpenMP team size used by the Parallel variants (values < 1 are
// clamped to 1).  No effect when OpenMP is unavailable.
void set_thread_count(int threads);

// Dense complex operator on Fock levels 0..n_max.
//
// `hermitian` is a verified property, not an assumption: construction and
// algebra routines recompute it from the entries (tolerance 1e-12).
// `accuracy_note` is empty unless a builder could not guarantee its nominal
// accuracy (for example a quadrature grid too coarse for the requested
// bandwidth); it never affects the numerical content.
struct TruncatedOperator {
  int n_max = 0;
  Matrix entries;
  bool hermitian = false;
  std::string accuracy_note;

  int dim() const { return n_max + 1; }
};

// Zero / identity operators on levels 0..n_max.  Throws std::invalid_argument
// unless 1 <= n_max <= kMaxLevels.
TruncatedOperator make_zero_operator(int n_max);
TruncatedOperator make_identity_operator(int n_max);

// True when max_ij |M(i,j) - conj(M(j,i))| <= tol.
bool matrix_is_hermitian(const Matrix& m, double tol = 1e-12);

// Validates 1 <= n_max <= kMaxLevels; throws std::invalid_argument otherwise.
void check_level_cutoff(int n_max);

// Quadrature rule on the open interval (0, pi).  Nodes are strictly
// increasing and never touch the endpoints; weights are positive and sum to
// pi (within 1e-12).
struct PhaseGrid {
  std::vector<double> nodes;
  std::vector<double> weights;

  int points() const { return static_cast<int>(nodes.size()); }
};

// Gauss-Legendre rule with `points` nodes mapped to (0, pi).
// Throws std::invalid_argument for points < 2.
PhaseGrid make_phase_grid(int points);

// Coherent-state label (nbar, theta): mean excitation number nbar >= 0 and
// phase angle theta, with amplitude gamma = sqrt(nbar) * exp(i*theta).
struct CoherentAmplitude {
  double nbar = 0.0;
  double theta = 0.0;
};

// Validates nbar >= 0 and wraps theta into (-pi, pi].
CoherentAmplitude make_coherent_amplitude(double nbar, double theta);

// Default truncation level for a coherent state of mean excitation nbar:
// ceil(nbar + 10*sqrt(nbar) + 50), which keeps the Poisson tail below 1e-10
// at desk scales.
int coherent_cutoff(double nbar);

// Thrown when a truncation level leaves more than the allowed probability
// outside the retained basis; carries the measured norm deficit.
class CutoffInsufficientError : public std::runtime_error {
 public:
  CutoffInsufficientError(const std::string& message, double deficit)
      : std::runtime_error(message), deficit_(deficit) {}

  double deficit() const noexcept { return deficit_; }

 private:
  double deficit_;
};

// Fock-basis coefficients of the phase state at angle phi in (0, pi):
// c_0 = 1/sqrt(pi), c_n = sqrt(2/pi) * cos(n*phi) for n >= 1.
// Throws std::domain_error for phi outside the open interval (the endpoint
// states carry an anomalous normalization and are excluded).
std::vector<double> phase_state_coeffs(double phi, int n_max);

// Fock-basis coefficients of the coherent state |gamma>:
// c_n = exp(-nbar/2) * gamma^n / sqrt(n!), evaluated in log space so that
// levels beyond n = 170 do not overflow.  Throws CutoffInsufficientError when
// the truncated norm deficit 1 - sum |c_n|^2 reaches 1e-10.
std::vector<Complex> coherent_coeffs(const CoherentAmplitude& amp, int n_max);

// <state| op |state> as a complex number.  The state must have length
// n_max + 1 and unit norm within 1e-10 unless `require_unit_norm` is false;
// violations throw std::invalid_argument.
Complex expectation(const TruncatedOperator& op,
                    const std::vector<Complex>& state,
                    bool require_unit_norm = true,
                    Exec exec = default_exec());

// Real part of expectation().  For operators flagged Hermitian the imaginary
// part must stay below 1e-10; a larger value indicates an inconsistent flag
// and throws std::runtime_error.
double expectation_real(const TruncatedOperator& op,
                        const std::vector<Complex>& state,
                        bool require_unit_norm = true,
                        Exec exec = default_exec());

// Dense product / sum / scalar multiple.  Operands must share n_max
// (std::invalid_argument otherwise).  The Hermitian flag of the result is
// recomputed from the entries, never copied from the inputs.
TruncatedOperator matmul(const TruncatedOperator& a, const TruncatedOperator& b,
                         Exec exec = default_exec());
TruncatedOperator add(const TruncatedOperator& a, const TruncatedOperator& b);
TruncatedOperator scale(const TruncatedOperator& a, Complex factor);

}  // namespace absphase
