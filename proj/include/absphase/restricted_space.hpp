#pragma once

// Position/angle observables on a box of length L with periodic momentum
// basis |p_n>, p_n = 2*pi*hbar*n/L: closed-form matrix elements of x and
// x^2, the non-standard commutator and its uncertainty bound, the dense
// subspace on which the canonical commutation relation is exact, a
// number-phase commutation-relation (NPCR) counterexample built from
// exponential window states, and the finite-dimensional angle matrix whose
// spectrum is exactly uniform and whose elements approach the plane-rotator
// angle matrix.

#include <random>

#include "absphase/fock_core.hpp"

namespace absphase {

// Box geometry and action scale.  The defaults L = 2*pi, hbar = 1 make the
// momentum eigenvalues p_n = n dimensionless.
struct BoxConfig {
  double L = 2.0 * 3.14159265358979323846;
  double hbar = 1.0;
};

// Finite superposition sum_n psi_n |p_n> over distinct integer momentum
// indices (negative indices allowed); unit norm within 1e-12.
struct MomentumSuperposition {
  std::vector<int> support;
  std::vector<Complex> coeffs;
  BoxConfig box;
};

// Validates support/coefficient consistency, distinctness and unit norm;
// throws std::invalid_argument on violation.
void check_superposition(const MomentumSuperposition& state);

// Configuration of the (m+1)-dimensional angle matrix on symmetric indices
// -m/2..m/2; m must be even and >= 2.
struct FiniteDimConfig {
  int m = 2;
  BoxConfig box;
};

// Uncertainty data for one state: spreads of position and momentum, the
// state-dependent lower bound (hbar/2)|1 - |sum_n (-1)^n psi_n|^2|, and
// whether dx*dp >= bound - 1e-12.
struct UncertaintyReport {
  double dx = 0.0;
  double dp = 0.0;
  double bound = 0.0;
  bool satisfied = false;
};

// Thrown when a projection annihilates its input state.
class DegenerateProjectionError : public std::runtime_error {
 public:
  explicit DegenerateProjectionError(const std::string& message)
      : std::runtime_error(message) {}
};

// Plane-rotator angle matrix on momentum indices -K..K (dimensionless;
// entry at row index n, column index n' is i*(-1)^(n-n')/(n'-n) off the
// diagonal and 0 on it).  Hermitian with purely imaginary entries.
Matrix rotator_angle_matrix(int K);

// Exact double sum <psi| [p, x] |psi> over the finite support, using the
// closed-form elements x_{nn'} = -i*L*(-1)^(n-n') / (2*pi*(n-n')).
// Equals i*hbar*(1 - |sum_n (-1)^n psi_n|^2); see commutator_prediction.
Complex commutator_expectation(const MomentumSuperposition& state);

// Closed-form value i*hbar*(1 - |sum_n (-1)^n psi_n|^2) the double sum must
// reproduce.
Complex commutator_prediction(const MomentumSuperposition& state);

// Alternating coefficient sum sum_n (-1)^n psi_n whose vanishing defines the
// subspace of exact canonical commutation.
Complex alternating_sum(const MomentumSuperposition& state);

// Spreads of x (closed-form first and second moments: x diagonal 0,
// x^2 diagonal L^2/12, off-diagonal (-1)^(n-n') L^2 / (2 pi^2 (n-n')^2)) and
// of the diagonal p, with the commutator-derived lower bound.
UncertaintyReport uncertainty_check(const MomentumSuperposition& state);

// Renormalized orthogonal projection onto the subspace
// { psi : sum_n (-1)^n psi_n = 0 } within the span of the state's support.
// After projection the commutator expectation equals i*hbar to 1e-10.
// Throws DegenerateProjectionError when the projection annihilates the state
// (for example any single basis state).
MomentumSuperposition subspace_C_projection(const MomentumSuperposition& state);

// Average of the number-like observable i d/dphi in the window state
// psi(phi) = delta^(-1/2) exp(i*exponent_sign*n*phi) supported on
// (phi0, phi0 + delta), by Gauss-Legendre quadrature with the derivative
// taken numerically.  Returns +n for exponent_sign = -1 and -n for
// exponent_sign = +1: a bounded-below spectrum cannot reproduce both, which
// is the counterexample to the naive number-phase commutation relation.
double npcr_counterexample(int n, double phi0, double delta, int grid_points,
                           int exponent_sign);

// Angle matrix on the (m+1)-dimensional space with symmetric indices: entry
// at (row a, col b) is (-1)^(b-a) / [ ((m+1)/(2*pi)) *
// (1 - exp(2*pi*i*(b-a)/(m+1))) ] off the diagonal and 0 on it.  Hermitian;
// its eigenvalues are exactly 2*pi*l/(m+1) for l = -m/2..m/2 (the diagonal
// is fixed to 0 by that symmetric spectrum: the eigenvalue sum vanishes).
// Throws std::invalid_argument for odd m or m < 2.
Matrix finite_theta_matrix(const FiniteDimConfig& cfg);

// |finite element - rotator element| at fixed (n, n'), n != n', for each m
// in m_list (ascending, every m even and >= 2|n - n'| + 2).  The sequence
// decays as O(1/m): consecutive doublings shrink it by a factor in
// [0.4, 0.6].
std::vector<double> finite_to_rotator_limit(int n, int n_prime,
                                            const std::vector<int>& m_list);

// Random finite-support unit state for property tests: between min_terms and
// max_terms distinct indices drawn from [-index_range, index_range] with
// complex Gaussian coefficients, normalized.  Deterministic for a given
// generator state.
MomentumSuperposition random_superposition(std::mt19937& rng,
                                           int min_terms = 2,
                                           int max_terms = 8,
                                           int index_range = 12);

}  // namespace absphase
