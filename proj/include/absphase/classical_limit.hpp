#pragma once

// Classical limit of the phase observable: coherent-state expectation values
// of Phi and its trig functions by the exact truncated double sum, the
// large-excitation asymptotic series for <Phi>, and Fourier partial-sum
// oracles for the limiting values |theta| and |sin theta|.

#include "absphase/fock_core.hpp"

namespace absphase {

// Observables whose coherent-state averages approach a classical target:
// Phi -> |theta|, SinPhi -> |sin theta|, CosPhi -> cos theta, and the
// squared variants -> the squared targets.
enum class PhaseObservable { Phi, SinPhi, CosPhi, Sin2Phi, Cos2Phi };

// Convergence record of one observable at fixed theta over an ascending list
// of mean excitation numbers.
struct LimitSweepResult {
  double theta = 0.0;
  double target = 0.0;
  std::vector<double> nbar_list;
  std::vector<double> values;
  std::vector<double> errors;  // |value - target| per entry
  // True when the error sequence is non-increasing after its first element,
  // up to the numerical noise floor kSweepNoiseFloor (errors that have hit
  // machine precision are allowed to fluctuate there).
  bool monotone_after_first = false;
};

// Absolute slack for the monotone-convergence gate: once errors fall to the
// rounding floor of the double sums (~1e-13 at desk scales) strict
// comparisons would fail on noise, so decreases are enforced only above this
// margin.  It is seven orders of magnitude below the acceptance threshold.
inline constexpr double kSweepNoiseFloor = 1e-9;

// Exact <gamma| op |gamma> over the retained levels.  The coherent
// coefficients are evaluated at the operator's own cutoff, which must
// satisfy the norm-deficit rule (CutoffInsufficientError otherwise); op must
// be flagged Hermitian and the imaginary residue stays below 1e-10.
double coherent_expectation_exact(const TruncatedOperator& op,
                                  const CoherentAmplitude& amp,
                                  Exec exec = default_exec());

// Large-excitation asymptotic form of <Phi>:
//   pi/2 - (4/pi) * sum over odd s <= s_max of cos(s*theta)/s^2.
// The series is the limiting value itself; nbar only marks the regime of
// validity and is validated (nbar >= 1) without entering the sum.
// Requires odd-term truncation s_max >= 51.
double phi_asymptotic_average(double theta, double nbar, int s_max);

// Fourier partial sums of the classical targets on [-pi, pi]:
//   |theta|     = pi/2 - (4/pi) sum over odd s of cos(s*theta)/s^2
//   |sin theta| = 2/pi - (4/pi) sum over even s >= 2 of cos(s*theta)/(s^2-1)
// truncated at s_max (s_max >= 2, |theta| <= pi).
double fourier_abs_theta(double theta, int s_max);
double fourier_abs_sin(double theta, int s_max);

// Analytic bounds on the truncation error of the partial sums above:
// 4/(pi*s_max) for |theta| and 4/(pi*(s_max-1)) for |sin theta|.
double fourier_abs_theta_tail_bound(int s_max);
double fourier_abs_sin_tail_bound(int s_max);

// Classical target value of an observable at angle theta.
double classical_target(PhaseObservable obs, double theta);

// Builds the matrix of an observable on levels 0..n_max.  Phi uses its
// closed-form elements; the trig observables are built by quadrature on
// `grid`.
TruncatedOperator build_phase_observable(PhaseObservable obs, int n_max,
                                         const PhaseGrid& grid,
                                         Exec exec = default_exec());

// Evaluates one observable at fixed theta across nbar_list (ascending) and
// records errors against the classical target.  The operator is built once
// at the cutoff of the largest nbar.  The monotone gate is meaningful away
// from the kinks of the targets (|theta| in (0.2, pi - 0.2)); outside that
// band the flag is still computed but not guaranteed.
LimitSweepResult limit_sweep(PhaseObservable obs, double theta,
                             const std::vector<double>& nbar_list,
                             Exec exec = default_exec());

}  // namespace absphase
