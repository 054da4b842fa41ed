#pragma once

// Operators of the absolute-phase observable on truncated Fock space: the
// number operator, the phase observable Phi (closed form and quadrature
// construction), trigonometric functions of Phi, the one-sided shift
// operators E / E^dagger with their Hermitian cosine / sine combinations,
// number-state phase distributions and moments, and the correction
// identities linking the two operator families.

#include <functional>

#include "absphase/fock_core.hpp"

namespace absphase {

// One-sided shift operators and their Hermitian trig combinations:
// E lowers the level index (entries <n|E|n+1> = 1), cosine = (E + E^dagger)/2,
// sine = (E - E^dagger)/(2i).
struct LadderOperators {
  TruncatedOperator E;
  TruncatedOperator E_dagger;
  TruncatedOperator C;
  TruncatedOperator S;
};

// Phase density of the number state |n> tabulated on a grid, units 1/radian:
// P_0(phi) = 1/pi and P_n(phi) = (1 + cos(2 n phi))/pi for n >= 1.
struct PhaseDistribution {
  int n = 0;
  PhaseGrid grid;
  std::vector<double> density;
};

// Default quadrature size for operator construction at a given cutoff:
// max(1024, 4*n_max), which keeps every cosine product strictly inside the
// rule's trigonometric resolution.
int default_grid_points(int n_max);

// Number operator: diagonal 0, 1, ..., n_max.
TruncatedOperator build_number(int n_max);

// Phase observable Phi from its closed-form matrix elements:
// diagonal pi/2; <n|Phi|0> = -2*sqrt(2)/(pi*n^2) for odd n;
// <n|Phi|n'> = -(2/pi) * (1/(n+n')^2 + 1/(n-n')^2) for n, n' >= 1 with
// n + n' odd; zero otherwise.  Real symmetric.
TruncatedOperator build_phi_analytic(int n_max);

// Operator integral sum_k w_k f(phi_k) |phi_k><phi_k| restricted to levels
// 0..n_max, i.e. entries sum_k w_k f(phi_k) c_n(phi_k) c_n'(phi_k).
// Hermitian for real f.  When the grid has fewer than 4*n_max points the
// result carries a non-empty accuracy_note (the integrand bandwidth may
// exceed the rule's resolution).
TruncatedOperator build_operator_from_phase_function(
    const std::function<double(double)>& f, const PhaseGrid& grid, int n_max,
    Exec exec = default_exec());

// E, E^dagger, C, S on levels 0..n_max (n_max >= 2).
LadderOperators build_ladder_and_trig(int n_max);

// Builds cos(Phi) by quadrature on the default grid and returns the largest
// deviation from C + (sqrt(2)-1)/2 * (|0><1| + |1><0|) over the interior
// block n, n' <= n_max - 1 (the outermost band is truncation-contaminated).
double verify_cos_identity(int n_max, Exec exec = default_exec());

// Builds sin^2(Phi) by quadrature on the default grid and returns the
// largest deviation from
//   S^2 + (1-sqrt(2))/4 * (|0><2| + |2><0|) + (|0><0| - |1><1|)/4
// over the interior block n, n' <= n_max - 2.
double verify_sin2_identity(int n_max, Exec exec = default_exec());

// sin(Phi) by quadrature.  The diagonal has the closed form
// sin_phi_diagonal(); the off-diagonal elements have none and the quadrature
// route is authoritative.
TruncatedOperator build_sin_phi(int n_max, const PhaseGrid& grid,
                                Exec exec = default_exec());

// Closed-form diagonal of sin(Phi): 2/pi at n = 0 and
// (2 + 2/(1 - 4n^2))/pi for n >= 1; approaches 2/pi for large n.
double sin_phi_diagonal(int n);

// Phase density of |n> at a single angle, valid on the closed interval
// [0, pi].
double number_state_density(int n, double phi);

// Phase density of |n> tabulated on `grid`; integrates to 1 under the grid
// weights to 1e-10.
PhaseDistribution number_state_distribution(int n, const PhaseGrid& grid);

// m-th moment of the phase in the number state |n>, by quadrature against
// the phase density.  The first moment is pi/2 for every n; the second is
// pi^2/3 + 1/(2n^2) for n >= 1, approaching the uniform-distribution value
// pi^2/3.  The two-argument overload uses the default 1024-point grid.
double number_state_moment(int n, int m);
double number_state_moment(int n, int m, const PhaseGrid& grid);

// |t| observable of a mode with angular frequency omega: Phi scaled by
// 1/omega.  Throws std::invalid_argument for omega <= 0.
TruncatedOperator time_operator(const TruncatedOperator& phi, double omega);

}  // namespace absphase
