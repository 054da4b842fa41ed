#pragma once

// Classical harmonic oscillator: the two-branch canonical transformation
// between (q, p) and the angle-action-like pair (Q, P), the mod-pi
// determination of Q from a phase-space point, and action-angle variables
// with the orientation sign J = +-H/omega.

#include <stdexcept>
#include <vector>

namespace absphase {

// Mass and angular frequency; both strictly positive.
struct OscillatorParams {
  double mass = 1.0;
  double omega = 1.0;
};

// Image of a phase-space point under the canonical transformation: angle Q,
// non-negative action-like variable P = H/omega, and the branch sign that
// distinguishes the two transformations (they differ by an overall sign of
// (q, p), equivalently by a shift of Q by pi).
struct PhasePoint {
  double Q = 0.0;
  double P = 0.0;
  int branch = +1;
};

// Action-angle coordinates: signed action J (|J|*omega is the energy), angle
// w and initial angle beta with w = omega * sign(J) * t + beta.
struct ActionAngle {
  double J = 0.0;
  double w = 0.0;
  double beta = 0.0;
};

struct QP {
  double q = 0.0;
  double p = 0.0;
};

void check_params(const OscillatorParams& params);

// (Q, P, branch) -> (q, p):
//   q = branch * sqrt(2P/(m*omega)) * sin Q,
//   p = branch * sqrt(2*m*omega*P) * cos Q.
// Throws std::invalid_argument for P < 0 or branch not in {+1, -1}.
QP forward_transform(const PhasePoint& pt, const OscillatorParams& params);

// (q, p) -> (Q in [0, pi), P >= 0) with P = (p^2 + m^2 omega^2 q^2) /
// (2 m omega).  Only Q mod pi is recoverable: the branch ambiguity
// (q, p) <-> (-q, -p) erases pi of phase information, and this routine makes
// that invariance exact by canonicalizing the sign of its inputs before
// taking the arctangent.  Exact q = 0 input returns Q = 0 (the limit
// convention from the p > 0 side).  Throws std::domain_error at the origin,
// where the phase is undefined.
PhasePoint inverse_transform(double q, double p, const OscillatorParams& params);

// Distance between two angles on a circle of circumference pi.
double circle_distance_mod_pi(double a, double b);

// Follows the exact trajectory q(t) = A sin(omega t + phi0),
// p(t) = m omega A cos(omega t + phi0) over t_grid and returns the largest
// circle distance between the recovered Q and (omega t + phi0) mod pi.
double trajectory_phase_check(const OscillatorParams& params, double amplitude,
                              double phi0, const std::vector<double>& t_grid);

// Action (1/2pi) * closed integral of p dq around the orbit of the given
// energy, evaluated by Gauss-Legendre quadrature of the angle-parameterized
// orbit (which has no turning-point singularities).  The orientation sign
// selects the traversal direction, giving J = +-energy/omega.
// Throws std::invalid_argument for energy <= 0, orientation not in {+1, -1}
// or quad_points < 2.
double action_integral(const OscillatorParams& params, double energy,
                       int orientation, int quad_points);

// Reconstructs the phase-space point of the action-angle state:
// q = sqrt(2|J|/(m omega)) sin w, p = sqrt(2 m omega |J|) cos w, so the
// reconstructed energy is omega*|J| for every angle.
QP angle_variable_reconstruct(const ActionAngle& aa,
                              const OscillatorParams& params);

}  // namespace absphase
