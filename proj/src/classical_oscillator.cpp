#include "absphase/classical_oscillator.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "absphase/fock_core.hpp"

namespace absphase {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

void check_params(const OscillatorParams& params) {
  if (!(params.mass > 0.0) || !(params.omega > 0.0)) {
    throw std::invalid_argument("oscillator needs mass > 0 and omega > 0");
  }
}

QP forward_transform(const PhasePoint& pt, const OscillatorParams& params) {
  check_params(params);
  if (!(pt.P >= 0.0)) {
    throw std::invalid_argument("forward_transform needs P >= 0, got " +
                                std::to_string(pt.P));
  }
  if (pt.branch != 1 && pt.branch != -1) {
    throw std::invalid_argument("branch must be +1 or -1");
  }
  const double b = static_cast<double>(pt.branch);
  QP out;
  out.q = b * std::sqrt(2.0 * pt.P / (params.mass * params.omega)) *
          std::sin(pt.Q);
  out.p = b * std::sqrt(2.0 * params.mass * params.omega * pt.P) *
          std::cos(pt.Q);
  return out;
}

PhasePoint inverse_transform(double q, double p,
                             const OscillatorParams& params) {
  check_params(params);
  if (q == 0.0 && p == 0.0) {
    throw std::domain_error(
        "phase is undefined at the phase-space origin (q, p) = (0, 0)");
  }

  PhasePoint pt;
  pt.branch = +1;
  pt.P = (p * p + params.mass * params.mass * params.omega * params.omega * q *
                      q) /
         (2.0 * params.mass * params.omega);

  // Canonicalize the sign so that (q, p) and (-q, -p) take the arctangent of
  // bitwise-identical arguments: negation of a double is exact, so the mod-pi
  // branch invariance holds exactly, not merely to rounding.
  double qc = q;
  double pc = p;
  if (qc < 0.0 || (qc == 0.0 && pc < 0.0)) {
    qc = -qc;
    pc = -pc;
  }
  // With qc >= 0 the angle atan2(m*omega*qc, pc) lies in [0, pi); the value
  // pi itself would need qc == 0 with pc < 0, which the canonicalization
  // already mapped to 0.
  pt.Q = std::atan2(params.mass * params.omega * qc, pc);
  return pt;
}

double circle_distance_mod_pi(double a, double b) {
  double d = std::fmod(std::abs(a - b), kPi);
  return std::min(d, kPi - d);
}

double trajectory_phase_check(const OscillatorParams& params, double amplitude,
                              double phi0, const std::vector<double>& t_grid) {
  check_params(params);
  if (!(amplitude > 0.0)) {
    throw std::invalid_argument("trajectory check needs amplitude > 0");
  }
  double worst = 0.0;
  for (double t : t_grid) {
    const double angle = params.omega * t + phi0;
    const double q = amplitude * std::sin(angle);
    const double p = params.mass * params.omega * amplitude * std::cos(angle);
    const PhasePoint pt = inverse_transform(q, p, params);
    double folded = std::fmod(angle, kPi);
    if (folded < 0.0) folded += kPi;
    worst = std::max(worst, circle_distance_mod_pi(pt.Q, folded));
  }
  return worst;
}

double action_integral(const OscillatorParams& params, double energy,
                       int orientation, int quad_points) {
  check_params(params);
  if (!(energy > 0.0)) {
    throw std::invalid_argument("action integral needs energy > 0, got " +
                                std::to_string(energy));
  }
  if (orientation != 1 && orientation != -1) {
    throw std::invalid_argument("orientation must be +1 or -1");
  }
  if (quad_points < 2) {
    throw std::invalid_argument("action integral needs quad_points >= 2");
  }

  // Parameterize the orbit by the angle u in [0, 2pi):
  //   q(u) = A sin(o*u), p(u) = m omega A cos(o*u), A = sqrt(2E/(m omega^2)),
  // so the integrand p dq/du = o * m omega A^2 cos^2(o*u) is smooth
  // everywhere (no turning-point square roots).  The rule on (0, pi) is
  // stretched by 2 to cover one full period.
  const double A =
      std::sqrt(2.0 * energy / (params.mass * params.omega * params.omega));
  const double o = static_cast<double>(orientation);
  const PhaseGrid grid = make_phase_grid(quad_points);
  double acc = 0.0;
  for (int k = 0; k < grid.points(); ++k) {
    const double u = 2.0 * grid.nodes[k];
    const double c = std::cos(o * u);
    acc += 2.0 * grid.weights[k] * o * params.mass * params.omega * A * A * c *
           c;
  }
  return acc / (2.0 * kPi);
}

QP angle_variable_reconstruct(const ActionAngle& aa,
                              const OscillatorParams& params) {
  check_params(params);
  const double j = std::abs(aa.J);
  QP out;
  out.q = std::sqrt(2.0 * j / (params.mass * params.omega)) * std::sin(aa.w);
  out.p = std::sqrt(2.0 * params.mass * params.omega * j) * std::cos(aa.w);
  return out;
}

}  // namespace absphase
