// Unit tests for the classical oscillator module: the two-branch canonical
// transformation, mod-pi phase recovery along exact trajectories, and the
// signed action integral.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "absphase/classical_oscillator.hpp"

using namespace absphase;

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_NOTHROW(check_params({1.0, 1.0}));
  CHECK_THROWS_AS(check_params({0.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(check_params({1.0, -2.0}), std::invalid_argument);
}

TEST_CASE("forward transform") {
  const OscillatorParams params{2.0, 3.0};
  const QP at_zero = forward_transform({0.0, 5.0, +1}, params);
  CHECK(at_zero.q == 0.0);
  CHECK(std::abs(at_zero.p - std::sqrt(2.0 * 2.0 * 3.0 * 5.0)) < 1e-15);

  const QP quarter = forward_transform({kPi / 2.0, 5.0, +1}, params);
  CHECK(std::abs(quarter.q - std::sqrt(2.0 * 5.0 / 6.0)) < 1e-15);
  CHECK(std::abs(quarter.p) < 1e-14);

  // The two branches differ by an overall sign of the phase-space point.
  const QP plus = forward_transform({0.8, 2.0, +1}, params);
  const QP minus = forward_transform({0.8, 2.0, -1}, params);
  CHECK(plus.q == -minus.q);
  CHECK(plus.p == -minus.p);

  CHECK_THROWS_AS(forward_transform({0.0, -1.0, +1}, params),
                  std::invalid_argument);
  CHECK_THROWS_AS(forward_transform({0.0, 1.0, 0}, params),
                  std::invalid_argument);
}

TEST_CASE("inverse transform recovers energy and mod-pi phase") {
  const OscillatorParams params{1.5, 0.7};
  std::mt19937 rng(31337);
  std::uniform_real_distribution<double> angle(0.0, kPi);
  std::uniform_real_distribution<double> action(0.1, 10.0);
  for (int trial = 0; trial < 500; ++trial) {
    PhasePoint pt;
    pt.Q = angle(rng);
    pt.P = action(rng);
    pt.branch = (trial % 2 == 0) ? +1 : -1;
    const QP qp = forward_transform(pt, params);
    const PhasePoint back = inverse_transform(qp.q, qp.p, params);
    CHECK(std::abs(back.P - pt.P) < 1e-12 * pt.P + 1e-14);
    CHECK(circle_distance_mod_pi(back.Q, pt.Q) < 1e-12);
    CHECK(back.Q >= 0.0);
    CHECK(back.Q < kPi);
  }
}

TEST_CASE("inverse transform is exactly branch-invariant") {
  const OscillatorParams params{1.0, 2.0};
  std::mt19937 rng(271828);
  std::normal_distribution<double> gauss(0.0, 2.0);
  for (int trial = 0; trial < 500; ++trial) {
    const double q = gauss(rng);
    const double p = gauss(rng);
    if (q == 0.0 && p == 0.0) continue;
    const PhasePoint a = inverse_transform(q, p, params);
    const PhasePoint b = inverse_transform(-q, -p, params);
    // Bitwise equality, not closeness: negation is exact and the transform
    // canonicalizes signs before the arctangent.
    CHECK(a.Q == b.Q);
    CHECK(a.P == b.P);
  }
}

TEST_CASE("inverse transform edge conventions") {
  const OscillatorParams params{1.0, 1.0};
  // Momentum axis: q = 0 maps to Q = 0 from either side.
  CHECK(inverse_transform(0.0, 3.0, params).Q == 0.0);
  CHECK(inverse_transform(0.0, -3.0, params).Q == 0.0);
  CHECK(inverse_transform(-0.0, 3.0, params).Q == 0.0);
  // Position axis: p = 0 maps to Q = pi/2.
  CHECK(std::abs(inverse_transform(2.0, 0.0, params).Q - kPi / 2.0) < 1e-15);
  CHECK(std::abs(inverse_transform(-2.0, 0.0, params).Q - kPi / 2.0) < 1e-15);
  CHECK(std::abs(inverse_transform(2.0, -0.0, params).Q - kPi / 2.0) < 1e-15);

  CHECK_THROWS_AS(inverse_transform(0.0, 0.0, params), std::domain_error);
  CHECK_THROWS_AS(inverse_transform(-0.0, 0.0, params), std::domain_error);
}

TEST_CASE("circle distance mod pi") {
  CHECK(circle_distance_mod_pi(0.1, 0.1) == 0.0);
  CHECK(std::abs(circle_distance_mod_pi(0.05, kPi - 0.05) - 0.1) < 1e-15);
  CHECK(std::abs(circle_distance_mod_pi(1.0, 1.0 + 7.0 * kPi)) < 1e-13);
  CHECK(std::abs(circle_distance_mod_pi(-0.3, 0.3) - 0.6) < 1e-15);
}

TEST_CASE("trajectory phase tracks omega t plus phi0 mod pi") {
  const OscillatorParams params{1.3, 2.1};
  std::vector<double> t_grid;
  for (int k = 0; k <= 400; ++k) t_grid.push_back(0.025 * k);
  const double worst = trajectory_phase_check(params, 1.7, 0.6, t_grid);
  CHECK(worst < 1e-9);
  CHECK_THROWS_AS(trajectory_phase_check(params, -1.0, 0.0, t_grid),
                  std::invalid_argument);
}

TEST_CASE("action integral gives plus or minus energy over omega") {
  const OscillatorParams params{2.0, 0.5};
  const double energy = 3.7;
  const double plus = action_integral(params, energy, +1, 64);
  const double minus = action_integral(params, energy, -1, 64);
  CHECK(std::abs(plus - energy / params.omega) < 1e-6);
  CHECK(std::abs(minus + energy / params.omega) < 1e-6);
  CHECK(std::abs(plus + minus) < 1e-9);

  CHECK_THROWS_AS(action_integral(params, 0.0, +1, 64),
                  std::invalid_argument);
  CHECK_THROWS_AS(action_integral(params, 1.0, 2, 64),
                  std::invalid_argument);
  CHECK_THROWS_AS(action_integral(params, 1.0, +1, 1),
                  std::invalid_argument);
}

TEST_CASE("angle variables reconstruct the orbit") {
  const OscillatorParams params{1.0, 2.0};
  const double energy = 5.0;
  for (int orientation : {+1, -1}) {
    const double J = action_integral(params, energy, orientation, 128);
    for (double t : {0.0, 0.3, 1.1, 2.9}) {
      ActionAngle aa;
      aa.J = J;
      aa.beta = 0.4;
      aa.w = params.omega * (orientation > 0 ? 1.0 : -1.0) * t + aa.beta;
      const QP qp = angle_variable_reconstruct(aa, params);
      const double recon_energy =
          qp.p * qp.p / (2.0 * params.mass) +
          0.5 * params.mass * params.omega * params.omega * qp.q * qp.q;
      CHECK(std::abs(recon_energy - energy) < 1e-6);
      // The reconstructed point lies on the |J| orbit with angle w mod pi.
      const PhasePoint pt = inverse_transform(qp.q, qp.p, params);
      double folded = std::fmod(aa.w, kPi);
      if (folded < 0.0) folded += kPi;
      CHECK(circle_distance_mod_pi(pt.Q, folded) < 1e-9);
    }
  }
}
