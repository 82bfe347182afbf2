#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "support/oracles.hpp"
#include "toa/errors.hpp"
#include "toa/grids.hpp"
#include "toa/packets.hpp"
#include "toa/transforms.hpp"
#include "toa/wave_function.hpp"

using namespace toa;

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

TEST_CASE("spatial grid validates its shape") {
  CHECK_THROWS_AS(SpatialGrid(100, -10.0, 0.1), InputError);
  CHECK_THROWS_AS(SpatialGrid(4, -10.0, 0.1), InputError);
  CHECK_THROWS_AS(SpatialGrid(64, -10.0, 0.0), InputError);
  CHECK_THROWS_AS(SpatialGrid(64, -10.0, -0.1), InputError);

  const SpatialGrid g(64, -8.0, 0.25);
  CHECK(g.n() == 64);
  CHECK(g.x(0) == doctest::Approx(-8.0));
  CHECK(g.x(63) == doctest::Approx(-8.0 + 63 * 0.25));
  CHECK(g.length() == doctest::Approx(16.0));
  CHECK(g.dp() == doctest::Approx(kTwoPi / 16.0));
}

TEST_CASE("momentum lattice is ascending with p = 0 on it") {
  const SpatialGrid g(64, -8.0, 0.25);
  CHECK(g.p(g.p_zero_index()) == 0.0);
  for (int k = 1; k < g.n(); ++k) {
    CHECK(g.p(k) > g.p(k - 1));
  }
  CHECK(g.p(g.nyquist_index()) == doctest::Approx(g.dp() * g.n() / 2));
  CHECK(g.p(0) == doctest::Approx(-g.dp() * (g.n() / 2 - 1)));

  // fft_bin folds the signed lattice index into DFT bin order.
  CHECK(g.fft_bin(g.p_zero_index()) == 0);
  CHECK(g.fft_bin(g.p_zero_index() + 1) == 1);
  CHECK(g.fft_bin(g.p_zero_index() - 1) == g.n() - 1);
  CHECK(g.fft_bin(g.nyquist_index()) == g.n() / 2);
}

TEST_CASE("theta grid validates and spans") {
  CHECK_THROWS_AS(ThetaGrid(1, 0.0, 0.1), InputError);
  CHECK_THROWS_AS(ThetaGrid(16, 0.0, -0.1), InputError);

  const ThetaGrid tg = ThetaGrid::span(-2.0, 2.0, 5);
  CHECK(tg.samples() == 5);
  CHECK(tg.theta(0) == doctest::Approx(-2.0));
  CHECK(tg.theta(4) == doctest::Approx(2.0));
  CHECK(tg.dtheta() == doctest::Approx(1.0));
  CHECK(tg.values().size() == 5);
}

TEST_CASE("wave function norms carry the grid measure") {
  const SpatialGrid g(64, -8.0, 0.25);
  WaveFunction psi(g, Rep::position);
  psi.amp[10] = 2.0;
  CHECK(psi.norm_sq() == doctest::Approx(4.0 * g.dx()));
  psi.normalize();
  CHECK(psi.norm_sq() == doctest::Approx(1.0));

  WaveFunction zero(g, Rep::position);
  CHECK_THROWS_AS(zero.normalize(), NumericsError);
}

TEST_CASE("representation guards throw the named errors") {
  const SpatialGrid g(64, -8.0, 0.25);
  const WaveFunction psi(g, Rep::position);
  CHECK_THROWS_AS(to_position(psi), RepresentationError);
  CHECK_THROWS_AS(to_momentum(to_momentum(psi)), RepresentationError);
  CHECK_THROWS_AS(to_pseudoenergy(psi), RepresentationError);

  const SpatialGrid other(64, -8.0, 0.5);
  const WaveFunction chi(other, Rep::position);
  CHECK_THROWS_AS(require_same_grid(psi, chi, "test"), InputError);
}

TEST_CASE("forward transform matches the quadratic-cost reference") {
  std::mt19937 rng(11);
  const SpatialGrid g(64, -8.0, 0.25);
  const WaveFunction psi = oracles::random_state(rng, g);
  const WaveFunction tilde = to_momentum(psi);
  CHECK(tilde.rep == Rep::momentum);
  CHECK(oracles::max_abs_diff(tilde.amp, oracles::dft_forward(psi)) < 1e-12);
}

TEST_CASE("inverse transform matches the quadratic-cost reference") {
  std::mt19937 rng(12);
  const SpatialGrid g(64, -8.0, 0.25);
  const WaveFunction tilde = oracles::random_state(rng, g, Rep::momentum);
  const WaveFunction psi = to_position(tilde);
  CHECK(psi.rep == Rep::position);
  CHECK(oracles::max_abs_diff(psi.amp, oracles::dft_inverse(tilde)) < 1e-12);
}

TEST_CASE("transform round trip is the identity and preserves norm") {
  std::mt19937 rng(13);
  const SpatialGrid g(256, -20.0, 0.15625);
  const WaveFunction psi = oracles::random_state(rng, g);
  const WaveFunction tilde = to_momentum(psi);
  CHECK(tilde.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));
  const WaveFunction back = to_position(tilde);
  CHECK(oracles::max_abs_diff(psi.amp, back.amp) < 1e-12);
}

TEST_CASE("a lattice plane wave lands in a single momentum bin") {
  const SpatialGrid g(128, -16.0, 0.25);
  const double p_star = 5.0 * g.dp();
  WaveFunction psi(g, Rep::position);
  for (int j = 0; j < g.n(); ++j) {
    psi.amp[j] = std::polar(1.0 / std::sqrt(g.length()), p_star * g.x(j));
  }
  const WaveFunction tilde = to_momentum(psi);
  const int k_star = g.p_zero_index() + 5;
  CHECK(std::norm(tilde.amp[k_star]) * g.dp() == doctest::Approx(1.0));
  for (int k = 0; k < g.n(); ++k) {
    if (k == k_star) continue;
    CHECK(std::abs(tilde.amp[k]) < 1e-12);
  }
}

TEST_CASE("gaussian transforms to the analytic momentum gaussian") {
  const SpatialGrid g(1024, -40.0, 0.078125);
  const double a = -6.0, sigma = 1.25, p0 = 2.0;
  const WaveFunction psi = oracles::gaussian_state(g, 0.0, a, sigma, p0);
  const WaveFunction tilde = to_momentum(psi);
  // psi~(p) = (2 sigma^2 / pi)^{1/4} e^{-sigma^2 (p-p0)^2} e^{-i (p-p0) a}
  const double amp0 = std::pow(2.0 * sigma * sigma / std::numbers::pi, 0.25);
  for (int k = 0; k < g.n(); ++k) {
    const double p = g.p(k);
    const Complex expect =
        amp0 * std::exp(-sigma * sigma * (p - p0) * (p - p0)) *
        std::polar(1.0, -(p - p0) * a);
    CHECK(std::abs(tilde.amp[k] - expect) < 1e-10);
  }
}

TEST_CASE("pseudoenergy samples follow sgn(p) p^2/2 with |p| dp weights") {
  const SpatialGrid g(64, -kTwoPi / 0.5 / 2.0, kTwoPi / 0.5 / 64.0);
  REQUIRE(g.dp() == doctest::Approx(0.5));
  std::mt19937 rng(14);
  const WaveFunction tilde = oracles::random_state(rng, g, Rep::momentum);
  const PseudoSamples ps = to_pseudoenergy(tilde);

  CHECK(ps.size() == g.n() - 1);
  for (int i = 1; i < ps.size(); ++i) {
    CHECK(ps.xi[i] > ps.xi[i - 1]);
  }

  // p = 2 sits 4 lattice steps above zero; p = -3 six below.
  const int above = g.p_zero_index() + 4;
  REQUIRE(g.p(above) == doctest::Approx(2.0));
  CHECK(ps.xi[above - 1] == doctest::Approx(2.0));
  CHECK(ps.weight[above - 1] == doctest::Approx(2.0 * g.dp()));
  const int below = g.p_zero_index() - 6;
  REQUIRE(g.p(below) == doctest::Approx(-3.0));
  CHECK(ps.xi[below] == doctest::Approx(-4.5));
  CHECK(ps.weight[below] == doctest::Approx(3.0 * g.dp()));

  // The 1/sqrt|p| amplitude scaling keeps the total probability.
  CHECK(ps.norm_sq() + ps.dropped_mass ==
        doctest::Approx(tilde.norm_sq()).epsilon(1e-12));
  CHECK(ps.dropped_mass == doctest::Approx(std::norm(tilde.amp[g.p_zero_index()]) * g.dp()));
}

TEST_CASE("pseudotime quadrature matches the termwise reference") {
  std::mt19937 rng(15);
  const SpatialGrid g(64, -8.0, 0.25);
  const WaveFunction tilde = oracles::random_state(rng, g, Rep::momentum);
  const PseudoSamples ps = to_pseudoenergy(tilde);

  // 700 samples crosses the phase-recurrence resync stride twice.
  const ThetaGrid tg = ThetaGrid::span(-5.0, 5.0, 700);
  const CVector got = pseudotime_amplitude(ps, tg);

  CVector coeff(ps.size());
  for (int k = 0; k < ps.size(); ++k) {
    coeff[k] = ps.weight[k] * ps.amp[k] / std::sqrt(kTwoPi);
  }
  const CVector expect =
      oracles::nudft_reference(ps.xi, coeff, tg.values(), -1.0);
  CHECK(oracles::max_abs_diff(got, expect) < 1e-12);
}

TEST_CASE("an odd state transforms to an odd momentum amplitude") {
  const SpatialGrid g(512, -32.0, 0.125);
  PacketSpec spec;
  spec.kind = PacketKind::odd_pair;
  const WaveFunction tilde = to_momentum(make_packet(spec, g));
  // p(k) and p(2*z - k) are opposite for every bin below the Nyquist one.
  const int z = g.p_zero_index();
  for (int k = 1; k < g.n() - 1; ++k) {
    CHECK(std::abs(tilde.amp[k] + tilde.amp[2 * z - k]) < 1e-12);
  }
  CHECK(std::abs(tilde.amp[z]) < 1e-14);
}

TEST_CASE("a single sample at xi = 0 gives a flat pseudotime modulus") {
  PseudoSamples ps;
  ps.xi = {0.0};
  ps.weight = {0.5};
  ps.amp = {Complex(0.8, -0.6)};
  const ThetaGrid tg = ThetaGrid::span(-3.0, 3.0, 41);
  const CVector amp = pseudotime_amplitude(ps, tg);
  const double expect = 0.5 / std::sqrt(kTwoPi);
  for (const Complex& a : amp) {
    CHECK(std::abs(a) == doctest::Approx(expect).epsilon(1e-12));
  }

  const PseudoSamples empty;
  CHECK_THROWS_AS(pseudotime_amplitude(empty, tg), InputError);
}

TEST_CASE("step-spectrum state concentrates its mass in the step") {
  const SpatialGrid g(1024, -40.96, 0.08);
  const WaveFunction psi = theta_step_state(2.0, 2.1, g);
  CHECK(psi.rep == Rep::position);
  CHECK(psi.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("step-spectrum state rejects a step too sharp for the grid") {
  const SpatialGrid g(1024, -40.96, 0.08);
  CHECK_THROWS_AS(theta_step_state(2.0, 2.00001, g), ResolutionError);
  CHECK_THROWS_AS(theta_step_state(2.1, 2.0, g), InputError);
  CHECK_THROWS_AS(theta_step_state(2.0, 2.0, g), InputError);
}

TEST_CASE("step sharpness error reports the grid's band and the shortfall") {
  const SpatialGrid g(1024, -40.96, 0.08);
  try {
    theta_step_state(2.0, 2.00001, g);
    FAIL("expected ResolutionError");
  } catch (const ResolutionError& e) {
    const std::string what = e.what();
    CHECK(what.find("0.99") != std::string::npos);
    CHECK(what.find("band") != std::string::npos);
  }
}
