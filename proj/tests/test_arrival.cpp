#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "support/oracles.hpp"
#include "toa/arrival.hpp"
#include "toa/errors.hpp"
#include "toa/packets.hpp"
#include "toa/peaks.hpp"
#include "toa/transforms.hpp"

using namespace toa;

namespace {

const SpatialGrid kGrid(2048, -40.0, 80.0 / 2048);

// Momentum-space gaussian with negligible p < 0 support.
WaveFunction right_mover(double p0 = 4.0, double sigma_p = 0.35,
                         double a = -8.0) {
  WaveFunction tilde(kGrid, Rep::momentum);
  for (int k = 0; k < kGrid.n(); ++k) {
    const double p = kGrid.p(k);
    tilde.amp[k] = std::exp(-(p - p0) * (p - p0) /
                            (4.0 * sigma_p * sigma_p)) *
                   std::polar(1.0, -(p - p0) * a);
  }
  tilde.normalize();
  return tilde;
}

ArrivalDistribution synthetic_density(const std::vector<double>& density,
                                      double dt = 0.1) {
  ArrivalDistribution d;
  for (size_t i = 0; i < density.size(); ++i) {
    d.axis.push_back(i * dt);
    d.weight.push_back(dt);
  }
  d.density = density;
  d.daxis = dt;
  return d;
}

}  // namespace

TEST_CASE("spectral density is normalized and peaks at the classical time") {
  const WaveFunction psi = right_mover(4.0, 0.25, -12.0);
  const ThetaGrid tg = auto_theta_window(psi, 2001);
  const ArrivalDistribution dist = kijowski_theta_density(psi, tg);

  CHECK(dist.mass() > 0.999);
  CHECK(dist.mass() < 1.0 + 1e-8);

  const std::vector<Peak> peaks = peak_detect(dist);
  REQUIRE(peaks.size() == 1);
  CHECK(std::abs(peaks[0].location - 3.0) < 0.1);
}

TEST_CASE("a wide window holds the full spectral mass") {
  // The window must stay inside one alias period of the momentum lattice,
  // n*dx / p0 = 20 here; a longer span would recount the peak.
  const WaveFunction psi = right_mover(4.0, 0.35, -8.0);
  const ThetaGrid tg = ThetaGrid::span(-6.0, 10.0, 1601);
  const ArrivalDistribution dist = kijowski_theta_density(psi, tg);
  CHECK(dist.mass() == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("branch densities agree for a right mover") {
  const WaveFunction psi = right_mover();
  const ThetaGrid tg = ThetaGrid::span(-4.0, 8.0, 1601);
  const ArrivalDistribution spectral = kijowski_theta_density(psi, tg);
  const ArrivalDistribution povm = povm_density(psi, tg);
  double worst = 0.0;
  for (int l = 0; l < tg.samples(); ++l) {
    worst = std::max(worst, std::abs(spectral.density[l] - povm.density[l]));
  }
  CHECK(worst < 1e-10);
  CHECK(povm.kind == DistributionKind::povm);
}

TEST_CASE("branch-incoherent density of an odd state doubles one branch") {
  PacketSpec spec;
  spec.kind = PacketKind::odd_pair;
  const WaveFunction psi = make_packet(spec, kGrid);
  const WaveFunction tilde = to_momentum(psi);

  // Keep only p > 0; the two branch amplitudes of an odd state have equal
  // magnitude, so the incoherent sum is exactly twice the one-branch density.
  WaveFunction half = tilde;
  for (int k = 0; k <= kGrid.p_zero_index(); ++k) half.amp[k] = 0.0;

  const ThetaGrid tg = ThetaGrid::span(-8.0, 8.0, 801);
  const ArrivalDistribution povm = povm_density(tilde, tg);
  const ArrivalDistribution one_branch = kijowski_theta_density(half, tg);
  double worst = 0.0;
  for (int l = 0; l < tg.samples(); ++l) {
    worst = std::max(worst,
                     std::abs(povm.density[l] - 2.0 * one_branch.density[l]));
  }
  CHECK(worst < 1e-10);
  // Slow components (p near 0) arrive after theta = 8; the window keeps
  // all but their e^{-2(p0-p)^2} tail.
  CHECK(povm.mass() == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("window probability integrates fractional bins") {
  const ArrivalDistribution d = synthetic_density({1.0, 1.0, 1.0, 1.0, 1.0});
  // Bins cover [-0.05, 0.45] with unit density.
  CHECK(window_probability(d, 0.0, 0.4) == doctest::Approx(0.4));
  CHECK(window_probability(d, -1.0, 1.0) == doctest::Approx(0.5));
  CHECK(window_probability(d, 0.12, 0.13) == doctest::Approx(0.01));
  CHECK(window_probability(d, 2.0, 3.0) == doctest::Approx(0.0));
  CHECK_THROWS_AS(window_probability(d, 0.4, 0.1), InputError);
}

TEST_CASE("l1 distance on a shared axis and on disjoint axes") {
  const ArrivalDistribution a = synthetic_density({0.0, 2.0, 0.0});
  const ArrivalDistribution b = synthetic_density({1.0, 0.0, 1.0});
  CHECK(l1_distance(a, a) == 0.0);
  CHECK(l1_distance(a, b) == doctest::Approx(0.4));

  ArrivalDistribution shifted = synthetic_density({0.0, 2.0, 0.0});
  for (auto& t : shifted.axis) t += 10.0;
  // Disjoint supports: |a| + |b| up to interpolation error.
  CHECK(l1_distance(a, shifted) == doctest::Approx(0.4).epsilon(0.15));
}

TEST_CASE("classical crossing time disagrees with the modulus clock") {
  SUBCASE("incoming from the left") {
    const ClassicalArrival c = classical_toa(-4.0, 2.0);
    CHECK(c.theta == doctest::Approx(2.0));
    REQUIRE(c.arrival.has_value());
    CHECK(*c.arrival == doctest::Approx(2.0));
    CHECK_FALSE(c.false_time);
  }
  SUBCASE("receding to the right") {
    const ClassicalArrival c = classical_toa(4.0, 2.0);
    CHECK(c.theta == doctest::Approx(-2.0));
    CHECK_FALSE(c.arrival.has_value());
    CHECK(c.false_time);
  }
  SUBCASE("incoming from the right") {
    const ClassicalArrival c = classical_toa(4.0, -2.0);
    CHECK(c.theta == doctest::Approx(-2.0));
    REQUIRE(c.arrival.has_value());
    CHECK(*c.arrival == doctest::Approx(2.0));
    CHECK(c.false_time);
  }
  SUBCASE("receding to the left") {
    const ClassicalArrival c = classical_toa(-4.0, -2.0);
    CHECK(c.theta == doctest::Approx(2.0));
    CHECK_FALSE(c.arrival.has_value());
    CHECK(c.false_time);
  }
  SUBCASE("already there") {
    const ClassicalArrival c = classical_toa(0.0, 1.0);
    CHECK(c.theta == 0.0);
    CHECK_FALSE(c.arrival.has_value());
    CHECK(c.false_time);
  }
  SUBCASE("at rest") {
    CHECK_THROWS_AS(classical_toa(1.0, 0.0), UndefinedArrivalError);
  }
}

TEST_CASE("current of a modulated real envelope is p0 |g|^2") {
  const double p0 = 3.0;
  WaveFunction psi(kGrid, Rep::position);
  for (int j = 0; j < kGrid.n(); ++j) {
    const double x = kGrid.x(j);
    psi.amp[j] = std::exp(-x * x / 4.0) * std::polar(1.0, p0 * x);
  }
  psi.normalize();
  const std::vector<double> j = current_profile(psi);
  double worst = 0.0;
  for (int i = 0; i < kGrid.n(); ++i) {
    worst = std::max(worst, std::abs(j[i] - p0 * std::norm(psi.amp[i])));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("current vanishes for real states and at an odd state's node") {
  WaveFunction real_state(kGrid, Rep::position);
  for (int j = 0; j < kGrid.n(); ++j) {
    const double x = kGrid.x(j);
    real_state.amp[j] = std::exp(-(x - 2.0) * (x - 2.0) / 4.0);
  }
  real_state.normalize();
  for (double j : current_profile(real_state)) {
    CHECK(std::abs(j) < 1e-12);
  }

  PacketSpec spec;
  spec.kind = PacketKind::odd_pair;
  const WaveFunction odd = make_packet(spec, kGrid);
  CHECK(std::abs(probability_current(odd, 0.0)) < 1e-13);
}

TEST_CASE("probes interpolate and refuse points off the grid") {
  WaveFunction psi(kGrid, Rep::position);
  for (int j = 0; j < kGrid.n(); ++j) psi.amp[j] = kGrid.x(j);

  const double x_mid = kGrid.x(100) + 0.5 * kGrid.dx();
  CHECK(std::abs(probe_amplitude(psi, x_mid) -
                 Complex(x_mid, 0.0)) < 1e-12);
  CHECK(std::abs(probe_amplitude(psi, kGrid.x(100)) -
                 Complex(kGrid.x(100), 0.0)) < 1e-12);
  CHECK_THROWS_AS(probe_amplitude(psi, -100.0), InputError);
  CHECK_THROWS_AS(probability_current(psi, 1e9), InputError);
}

TEST_CASE("peak detection splits, merges, and thresholds") {
  SUBCASE("two separated bumps") {
    std::vector<double> d(101, 0.0);
    for (int i = 0; i < 101; ++i) {
      d[i] = std::exp(-0.05 * (i - 30) * (i - 30)) +
             0.8 * std::exp(-0.05 * (i - 70) * (i - 70));
    }
    const std::vector<Peak> peaks = peak_detect(synthetic_density(d));
    REQUIRE(peaks.size() == 2);
    CHECK(peaks[0].index == 30);
    CHECK(peaks[1].index == 70);
    CHECK(peaks[0].location < peaks[1].location);
  }

  SUBCASE("close maxima merge into one") {
    std::vector<double> d(40, 0.0);
    d[20] = 1.0;
    d[22] = 0.9;
    const std::vector<Peak> peaks = peak_detect(synthetic_density(d));
    REQUIRE(peaks.size() == 1);
    CHECK(peaks[0].index == 20);
  }

  SUBCASE("sub-threshold ripples are ignored") {
    std::vector<double> d(40, 0.0);
    d[10] = 1.0;
    d[30] = 0.01;
    const std::vector<Peak> peaks = peak_detect(synthetic_density(d));
    REQUIRE(peaks.size() == 1);
    CHECK(peaks[0].index == 10);
  }

  SUBCASE("flat top counts once") {
    std::vector<double> d(40, 0.0);
    d[20] = 1.0;
    d[21] = 1.0;
    const std::vector<Peak> peaks = peak_detect(synthetic_density(d));
    CHECK(peaks.size() == 1);
  }
}

TEST_CASE("auto window captures the spectral mass") {
  const WaveFunction psi = right_mover(4.0, 0.5, -8.0);
  const ThetaGrid tg = auto_theta_window(psi, 1001);
  CHECK(tg.samples() == 1001);
  const ArrivalDistribution dist = kijowski_theta_density(psi, tg);
  CHECK(dist.mass() > 0.999 * to_pseudoenergy(psi).norm_sq());
}
