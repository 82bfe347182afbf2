#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toa/arrival.hpp"
#include "toa/evolution.hpp"
#include "toa/grids.hpp"
#include "toa/packets.hpp"

namespace toa {

// One scalar result. cmp is one of '<' '>' '=' (pass means value cmp
// threshold, with '=' meaning |value - threshold| <= 1e-9); metrics without
// a threshold are informational and never fail. origin records where the
// threshold comes from (config key, exact symmetry, measured baseline).
struct Metric {
  std::string name;
  double value = 0.0;
  std::optional<double> threshold;
  char cmp = '<';
  bool passed = true;
  std::string origin;
};

struct Series {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

struct ExperimentReport {
  std::string name;
  std::vector<Metric> metrics;
  std::vector<Series> series;
  std::vector<std::string> notes;

  void add_metric(Metric m);
  const Metric* find(const std::string& name) const;
  const Series* find_series(const std::string& name) const;
  bool all_passed() const;
};

// Residuals of the spectral density under the two evolutions:
//   residual_xi: L1 | D(pseudoenergy_evolve(psi,s)) - D(psi) shifted by s |
//   residual_h:  same with free_evolve.
// The shift follows remaining-time semantics: D(evolve(psi,s)) is compared
// on axis theta against D(psi) on axis theta + s. Throws WindowError when
// |s| is not smaller than the axis span.
struct CovarianceResiduals {
  double xi = 0.0;
  double h = 0.0;
};

CovarianceResiduals covariance_test(const WaveFunction& psi, double s,
                                    const ThetaGrid& tg);

// Tunables shared by the interference experiments (odd and symmetric pair).
struct InterferenceOptions {
  ThetaGrid tg = ThetaGrid::span(-8.0, 8.0, 2048);
  double t_total = 8.0;
  double dt = 1e-3;
  double current_sample_dt = 1e-2;
  double peak_halo = 2.0;        // half-width added around the outer peaks
  double max_current = 1e-10;    // |J(0,t)| bound, exact-parity origin
  double absorbed_max = 1e-4;    // odd-packet absorbed-mass bound
  double peak_mass_min = 0.9;    // spectral mass around the peaks
  double min_l1_split = 0.1;     // L1(spectral, povm) lower bound
};

// Odd pair aimed at the origin: spectral peak count and mass, POVM density,
// |J(0,t)| under free evolution, absorbed mass behind an even screen, and
// the L1 distance between the spectral and POVM densities.
// Requires an odd_pair spec and an absorber centered at x = 0.
ExperimentReport run_odd_experiment(const PacketSpec& packet,
                                    const AbsorberSpec& absorber,
                                    const SpatialGrid& grid,
                                    const InterferenceOptions& opt = {});

// Symmetric pair: same battery, but the screen does absorb; reports the
// absorbed mass and the shape distance between the renormalized absorbed
// state and the free one (a pure c-number attenuation would give zero).
ExperimentReport run_symmetric_experiment(const PacketSpec& packet,
                                          const AbsorberSpec& absorber,
                                          const SpatialGrid& grid,
                                          const InterferenceOptions& opt = {});

struct ThetaStepOptions {
  ThetaGrid tg = ThetaGrid::span(1.0, 3.0, 4096);
  AbsorberSpec absorber{0.0, 0.5, 2.0, AbsorberProfile::gaussian};
  double dt = 1e-3;
  double probe_delta = 0.5;      // absorption/spectral window [theta1-delta, theta1]
  double far_fraction_min = 0.4;
  double spectral_window_max = 1e-3;
  double absorption_ratio_min = 10.0;
  double step_window_mass_min = 0.95;
};

// Indicator-spectrum state on [theta1, theta2]: fraction of |psi|^2 beyond
// |x| > far_radius as t -> theta1, the growing amplitude at x_probe, the
// spectral probability of the silent window [theta1-delta, theta1], and the
// screen absorption accumulated in that same window.
// times must approach theta1 from below (ascending, all < theta1).
ExperimentReport run_theta_step_experiment(double theta1, double theta2,
                                           double far_radius, double x_probe,
                                           const std::vector<double>& times,
                                           const SpatialGrid& grid,
                                           const ThetaStepOptions& opt = {});

// Fraction of |psi|^2 with |x| > radius.
double far_fraction(const WaveFunction& psi, double radius);

// Fraction of classical particles whose modulus clock theta = -x/|p| is not
// their true crossing time. The ensemble mirrors the packet: position and
// momentum magnitudes are drawn from the gaussian lobe's densities, and a
// fair sign flip sends half the particles in mirrored (x, p) -> (-x, -p)
// states, so momenta of both signs are equally represented.
double classical_false_fraction(const PacketSpec& packet, int samples,
                                unsigned seed);

// Spectral and branch-split densities plus their peaks for one packet, with
// the classical false-fraction of the matching aimed ensemble reported
// alongside.
ExperimentReport run_arrival_experiment(const PacketSpec& packet,
                                        const ThetaGrid& tg,
                                        const SpatialGrid& grid,
                                        int ensemble_samples, unsigned seed);

}  // namespace toa
