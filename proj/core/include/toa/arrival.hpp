#pragma once

#include <optional>
#include <vector>

#include "toa/grids.hpp"
#include "toa/transforms.hpp"
#include "toa/wave_function.hpp"

namespace toa {

enum class DistributionKind { theta_spectral, povm, cap_absorption, classical };

// Density samples over a theta- or t-axis. weight holds the quadrature
// weight of each sample (the bin width; trapezoid-halved at the ends for
// absorption records), so mass() = sum density*weight.
struct ArrivalDistribution {
  std::vector<double> axis;
  std::vector<double> density;
  std::vector<double> weight;
  double daxis = 0.0;
  DistributionKind kind = DistributionKind::theta_spectral;

  int size() const { return static_cast<int>(axis.size()); }
  double mass() const;
};

// Pseudotime spectral density |phi^(theta)|^2 (the Kijowski distribution
// evaluated over both momentum branches coherently).
ArrivalDistribution kijowski_theta_density(const WaveFunction& psi,
                                           const ThetaGrid& tg);

// Screen POVM density at x = 0 for left and right movers:
//   density(t) = |A+(t)|^2 + |A-(t)|^2,
//   A+-(t) = (2pi)^{-1/2} integral_0^inf dp sqrt(p) e^{-i p^2 t/2} psi~(+-p).
// Both branches carry the physical free phase, and the branch sum is
// incoherent, which makes the density covariant under free evolution.
ArrivalDistribution povm_density(const WaveFunction& psi, const ThetaGrid& tg);

// Probability assigned to the window [t0, t1], with fractional end bins.
double window_probability(const ArrivalDistribution& dist, double t0, double t1);

// L1 distance between two densities. Same-axis inputs are compared binwise;
// otherwise both are linearly interpolated onto the union of their supports.
double l1_distance(const ArrivalDistribution& a, const ArrivalDistribution& b);

// Classical pseudotime theta = -x/|p| against the true arrival time -x/p
// (defined only when positive). false_time flags a disagreement.
struct ClassicalArrival {
  double theta = 0.0;
  std::optional<double> arrival;
  bool false_time = false;
};

ClassicalArrival classical_toa(double x, double p);

// Probability current J(x) = Im(psi*(x) d psi/dx) with spectral
// differentiation, linearly interpolated to x_probe.
double probability_current(const WaveFunction& psi, double x_probe);

// J on the full grid.
std::vector<double> current_profile(const WaveFunction& psi);

// Linearly interpolated amplitude of a position-space state at x.
Complex probe_amplitude(const WaveFunction& psi, double x);

// Symmetric theta window sized by doubling until it captures >= 0.999 of
// the spectral mass (or the cap is reached).
ThetaGrid auto_theta_window(const WaveFunction& psi, int samples);

}  // namespace toa
