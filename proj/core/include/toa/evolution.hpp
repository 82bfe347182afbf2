#pragma once

#include <vector>

#include "toa/arrival.hpp"
#include "toa/wave_function.hpp"

namespace toa {

// Free evolution psi~ -> e^{-i p^2 t/2} psi~ (m = 1, hbar = 1).
// Accepts either representation and returns the same one.
WaveFunction free_evolve(const WaveFunction& psi, double t);

// Pseudoenergy evolution psi~ -> e^{-i sgn(p) p^2 t/2} psi~. Agrees with
// free evolution on right-movers; conjugate phase on the p < 0 branch.
WaveFunction pseudoenergy_evolve(const WaveFunction& psi, double t);

enum class AbsorberProfile { gaussian, rectangular };

// Absorbing screen -i V(x), even about x_center:
//   gaussian:    V(x) = V0 exp(-(x-x_center)^2 / (2 half_width^2))
//   rectangular: V(x) = V0 on |x - x_center| <= half_width
struct AbsorberSpec {
  double x_center = 0.0;
  double half_width = 0.05;
  double strength = 0.0;
  AbsorberProfile profile = AbsorberProfile::gaussian;
};

std::vector<double> absorber_values(const AbsorberSpec& spec,
                                    const SpatialGrid& grid);

// Norm history of an absorbed evolution. times[i] are the step boundaries
// (times[0] = 0), norms[i] = N(times[i]), absorbed_density[i] ~ -dN/dt via
// centered differences (second-order one-sided at the ends), clamped >= 0.
struct EvolutionRecord {
  std::vector<double> times;
  std::vector<double> norms;
  std::vector<double> absorbed_density;

  // Linear interpolation of N(t).
  double norm_at(double t) const;
};

struct CapResult {
  WaveFunction psi;
  EvolutionRecord record;
};

// Strang-split evolution under H = p^2/2 - i V(x):
//   psi <- e^{-V dt/2} F^{-1} e^{-i p^2 dt/2} F e^{-V dt/2} psi
// sampled every step. Requires 0 < dt <= t_total and dt*V0 <= 5; throws
// NumericsError if amplitudes stop being finite.
CapResult cap_evolve(const WaveFunction& psi, double t_total, double dt,
                     const AbsorberSpec& absorber);

// Arrival-time density read off a norm record, a(t) = -dN/dt.
ArrivalDistribution absorption_density(const EvolutionRecord& record);

}  // namespace toa
