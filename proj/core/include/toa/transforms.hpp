#pragma once

#include <vector>

#include "toa/grids.hpp"
#include "toa/wave_function.hpp"

namespace toa {

// Unitary Fourier pair with the e^{-ipx} forward kernel:
//   psi~(p) = (2pi)^{-1/2} integral psi(x) e^{-ipx} dx
//   psi(x)  = (2pi)^{-1/2} integral psi~(p) e^{+ipx} dp
WaveFunction to_momentum(const WaveFunction& psi);
WaveFunction to_position(const WaveFunction& psi);

// Pseudoenergy samples of a momentum-space state. The pseudoenergy
// xi = sgn(p) p^2/2 is strictly increasing in p, so the samples stay sorted.
// Each momentum bin p_k != 0 contributes
//   xi_k = sgn(p_k) p_k^2 / 2,   weight w_k = |p_k| dp,
//   amp_k = psi~(p_k) / sqrt(|p_k|),
// which preserves the norm: sum w_k |amp_k|^2 = sum |psi~|^2 dp.
// The p = 0 bin carries no pseudoenergy measure; its probability mass
// |psi~(0)|^2 dp is excluded and reported as dropped_mass.
struct PseudoSamples {
  std::vector<double> xi;
  std::vector<double> weight;
  CVector amp;
  double dropped_mass = 0.0;

  int size() const { return static_cast<int>(xi.size()); }
  double norm_sq() const;
};

PseudoSamples to_pseudoenergy(const WaveFunction& psi);

// Pseudotime amplitude on a theta axis, evaluated as the direct
// nonuniform quadrature
//   phi^(theta_l) = (2pi)^{-1/2} sum_k w_k e^{-i theta_l xi_k} amp_k.
// O(n*m); no resampling onto a uniform xi grid.
CVector pseudotime_amplitude(const PseudoSamples& ps, const ThetaGrid& tg);

// State whose pseudotime spectrum is the indicator of [theta1, theta2]:
//   phi(xi) = (e^{i theta2 xi} - e^{i theta1 xi}) / (i xi sqrt(2pi)),
// lifted to momentum space via psi~(p) = sqrt(|p|) phi(xi(p)) and returned
// normalized in position space. Throws ResolutionError when the grid's
// pseudoenergy bandwidth holds less than 99% of the indicator's mass.
WaveFunction theta_step_state(double theta1, double theta2,
                              const SpatialGrid& grid);

}  // namespace toa
