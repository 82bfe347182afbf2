#pragma once

#include "toa/grids.hpp"
#include "toa/wave_function.hpp"

namespace toa {

enum class PacketKind { gaussian, odd_pair, symmetric_pair, theta_step };

// gaussian:        N exp(-(x-center)^2/(4 sigma^2)) exp(i p0 x)
// odd_pair:        N (h(x) - h(-x)) with h the gaussian above
// symmetric_pair:  N (h(x) + h(-x))
// theta_step:      state with indicator pseudotime spectrum on [theta1, theta2]
//
// Pairs are built by mirroring grid indices, so their parity is exact on the
// periodic grid. Validation: sigma > 2*dx (else ResolutionError) and, for
// pairs, |center| > 4*sigma (else InputError), so the lobes do not overlap.
struct PacketSpec {
  PacketKind kind = PacketKind::gaussian;
  double center = -10.0;
  double sigma = 1.0;
  double momentum = 3.0;
  double theta1 = 2.0;
  double theta2 = 2.1;
};

WaveFunction make_packet(const PacketSpec& spec, const SpatialGrid& grid);

}  // namespace toa
