#include "toa/packets.hpp"

#include <cmath>
#include <sstream>

#include "toa/errors.hpp"
#include "toa/transforms.hpp"

namespace toa {

namespace {

CVector gaussian_samples(const PacketSpec& spec, const SpatialGrid& grid) {
  CVector h(grid.n());
  const double inv_4s2 = 1.0 / (4.0 * spec.sigma * spec.sigma);
  for (int j = 0; j < grid.n(); ++j) {
    const double u = grid.x(j) - spec.center;
    h[j] = std::exp(-u * u * inv_4s2) *
           std::polar(1.0, spec.momentum * grid.x(j));
  }
  return h;
}

}  // namespace

WaveFunction make_packet(const PacketSpec& spec, const SpatialGrid& grid) {
  if (spec.kind == PacketKind::theta_step) {
    return theta_step_state(spec.theta1, spec.theta2, grid);
  }

  if (!(spec.sigma > 0.0)) {
    throw InputError("width must be positive");
  }
  if (!(spec.sigma > 2.0 * grid.dx())) {
    std::ostringstream msg;
    msg << "width " << spec.sigma << " is under 2*dx = " << 2.0 * grid.dx()
        << "; the packet would alias";
    throw ResolutionError(msg.str());
  }

  const bool pair = spec.kind != PacketKind::gaussian;
  if (pair) {
    if (!(std::abs(spec.center) > 4.0 * spec.sigma)) {
      throw InputError("pair packets need |center| > 4*sigma");
    }
    if (std::abs(grid.x_min() + 0.5 * grid.length()) > 1e-9) {
      throw InputError("pair packets need a box symmetric about x = 0");
    }
  }

  const CVector h = gaussian_samples(spec, grid);
  WaveFunction psi(grid, Rep::position);
  if (!pair) {
    psi.amp = h;
  } else {
    // x_{(n-j) mod n} = -x_j on a symmetric box, so h[(n-j) mod n] samples
    // h(-x_j) exactly and the packet's parity is exact.
    const double sign = spec.kind == PacketKind::odd_pair ? -1.0 : 1.0;
    const int n = grid.n();
    for (int j = 0; j < n; ++j) {
      const int jm = (n - j) % n;
      psi.amp[j] = h[j] + sign * h[jm];
    }
  }
  psi.normalize();
  return psi;
}

}  // namespace toa
