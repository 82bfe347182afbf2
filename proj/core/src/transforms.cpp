#include "toa/transforms.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "fft.hpp"
#include "nudft.hpp"
#include "toa/errors.hpp"

namespace toa {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

WaveFunction to_momentum(const WaveFunction& psi) {
  require_rep(psi, Rep::position, "to_momentum");
  const SpatialGrid& g = psi.grid;
  const int n = g.n();

  WaveFunction out(g, Rep::momentum);
  detail::fft_unscaled(psi.amp.data(), out.amp.data(), n, -1);

  // FFT bins carry sum_j psi_j e^{-2pi i f j / n}; attach the x_min phase
  // and the dx/sqrt(2pi) measure, reordering bins into ascending momentum.
  CVector reordered(n);
  const double scale = g.dx() / std::sqrt(kTwoPi);
  for (int k = 0; k < n; ++k) {
    const double p = g.p(k);
    reordered[k] =
        scale * std::polar(1.0, -p * g.x_min()) * out.amp[g.fft_bin(k)];
  }
  out.amp = std::move(reordered);
  return out;
}

WaveFunction to_position(const WaveFunction& psi) {
  require_rep(psi, Rep::momentum, "to_position");
  const SpatialGrid& g = psi.grid;
  const int n = g.n();

  CVector staged(n);
  for (int k = 0; k < n; ++k) {
    const double p = g.p(k);
    staged[g.fft_bin(k)] = psi.amp[k] * std::polar(1.0, p * g.x_min());
  }

  WaveFunction out(g, Rep::position);
  detail::fft_unscaled(staged.data(), out.amp.data(), n, +1);
  const double scale = g.dp() / std::sqrt(kTwoPi);
  for (auto& a : out.amp) a *= scale;
  return out;
}

double PseudoSamples::norm_sq() const {
  double total = 0.0;
  for (int k = 0; k < size(); ++k) {
    total += weight[k] * std::norm(amp[k]);
  }
  return total;
}

PseudoSamples to_pseudoenergy(const WaveFunction& psi) {
  require_rep(psi, Rep::momentum, "to_pseudoenergy");
  const SpatialGrid& g = psi.grid;
  const int n = g.n();

  PseudoSamples ps;
  ps.xi.reserve(n - 1);
  ps.weight.reserve(n - 1);
  ps.amp.reserve(n - 1);
  for (int k = 0; k < n; ++k) {
    if (k == g.p_zero_index()) {
      ps.dropped_mass = std::norm(psi.amp[k]) * g.dp();
      continue;
    }
    const double p = g.p(k);
    const double abs_p = std::abs(p);
    ps.xi.push_back(0.5 * p * abs_p);
    ps.weight.push_back(abs_p * g.dp());
    ps.amp.push_back(psi.amp[k] / std::sqrt(abs_p));
  }
  return ps;
}

CVector pseudotime_amplitude(const PseudoSamples& ps, const ThetaGrid& tg) {
  if (ps.size() == 0) {
    throw InputError("no pseudoenergy samples to transform");
  }
  const int count = ps.size();
  CVector coeff(count);
  const double scale = 1.0 / std::sqrt(kTwoPi);
  for (int k = 0; k < count; ++k) {
    coeff[k] = scale * ps.weight[k] * ps.amp[k];
  }
  CVector out(tg.samples());
  detail::nudft_sum(ps.xi, coeff, tg.theta_min(), tg.dtheta(), tg.samples(),
                    -1.0, out.data());
  return out;
}

WaveFunction theta_step_state(double theta1, double theta2,
                              const SpatialGrid& grid) {
  if (!(theta2 > theta1)) {
    throw InputError("theta2 must exceed theta1");
  }

  // phi(xi) = e^{i (theta1+theta2) xi / 2} * 2 sin((theta2-theta1) xi / 2)
  //           / (xi sqrt(2pi)),
  // the cancellation-free form of (e^{i theta2 xi} - e^{i theta1 xi})
  // / (i xi sqrt(2pi)).
  const double half_span = 0.5 * (theta2 - theta1);
  const double mid = 0.5 * (theta1 + theta2);
  const double scale = 2.0 / std::sqrt(kTwoPi);

  const int n = grid.n();
  WaveFunction psi(grid, Rep::momentum);
  double captured = 0.0;
  for (int k = 0; k < n; ++k) {
    if (k == grid.p_zero_index()) continue;
    const double p = grid.p(k);
    const double abs_p = std::abs(p);
    const double xi = 0.5 * p * abs_p;
    const double envelope =
        std::abs(xi) < 1e-8 ? half_span : std::sin(half_span * xi) / xi;
    const Complex phi = scale * envelope * std::polar(1.0, mid * xi);
    captured += abs_p * grid.dp() * std::norm(phi);
    psi.amp[k] = std::sqrt(abs_p) * phi;
  }

  const double ideal = theta2 - theta1;
  if (captured < 0.99 * ideal) {
    const double p_max = grid.p(grid.nyquist_index());
    std::ostringstream msg;
    msg << "pseudotime step [" << theta1 << ", " << theta2
        << "] is too sharp for this grid: the pseudoenergy band |xi| <= "
        << 0.5 * p_max * p_max << " holds " << captured / ideal
        << " of the step's mass (need >= 0.99); widen the step or raise "
           "the momentum cutoff";
    throw ResolutionError(msg.str());
  }

  WaveFunction out = to_position(psi);
  out.normalize();
  return out;
}

}  // namespace toa
