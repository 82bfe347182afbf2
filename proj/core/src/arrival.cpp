#include "toa/arrival.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "nudft.hpp"
#include "toa/errors.hpp"
#include "toa/transforms.hpp"

namespace toa {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

WaveFunction as_momentum(const WaveFunction& psi) {
  return psi.rep == Rep::momentum ? psi : to_momentum(psi);
}

std::vector<double> uniform_weights(const ThetaGrid& tg) {
  return std::vector<double>(tg.samples(), tg.dtheta());
}

// Piecewise-linear read of a sampled density, zero outside its axis.
double interp_density(const ArrivalDistribution& d, double t) {
  if (d.size() == 0) return 0.0;
  if (t <= d.axis.front() || t >= d.axis.back()) {
    return t == d.axis.front() ? d.density.front()
           : t == d.axis.back() ? d.density.back()
                                : 0.0;
  }
  const auto it = std::upper_bound(d.axis.begin(), d.axis.end(), t);
  const int i = static_cast<int>(it - d.axis.begin());
  const double frac = (t - d.axis[i - 1]) / (d.axis[i] - d.axis[i - 1]);
  return d.density[i - 1] + frac * (d.density[i] - d.density[i - 1]);
}

}  // namespace

double ArrivalDistribution::mass() const {
  double total = 0.0;
  for (int i = 0; i < size(); ++i) total += density[i] * weight[i];
  return total;
}

ArrivalDistribution kijowski_theta_density(const WaveFunction& psi,
                                           const ThetaGrid& tg) {
  const PseudoSamples ps = to_pseudoenergy(as_momentum(psi));
  const CVector amp = pseudotime_amplitude(ps, tg);

  ArrivalDistribution dist;
  dist.axis = tg.values();
  dist.density.resize(tg.samples());
  for (int l = 0; l < tg.samples(); ++l) dist.density[l] = std::norm(amp[l]);
  dist.weight = uniform_weights(tg);
  dist.daxis = tg.dtheta();
  dist.kind = DistributionKind::theta_spectral;
  return dist;
}

ArrivalDistribution povm_density(const WaveFunction& psi, const ThetaGrid& tg) {
  const PseudoSamples ps = to_pseudoenergy(as_momentum(psi));
  const double scale = 1.0 / std::sqrt(kTwoPi);

  // Right movers: xi = +p^2/2, kernel e^{-i t xi}. Left movers: xi = -p^2/2,
  // so the physical phase e^{-i t p^2/2} is e^{+i t xi} on that branch.
  std::vector<double> xi_pos, xi_neg;
  CVector coeff_pos, coeff_neg;
  for (int k = 0; k < ps.size(); ++k) {
    const Complex c = scale * ps.weight[k] * ps.amp[k];
    if (ps.xi[k] > 0.0) {
      xi_pos.push_back(ps.xi[k]);
      coeff_pos.push_back(c);
    } else {
      xi_neg.push_back(ps.xi[k]);
      coeff_neg.push_back(c);
    }
  }

  CVector plus(tg.samples()), minus(tg.samples());
  detail::nudft_sum(xi_pos, coeff_pos, tg.theta_min(), tg.dtheta(),
                    tg.samples(), -1.0, plus.data());
  detail::nudft_sum(xi_neg, coeff_neg, tg.theta_min(), tg.dtheta(),
                    tg.samples(), +1.0, minus.data());

  ArrivalDistribution dist;
  dist.axis = tg.values();
  dist.density.resize(tg.samples());
  for (int l = 0; l < tg.samples(); ++l) {
    dist.density[l] = std::norm(plus[l]) + std::norm(minus[l]);
  }
  dist.weight = uniform_weights(tg);
  dist.daxis = tg.dtheta();
  dist.kind = DistributionKind::povm;
  return dist;
}

double window_probability(const ArrivalDistribution& dist, double t0,
                          double t1) {
  if (!(t1 > t0)) throw InputError("window needs t1 > t0");
  double total = 0.0;
  for (int i = 0; i < dist.size(); ++i) {
    const double lo = dist.axis[i] - 0.5 * dist.weight[i];
    const double hi = dist.axis[i] + 0.5 * dist.weight[i];
    const double overlap = std::min(hi, t1) - std::max(lo, t0);
    if (overlap > 0.0) total += dist.density[i] * overlap;
  }
  return total;
}

double l1_distance(const ArrivalDistribution& a, const ArrivalDistribution& b) {
  if (a.size() == 0 || b.size() == 0) {
    throw InputError("cannot compare empty distributions");
  }
  const bool same_axis = [&] {
    if (a.size() != b.size()) return false;
    for (int i = 0; i < a.size(); ++i) {
      if (std::abs(a.axis[i] - b.axis[i]) > 1e-12) return false;
      if (std::abs(a.weight[i] - b.weight[i]) > 1e-12) return false;
    }
    return true;
  }();
  if (same_axis) {
    double total = 0.0;
    for (int i = 0; i < a.size(); ++i) {
      total += std::abs(a.density[i] - b.density[i]) * a.weight[i];
    }
    return total;
  }

  const double lo = std::min(a.axis.front(), b.axis.front());
  const double hi = std::max(a.axis.back(), b.axis.back());
  const double step = 0.5 * std::min(a.daxis, b.daxis);
  if (!(step > 0.0)) throw InputError("distributions need a positive bin width");
  const int m = static_cast<int>(std::ceil((hi - lo) / step)) + 1;
  double total = 0.0;
  for (int i = 0; i < m; ++i) {
    const double t = lo + i * step;
    total += std::abs(interp_density(a, t) - interp_density(b, t)) * step;
  }
  return total;
}

ClassicalArrival classical_toa(double x, double p) {
  if (p == 0.0) {
    throw UndefinedArrivalError("arrival time is undefined for p = 0");
  }
  ClassicalArrival result;
  result.theta = -x / std::abs(p);
  const double crossing = -x / p;
  if (crossing > 0.0) result.arrival = crossing;
  result.false_time =
      !result.arrival.has_value() || *result.arrival != result.theta;
  return result;
}

std::vector<double> current_profile(const WaveFunction& psi) {
  require_rep(psi, Rep::position, "current_profile");
  WaveFunction tilde = to_momentum(psi);
  const SpatialGrid& g = tilde.grid;
  for (int k = 0; k < g.n(); ++k) {
    tilde.amp[k] *= Complex(0.0, g.p(k));
  }
  tilde.amp[g.nyquist_index()] = 0.0;
  const WaveFunction dpsi = to_position(tilde);

  std::vector<double> j(g.n());
  for (int i = 0; i < g.n(); ++i) {
    j[i] = std::imag(std::conj(psi.amp[i]) * dpsi.amp[i]);
  }
  return j;
}

namespace {

// Shared clamp + linear interpolation over the position lattice.
template <typename T, typename Get>
T interp_on_grid(const SpatialGrid& g, double x, Get get) {
  const double last = g.x(g.n() - 1);
  if (x < g.x_min() || x > last) {
    std::ostringstream msg;
    msg << "probe x = " << x << " lies outside the grid [" << g.x_min()
        << ", " << last << "]";
    throw InputError(msg.str());
  }
  const double u = (x - g.x_min()) / g.dx();
  const int j = std::min(static_cast<int>(u), g.n() - 2);
  const double frac = u - j;
  return get(j) * (1.0 - frac) + get(j + 1) * frac;
}

}  // namespace

double probability_current(const WaveFunction& psi, double x_probe) {
  const std::vector<double> j = current_profile(psi);
  return interp_on_grid<double>(psi.grid, x_probe,
                                [&](int i) { return j[i]; });
}

Complex probe_amplitude(const WaveFunction& psi, double x) {
  require_rep(psi, Rep::position, "probe_amplitude");
  return interp_on_grid<Complex>(psi.grid, x,
                                 [&](int i) { return psi.amp[i]; });
}

ThetaGrid auto_theta_window(const WaveFunction& psi, int samples) {
  const PseudoSamples ps = to_pseudoenergy(as_momentum(psi));
  const double target = 0.999 * ps.norm_sq();
  for (double w = 8.0; w <= 2048.0; w *= 2.0) {
    const ThetaGrid probe = ThetaGrid::span(-w, w, 513);
    if (kijowski_theta_density(psi, probe).mass() >= target) {
      return ThetaGrid::span(-w, w, samples);
    }
  }
  throw WindowError(
      "spectral mass will not fit in |theta| <= 2048; the state is too "
      "spread in pseudotime");
}

}  // namespace toa
