#include "toa/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fft.hpp"
#include "toa/errors.hpp"
#include "toa/transforms.hpp"

namespace toa {

namespace {

// Applies a momentum-space phase e^{-i energy(p) t} in whichever
// representation the state arrived in, returning the same representation.
template <typename EnergyFn>
WaveFunction phase_evolve(const WaveFunction& psi, double t, EnergyFn energy) {
  const bool from_position = psi.rep == Rep::position;
  WaveFunction tilde = from_position ? to_momentum(psi) : psi;
  const SpatialGrid& g = tilde.grid;
  for (int k = 0; k < g.n(); ++k) {
    const double p = g.p(k);
    tilde.amp[k] *= std::polar(1.0, -energy(p) * t);
  }
  return from_position ? to_position(tilde) : tilde;
}

// Derivative at `at` of the quadratic through (t0,f0), (t1,f1), (t2,f2).
double quadratic_slope(double t0, double t1, double t2, double f0, double f1,
                       double f2, double at) {
  return f0 * (2.0 * at - t1 - t2) / ((t0 - t1) * (t0 - t2)) +
         f1 * (2.0 * at - t0 - t2) / ((t1 - t0) * (t1 - t2)) +
         f2 * (2.0 * at - t0 - t1) / ((t2 - t0) * (t2 - t1));
}

std::vector<double> loss_rate(const std::vector<double>& t,
                              const std::vector<double>& n) {
  const int m = static_cast<int>(t.size());
  std::vector<double> rate(m, 0.0);
  if (m < 3) return rate;
  rate[0] = -quadratic_slope(t[0], t[1], t[2], n[0], n[1], n[2], t[0]);
  for (int i = 1; i + 1 < m; ++i) {
    rate[i] = -quadratic_slope(t[i - 1], t[i], t[i + 1], n[i - 1], n[i],
                               n[i + 1], t[i]);
  }
  rate[m - 1] = -quadratic_slope(t[m - 3], t[m - 2], t[m - 1], n[m - 3],
                                 n[m - 2], n[m - 1], t[m - 1]);
  for (auto& r : rate) r = std::max(r, 0.0);
  return rate;
}

std::vector<double> trapezoid_weights(const std::vector<double>& t) {
  const int m = static_cast<int>(t.size());
  std::vector<double> w(m, 0.0);
  if (m < 2) return w;
  w[0] = 0.5 * (t[1] - t[0]);
  for (int i = 1; i + 1 < m; ++i) w[i] = 0.5 * (t[i + 1] - t[i - 1]);
  w[m - 1] = 0.5 * (t[m - 1] - t[m - 2]);
  return w;
}

}  // namespace

WaveFunction free_evolve(const WaveFunction& psi, double t) {
  return phase_evolve(psi, t, [](double p) { return 0.5 * p * p; });
}

WaveFunction pseudoenergy_evolve(const WaveFunction& psi, double t) {
  return phase_evolve(psi, t, [](double p) { return 0.5 * p * std::abs(p); });
}

std::vector<double> absorber_values(const AbsorberSpec& spec,
                                    const SpatialGrid& grid) {
  if (!(spec.half_width > 0.0) || !std::isfinite(spec.half_width)) {
    throw InputError("absorber half-width must be positive");
  }
  if (spec.strength < 0.0 || !std::isfinite(spec.strength)) {
    throw InputError("absorber strength must be >= 0");
  }
  if (!std::isfinite(spec.x_center)) {
    throw InputError("absorber center must be finite");
  }
  std::vector<double> v(grid.n(), 0.0);
  for (int j = 0; j < grid.n(); ++j) {
    const double u = grid.x(j) - spec.x_center;
    switch (spec.profile) {
      case AbsorberProfile::gaussian:
        v[j] = spec.strength *
               std::exp(-u * u / (2.0 * spec.half_width * spec.half_width));
        break;
      case AbsorberProfile::rectangular:
        v[j] = std::abs(u) <= spec.half_width ? spec.strength : 0.0;
        break;
    }
  }
  return v;
}

double EvolutionRecord::norm_at(double t) const {
  if (times.empty()) throw InputError("empty evolution record");
  if (t <= times.front()) return norms.front();
  if (t >= times.back()) return norms.back();
  const auto it = std::upper_bound(times.begin(), times.end(), t);
  const int i = static_cast<int>(it - times.begin());
  const double frac = (t - times[i - 1]) / (times[i] - times[i - 1]);
  return norms[i - 1] + frac * (norms[i] - norms[i - 1]);
}

CapResult cap_evolve(const WaveFunction& psi, double t_total, double dt,
                     const AbsorberSpec& absorber) {
  require_rep(psi, Rep::position, "cap_evolve");
  if (!(dt > 0.0) || !(dt <= t_total)) {
    throw InputError("need 0 < dt <= t_total");
  }
  if (dt * absorber.strength > 5.0) {
    throw InputError("dt * strength must be <= 5 for a stable split step");
  }
  if (!psi.finite()) {
    throw NumericsError("initial state has non-finite amplitudes");
  }

  const SpatialGrid& g = psi.grid;
  const int n = g.n();
  const std::vector<double> v = absorber_values(absorber, g);

  // Kinetic phases in raw FFT bin order; the x_min twiddles of the
  // round trip cancel, so the split step never leaves FFT layout.
  const auto kinetic_for = [&](double step) {
    CVector kin(n);
    for (int f = 0; f < n; ++f) {
      const int m = f <= n / 2 ? f : f - n;
      const double p = g.dp() * m;
      kin[f] = std::polar(1.0, -0.5 * p * p * step);
    }
    return kin;
  };
  const auto damping_for = [&](double step) {
    std::vector<double> damp(n);
    for (int j = 0; j < n; ++j) damp[j] = std::exp(-0.5 * v[j] * step);
    return damp;
  };

  CVector kin = kinetic_for(dt);
  std::vector<double> damp = damping_for(dt);
  const double inv_n = 1.0 / n;

  CapResult result{psi, {}};
  WaveFunction& state = result.psi;
  EvolutionRecord& record = result.record;

  const int steps = static_cast<int>(std::ceil(t_total / dt - 1e-9));
  record.times.reserve(steps + 1);
  record.norms.reserve(steps + 1);
  record.times.push_back(0.0);
  record.norms.push_back(state.norm_sq());

  CVector work(n);
  double t = 0.0;
  for (int s = 0; s < steps; ++s) {
    double step = dt;
    if (s == steps - 1) {
      step = t_total - t;
      if (std::abs(step - dt) > 1e-12 * dt) {
        kin = kinetic_for(step);
        damp = damping_for(step);
      }
    }
    for (int j = 0; j < n; ++j) state.amp[j] *= damp[j];
    detail::fft_unscaled(state.amp.data(), work.data(), n, -1);
    for (int f = 0; f < n; ++f) work[f] *= kin[f];
    detail::fft_unscaled(work.data(), state.amp.data(), n, +1);
    for (int j = 0; j < n; ++j) state.amp[j] *= inv_n * damp[j];

    t = s == steps - 1 ? t_total : t + step;
    const double norm = state.norm_sq();
    if (!std::isfinite(norm)) {
      std::ostringstream msg;
      msg << "norm stopped being finite at t = " << t;
      throw NumericsError(msg.str());
    }
    record.times.push_back(t);
    record.norms.push_back(norm);
  }

  record.absorbed_density = loss_rate(record.times, record.norms);
  return result;
}

ArrivalDistribution absorption_density(const EvolutionRecord& record) {
  const int m = static_cast<int>(record.times.size());
  if (m < 3 || record.norms.size() != record.times.size()) {
    throw InputError("evolution record needs at least three samples");
  }
  for (int i = 1; i < m; ++i) {
    if (!(record.times[i] > record.times[i - 1])) {
      throw InputError("record times must be strictly increasing");
    }
    if (record.norms[i] > record.norms[i - 1] + 1e-9) {
      throw InputError("record norms must be nonincreasing");
    }
  }

  ArrivalDistribution dist;
  dist.axis = record.times;
  dist.density = record.absorbed_density.size() == record.times.size()
                     ? record.absorbed_density
                     : loss_rate(record.times, record.norms);
  dist.weight = trapezoid_weights(record.times);
  dist.daxis = (record.times.back() - record.times.front()) / (m - 1);
  dist.kind = DistributionKind::cap_absorption;
  return dist;
}

}  // namespace toa
