#include "toa/bohmian.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "toa/arrival.hpp"
#include "toa/errors.hpp"
#include "toa/evolution.hpp"
#include "toa/transforms.hpp"

namespace toa {

namespace {

constexpr double kNodeFloor = 1e-12;
constexpr double kMaxCellFraction = 0.25;
constexpr int kMaxSubsteps = 4096;

struct FieldFrame {
  std::vector<double> rho;
  std::vector<double> current;
};

FieldFrame frame_of(const WaveFunction& psi) {
  FieldFrame f;
  f.rho.resize(psi.grid.n());
  for (int j = 0; j < psi.grid.n(); ++j) f.rho[j] = std::norm(psi.amp[j]);
  f.current = current_profile(psi);
  return f;
}

// Advances one trajectory across [t0, t1] given field frames at both ends.
// Velocity reads interpolate rho and J bilinearly (x within the cell, t
// within the interval) and divide afterwards. Returns false when the
// trajectory hits a node or leaves the grid; `traj` then carries the reason.
class IntervalStepper {
 public:
  IntervalStepper(const SpatialGrid& grid, double t0, double t1,
                  const std::vector<double>& rho0,
                  const std::vector<double>& current0,
                  const std::vector<double>& rho1,
                  const std::vector<double>& current1)
      : grid_(grid),
        t0_(t0),
        t1_(t1),
        rho0_(rho0),
        current0_(current0),
        rho1_(rho1),
        current1_(current1) {}

  bool advance(Trajectory& traj, double& x) const {
    double v = 0.0;
    if (!velocity(x, 0.0, traj, v)) return false;
    const double span = t1_ - t0_;
    int substeps = 1;
    if (std::abs(v) * span > kMaxCellFraction * grid_.dx()) {
      substeps = static_cast<int>(
          std::ceil(std::abs(v) * span / (kMaxCellFraction * grid_.dx())));
      substeps = std::min(substeps, kMaxSubsteps);
    }
    const double h = span / substeps;
    for (int s = 0; s < substeps; ++s) {
      const double frac = static_cast<double>(s) / substeps;
      if (!velocity(x, frac, traj, v)) return false;
      const double x_mid = x + 0.5 * h * v;
      const double frac_mid = (s + 0.5) / substeps;
      double v_mid = 0.0;
      if (!velocity(x_mid, frac_mid, traj, v_mid)) return false;
      x += h * v_mid;
    }
    return true;
  }

 private:
  bool velocity(double x, double tfrac, Trajectory& traj, double& v) const {
    const double last = grid_.x(grid_.n() - 1);
    if (x < grid_.x_min() || x > last) {
      traj.truncated = true;
      traj.reason = "left the grid";
      return false;
    }
    const double u = (x - grid_.x_min()) / grid_.dx();
    const int j = std::min(static_cast<int>(u), grid_.n() - 2);
    const double fx = u - j;

    const auto blend = [&](const std::vector<double>& f0,
                           const std::vector<double>& f1) {
      const double at_t0 = f0[j] * (1.0 - fx) + f0[j + 1] * fx;
      const double at_t1 = f1[j] * (1.0 - fx) + f1[j + 1] * fx;
      return at_t0 * (1.0 - tfrac) + at_t1 * tfrac;
    };
    const double rho = blend(rho0_, rho1_);
    if (rho < kNodeFloor) {
      traj.truncated = true;
      std::ostringstream msg;
      msg << "node proximity: |psi|^2 = " << rho << " at x = " << x;
      traj.reason = msg.str();
      return false;
    }
    v = blend(current0_, current1_) / rho;
    return true;
  }

  const SpatialGrid& grid_;
  double t0_, t1_;
  const std::vector<double>& rho0_;
  const std::vector<double>& current0_;
  const std::vector<double>& rho1_;
  const std::vector<double>& current1_;
};

void require_ascending(const std::vector<double>& times) {
  if (times.size() < 2) {
    throw InputError("need at least two snapshot times");
  }
  for (size_t i = 1; i < times.size(); ++i) {
    if (!(times[i] > times[i - 1])) {
      throw InputError("snapshot times must be strictly increasing");
    }
  }
}

}  // namespace

double Trajectory::min_abs_x() const {
  double best = std::abs(x.front());
  for (double xi : x) best = std::min(best, std::abs(xi));
  return best;
}

WaveSequence free_snapshots(const WaveFunction& psi0,
                            const std::vector<double>& times) {
  require_ascending(times);
  const WaveFunction tilde0 =
      psi0.rep == Rep::momentum ? psi0 : to_momentum(psi0);

  WaveSequence seq(psi0.grid);
  seq.times = times;
  for (double t : times) {
    const WaveFunction psi = to_position(free_evolve(tilde0, t));
    FieldFrame f = frame_of(psi);
    seq.rho.push_back(std::move(f.rho));
    seq.current.push_back(std::move(f.current));
  }
  return seq;
}

std::vector<Trajectory> bohmian_trajectories(
    const WaveSequence& seq, const std::vector<double>& starts) {
  require_ascending(seq.times);
  if (seq.rho.size() != seq.times.size() ||
      seq.current.size() != seq.times.size()) {
    throw InputError("sequence fields do not match its time axis");
  }

  std::vector<Trajectory> trajectories;
  for (double x0 : starts) {
    Trajectory traj;
    traj.start = x0;
    traj.t.push_back(seq.times.front());
    traj.x.push_back(x0);
    double x = x0;
    for (size_t i = 0; i + 1 < seq.times.size(); ++i) {
      IntervalStepper stepper(seq.grid, seq.times[i], seq.times[i + 1],
                              seq.rho[i], seq.current[i], seq.rho[i + 1],
                              seq.current[i + 1]);
      if (!stepper.advance(traj, x)) break;
      traj.t.push_back(seq.times[i + 1]);
      traj.x.push_back(x);
    }
    trajectories.push_back(std::move(traj));
  }
  return trajectories;
}

std::vector<Trajectory> bohmian_trajectories_free(
    const WaveFunction& psi0, double t_total, double dt,
    const std::vector<double>& starts) {
  if (!(dt > 0.0) || !(dt <= t_total)) {
    throw InputError("need 0 < dt <= t_total");
  }
  WaveFunction tilde = psi0.rep == Rep::momentum ? psi0 : to_momentum(psi0);
  const SpatialGrid& g = tilde.grid;

  std::vector<Trajectory> trajectories(starts.size());
  std::vector<double> xs(starts.size());
  std::vector<bool> alive(starts.size(), true);
  for (size_t i = 0; i < starts.size(); ++i) {
    trajectories[i].start = starts[i];
    trajectories[i].t.push_back(0.0);
    trajectories[i].x.push_back(starts[i]);
    xs[i] = starts[i];
  }

  const int steps = static_cast<int>(std::ceil(t_total / dt - 1e-9));
  FieldFrame prev = frame_of(to_position(tilde));
  double t = 0.0;
  for (int s = 0; s < steps; ++s) {
    const double step = s == steps - 1 ? t_total - t : dt;
    const double t_next = s == steps - 1 ? t_total : t + step;
    for (int k = 0; k < g.n(); ++k) {
      const double p = g.p(k);
      tilde.amp[k] *= std::polar(1.0, -0.5 * p * p * step);
    }
    FieldFrame next = frame_of(to_position(tilde));

    IntervalStepper stepper(g, t, t_next, prev.rho, prev.current, next.rho,
                            next.current);
    for (size_t i = 0; i < starts.size(); ++i) {
      if (!alive[i]) continue;
      if (!stepper.advance(trajectories[i], xs[i])) {
        alive[i] = false;
        continue;
      }
      trajectories[i].t.push_back(t_next);
      trajectories[i].x.push_back(xs[i]);
    }
    prev = std::move(next);
    t = t_next;
  }
  return trajectories;
}

}  // namespace toa
