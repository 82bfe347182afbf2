#pragma once

#include <string>
#include <vector>

#include "toa/grids.hpp"
#include "toa/wave_function.hpp"

namespace toa {

// Stored |psi|^2 and J snapshots on a common time axis.
struct WaveSequence {
  WaveSequence(SpatialGrid g) : grid(g) {}

  SpatialGrid grid;
  std::vector<double> times;
  std::vector<std::vector<double>> rho;
  std::vector<std::vector<double>> current;
};

// Snapshots of a freely evolving state at the given times (ascending).
WaveSequence free_snapshots(const WaveFunction& psi0,
                            const std::vector<double>& times);

struct Trajectory {
  double start = 0.0;
  std::vector<double> t;
  std::vector<double> x;
  bool truncated = false;
  std::string reason;

  double min_abs_x() const;
  double final_x() const { return x.back(); }
};

// Pilot-wave trajectories dx/dt = J/rho through the sampled fields.
// Midpoint stepping with linear interpolation in x and t; intervals are
// internally substepped when a step would cross more than a fraction of a
// cell. A trajectory entering rho < 1e-12 is truncated and flagged rather
// than integrated through the node.
std::vector<Trajectory> bohmian_trajectories(const WaveSequence& seq,
                                             const std::vector<double>& starts);

// Same integrator fed by streaming free evolution (O(1) snapshot memory):
// fields are generated at times k*dt up to t_total.
std::vector<Trajectory> bohmian_trajectories_free(
    const WaveFunction& psi0, double t_total, double dt,
    const std::vector<double>& starts);

}  // namespace toa
