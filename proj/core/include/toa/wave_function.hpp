#pragma once

#include <complex>
#include <string>
#include <vector>

#include "toa/grids.hpp"

namespace toa {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

enum class Rep { position, momentum };

const char* rep_name(Rep rep);

// State vector on a SpatialGrid, tagged with its representation.
// Norms are continuum-normalized: sum |amp|^2 * dx in position space,
// sum |amp|^2 * dp in momentum space.
struct WaveFunction {
  WaveFunction(SpatialGrid grid, Rep rep);
  WaveFunction(SpatialGrid grid, Rep rep, CVector amplitudes);

  SpatialGrid grid;
  Rep rep;
  CVector amp;

  double measure() const { return rep == Rep::position ? grid.dx() : grid.dp(); }
  double norm_sq() const;

  // Scales to unit norm; throws NumericsError on zero or non-finite norm.
  WaveFunction& normalize();

  bool finite() const;
};

// Throws RepresentationError unless psi is in the expected representation.
void require_rep(const WaveFunction& psi, Rep expected, const std::string& op);

// Throws InputError unless both states live on the same grid.
void require_same_grid(const WaveFunction& a, const WaveFunction& b,
                       const std::string& op);

// L2 distance between two states in the same representation.
double distance(const WaveFunction& a, const WaveFunction& b);

}  // namespace toa
