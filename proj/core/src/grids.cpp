#include "toa/grids.hpp"

#include <cmath>
#include <string>

#include "toa/errors.hpp"

namespace toa {
namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

SpatialGrid::SpatialGrid(int n, double x_min, double dx)
    : n_(n), x_min_(x_min), dx_(dx) {
  if (!power_of_two(n) || n < 8)
    throw InputError("n must be a power of two >= 8 (got " +
                     std::to_string(n) + ")");
  if (!(dx > 0.0) || !std::isfinite(dx))
    throw InputError("dx must be positive (got " + std::to_string(dx) + ")");
  if (!std::isfinite(x_min))
    throw InputError("x_min must be finite");
  dp_ = kTwoPi / (n_ * dx_);
}

ThetaGrid::ThetaGrid(int samples, double theta_min, double dtheta)
    : m_(samples), theta_min_(theta_min), dtheta_(dtheta) {
  if (m_ < 2)
    throw InputError("theta-samples must be >= 2 (got " + std::to_string(m_) +
                     ")");
  if (!(dtheta_ > 0.0) || !std::isfinite(dtheta_))
    throw InputError("dtheta must be positive (got " +
                     std::to_string(dtheta_) + ")");
  if (!std::isfinite(theta_min_))
    throw InputError("theta-min must be finite");
}

ThetaGrid ThetaGrid::span(double lo, double hi, int samples) {
  if (!(hi > lo))
    throw InputError("theta window is empty (theta-min >= theta-max)");
  if (samples < 2)
    throw InputError("theta-samples must be >= 2 (got " +
                     std::to_string(samples) + ")");
  return ThetaGrid(samples, lo, (hi - lo) / (samples - 1));
}

std::vector<double> ThetaGrid::values() const {
  std::vector<double> v(m_);
  for (int l = 0; l < m_; ++l) v[l] = theta(l);
  return v;
}

}  // namespace toa
