#include "toa/wave_function.hpp"

#include <cmath>
#include <string>

#include "toa/errors.hpp"

namespace toa {

const char* rep_name(Rep rep) {
  return rep == Rep::position ? "position" : "momentum";
}

WaveFunction::WaveFunction(SpatialGrid g, Rep r)
    : grid(g), rep(r), amp(g.n(), Complex(0.0, 0.0)) {}

WaveFunction::WaveFunction(SpatialGrid g, Rep r, CVector amplitudes)
    : grid(g), rep(r), amp(std::move(amplitudes)) {
  if (static_cast<int>(amp.size()) != grid.n())
    throw InputError("amplitude array size " + std::to_string(amp.size()) +
                     " does not match grid n = " + std::to_string(grid.n()));
}

double WaveFunction::norm_sq() const {
  double s = 0.0;
  for (const Complex& a : amp) s += std::norm(a);
  return s * measure();
}

WaveFunction& WaveFunction::normalize() {
  double n2 = norm_sq();
  if (!(n2 > 0.0) || !std::isfinite(n2))
    throw NumericsError("cannot normalize state with norm^2 = " +
                        std::to_string(n2));
  double scale = 1.0 / std::sqrt(n2);
  for (Complex& a : amp) a *= scale;
  return *this;
}

bool WaveFunction::finite() const {
  for (const Complex& a : amp)
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) return false;
  return true;
}

void require_rep(const WaveFunction& psi, Rep expected, const std::string& op) {
  if (psi.rep != expected)
    throw RepresentationError(op + " expects a " + rep_name(expected) +
                              "-space state, got " + rep_name(psi.rep));
}

void require_same_grid(const WaveFunction& a, const WaveFunction& b,
                       const std::string& op) {
  if (a.grid != b.grid) throw InputError(op + ": states live on different grids");
  if (a.rep != b.rep)
    throw RepresentationError(op + ": states are in different representations");
}

double distance(const WaveFunction& a, const WaveFunction& b) {
  require_same_grid(a, b, "distance");
  double s = 0.0;
  for (int j = 0; j < a.grid.n(); ++j) s += std::norm(a.amp[j] - b.amp[j]);
  return std::sqrt(s * a.measure());
}

}  // namespace toa
