#pragma once

#include <complex>
#include <vector>

namespace toa::detail {

// out[l] = sum_k coeff[k] * exp(i * sign * (theta0 + l*dtheta) * xi[k]).
// Inner loop advances the phase by complex recurrence and resynchronizes
// against std::polar every 256 samples to stop rounding drift.
void nudft_sum(const std::vector<double>& xi,
               const std::vector<std::complex<double>>& coeff, double theta0,
               double dtheta, int m, double sign,
               std::complex<double>* out);

}  // namespace toa::detail
