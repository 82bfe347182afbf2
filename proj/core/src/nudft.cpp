#include "nudft.hpp"

#include <algorithm>
#include <cmath>

namespace toa::detail {

namespace {
constexpr int kResyncStride = 256;
}

void nudft_sum(const std::vector<double>& xi,
               const std::vector<std::complex<double>>& coeff, double theta0,
               double dtheta, int m, double sign,
               std::complex<double>* out) {
  std::fill(out, out + m, std::complex<double>(0.0, 0.0));
  const int count = static_cast<int>(xi.size());
  for (int k = 0; k < count; ++k) {
    const double phase0 = sign * theta0 * xi[k];
    const double dphase = sign * dtheta * xi[k];
    const std::complex<double> step = std::polar(1.0, dphase);
    std::complex<double> term = coeff[k] * std::polar(1.0, phase0);
    for (int l = 0; l < m; ++l) {
      if (l > 0 && l % kResyncStride == 0) {
        term = coeff[k] * std::polar(1.0, phase0 + dphase * l);
      }
      out[l] += term;
      term *= step;
    }
  }
}

}  // namespace toa::detail
