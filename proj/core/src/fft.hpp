#pragma once

#include <complex>

namespace toa::detail {

// Unscaled power-of-two c2c DFT, sign = -1 forward (e^{-2pi i kj/n}) or
// +1 backward. in and out may alias. Plans are cached per (n, sign) and
// created unaligned, so any buffer works.
void fft_unscaled(const std::complex<double>* in, std::complex<double>* out,
                  int n, int sign);

}  // namespace toa::detail
