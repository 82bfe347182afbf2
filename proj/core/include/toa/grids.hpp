#pragma once

#include <vector>

namespace toa {

// Uniform position grid x_j = x_min + j*dx, j = 0..n-1, periodic with
// length L = n*dx. The conjugate momentum lattice is p = dp*m for integer
// m in (-n/2, n/2], dp = 2*pi/(n*dx), stored in increasing order.
class SpatialGrid {
 public:
  SpatialGrid(int n, double x_min, double dx);

  int n() const { return n_; }
  double x_min() const { return x_min_; }
  double dx() const { return dx_; }
  double dp() const { return dp_; }
  double length() const { return n_ * dx_; }

  double x(int j) const { return x_min_ + j * dx_; }

  // k = 0..n-1 maps to m = k - (n/2 - 1), so p runs from dp*(-n/2+1) up to
  // the Nyquist momentum dp*n/2 = pi/dx.
  double p(int k) const { return dp_ * (k - (n_ / 2 - 1)); }
  int p_zero_index() const { return n_ / 2 - 1; }
  int nyquist_index() const { return n_ - 1; }

  // DFT bin holding lattice momentum index k (frequency m mod n).
  int fft_bin(int k) const {
    int m = k - (n_ / 2 - 1);
    return (m % n_ + n_) % n_;
  }

  bool operator==(const SpatialGrid& other) const {
    return n_ == other.n_ && x_min_ == other.x_min_ && dx_ == other.dx_;
  }
  bool operator!=(const SpatialGrid& other) const { return !(*this == other); }

 private:
  int n_;
  double x_min_;
  double dx_;
  double dp_;
};

// Uniform evaluation axis theta_l = theta_min + l*dtheta, l = 0..m-1, used
// for both pseudotime spectra and arrival-time densities.
class ThetaGrid {
 public:
  ThetaGrid(int samples, double theta_min, double dtheta);

  // Convenience: m samples spanning [lo, hi] inclusive.
  static ThetaGrid span(double lo, double hi, int samples);

  int samples() const { return m_; }
  double theta_min() const { return theta_min_; }
  double dtheta() const { return dtheta_; }
  double theta(int l) const { return theta_min_ + l * dtheta_; }
  double theta_max() const { return theta(m_ - 1); }

  std::vector<double> values() const;

 private:
  int m_;
  double theta_min_;
  double dtheta_;
};

}  // namespace toa
