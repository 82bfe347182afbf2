#include "fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <vector>

namespace toa::detail {
namespace {

std::mutex plan_mutex;
std::map<std::pair<int, int>, fftw_plan> plan_cache;

// Plans are created in-place and unaligned, so the same plan can run on any
// caller buffer through fftw_execute_dft (new-array execution requires
// matching in-place-ness, hence the copy in fft_unscaled).
fftw_plan plan_for(int n, int sign) {
  std::lock_guard<std::mutex> lock(plan_mutex);
  auto key = std::make_pair(n, sign);
  auto it = plan_cache.find(key);
  if (it != plan_cache.end()) return it->second;
  std::vector<std::complex<double>> scratch(n);
  auto* ptr = reinterpret_cast<fftw_complex*>(scratch.data());
  fftw_plan plan = fftw_plan_dft_1d(
      n, ptr, ptr, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
      FFTW_ESTIMATE | FFTW_UNALIGNED);
  plan_cache.emplace(key, plan);
  return plan;
}

}  // namespace

void fft_unscaled(const std::complex<double>* in, std::complex<double>* out,
                  int n, int sign) {
  fftw_plan plan = plan_for(n, sign);
  if (in != out) std::copy(in, in + n, out);
  auto* ptr = reinterpret_cast<fftw_complex*>(out);
  fftw_execute_dft(plan, ptr, ptr);
}

}  // namespace toa::detail
