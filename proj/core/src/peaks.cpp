#include "toa/peaks.hpp"

#include <algorithm>

namespace toa {

std::vector<Peak> peak_detect(const ArrivalDistribution& dist) {
  std::vector<Peak> peaks;
  const int n = dist.size();
  if (n < 3) return peaks;

  const double global_max = *std::max_element(dist.density.begin(),
                                              dist.density.end());
  if (!(global_max > 0.0)) return peaks;
  const double floor = 0.05 * global_max;

  // Strict rise on the left, non-strict fall on the right, so a flat-topped
  // peak reports its left edge once.
  std::vector<Peak> raw;
  for (int i = 1; i + 1 < n; ++i) {
    if (dist.density[i] >= floor && dist.density[i] > dist.density[i - 1] &&
        dist.density[i] >= dist.density[i + 1]) {
      raw.push_back({i, dist.axis[i], dist.density[i]});
    }
  }

  // Candidates within three bins of each other are one peak; keep the taller.
  for (const Peak& cand : raw) {
    if (!peaks.empty() && cand.index - peaks.back().index <= 3) {
      if (cand.height > peaks.back().height) peaks.back() = cand;
    } else {
      peaks.push_back(cand);
    }
  }
  return peaks;
}

}  // namespace toa
