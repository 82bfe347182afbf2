#pragma once

#include <vector>

#include "toa/arrival.hpp"

namespace toa {

struct Peak {
  int index = 0;
  double location = 0.0;
  double height = 0.0;
};

// Local maxima above 5% of the global maximum; maxima closer than 3 bins
// are merged into the higher one. Returned sorted by location.
std::vector<Peak> peak_detect(const ArrivalDistribution& dist);

}  // namespace toa
