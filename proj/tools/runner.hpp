#pragma once

#include "config.hpp"
#include "toa/experiments.hpp"

namespace toa::cli {

// Builds the report for the configured experiment without touching the
// filesystem. Exposed so tests can inspect reports directly.
ExperimentReport build_report(const RunConfig& cfg);

// Runs the experiment and writes one CSV per series, summary.txt and
// manifest.txt into cfg.out. Returns 0 when every thresholded metric
// passed, 1 otherwise.
int run(const RunConfig& cfg);

}  // namespace toa::cli
