#pragma once

#include <string>

#include "toa/experiments.hpp"

namespace toa::cli {

// Formats v as scientific notation with 17 significant digits, enough to
// reproduce the double exactly on read-back.
std::string format_value(double v);

// Writes the series as CSV: one header row with the column names, then one
// row per sample, comma separated. Throws std::runtime_error on I/O failure.
void write_csv(const std::string& path, const Series& series);

}  // namespace toa::cli
