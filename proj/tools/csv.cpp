#include "csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace toa::cli {

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

void write_csv(const std::string& path, const Series& series) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");

  for (size_t c = 0; c < series.columns.size(); ++c) {
    if (c > 0) out << ',';
    out << series.columns[c];
  }
  out << '\n';

  for (const std::vector<double>& row : series.rows) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << ',';
      out << format_value(row[c]);
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace toa::cli
