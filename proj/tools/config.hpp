#pragma once

#include <map>
#include <string>

#include "toa/evolution.hpp"
#include "toa/grids.hpp"
#include "toa/packets.hpp"

namespace toa::cli {

inline constexpr const char* kToolVersion = "0.1.0";

// Keys that were explicitly set, by config file or flag. Values stay as
// text until resolve() parses them, so both sources share one code path.
using KeyValues = std::map<std::string, std::string>;

// Reads a flat key = value file. Blank lines and lines starting with '#'
// are skipped. Unknown keys are rejected here so a typo fails before any
// number parsing. Throws InputError naming the key or the malformed line.
KeyValues parse_config_file(const std::string& path);

// Fully resolved run description. Defaults depend on the experiment
// selector; every field is echoed to the manifest, so a manifest re-parse
// reproduces the run without consulting defaults again.
struct RunConfig {
  std::string experiment = "odd";
  std::string out = "out";

  int n = 4096;
  double x_min = -40.0;
  double dx = 80.0 / 4096;

  std::string packet = "odd-pair";
  double center = -10.0;
  double sigma = 1.0;
  double p0 = 3.0;
  double theta1 = 2.0;
  double theta2 = 2.1;

  double theta_min = -8.0;
  double theta_max = 8.0;
  int theta_samples = 2048;

  double v0 = 0.01;
  double half_width = 0.05;
  double x_center = 0.0;
  std::string profile = "gaussian";

  double dt = 1e-3;
  double t_total = 8.0;

  unsigned seed = 1;
  int samples = 10000;
  double s = 1.0;
  double far_radius = 2.0;
  double x_probe = 0.003;
  double probe_delta = 0.5;

  bool operator==(const RunConfig& other) const = default;
};

// Applies per-experiment defaults, then the explicit overrides, then
// validates names and ranges. Throws InputError naming the offending key.
RunConfig resolve(const KeyValues& overrides);

// Mappings into the core types.
SpatialGrid grid_of(const RunConfig& cfg);
ThetaGrid theta_grid_of(const RunConfig& cfg);
PacketSpec packet_of(const RunConfig& cfg);
AbsorberSpec absorber_of(const RunConfig& cfg);

// Every field as key = value text, in a fixed order. Doubles use %.17g so
// the round trip through resolve() is exact.
std::map<std::string, std::string> key_values_of(const RunConfig& cfg);

// Writes the config echo plus tool version and wall time (as comments, so
// the file parses back as a config).
void write_manifest(const RunConfig& cfg, const std::string& path,
                    double wall_seconds);

}  // namespace toa::cli
