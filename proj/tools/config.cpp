#include "config.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <vector>

#include "toa/errors.hpp"

namespace toa::cli {

namespace {

const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> keys = {
      "experiment", "out",       "n",          "x-min",
      "dx",         "packet",    "center",     "sigma",
      "p0",         "theta1",    "theta2",     "theta-min",
      "theta-max",  "theta-samples", "v0",     "half-width",
      "x-center",   "profile",   "dt",         "t-total",
      "seed",       "samples",   "s",          "far-radius",
      "x-probe",    "probe-delta"};
  return keys;
}

bool known_key(const std::string& key) {
  for (const std::string& k : known_keys()) {
    if (k == key) return true;
  }
  return false;
}

std::string trim(const std::string& text) {
  const size_t first = text.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const size_t last = text.find_last_not_of(" \t\r");
  return text.substr(first, last - first + 1);
}

double parse_double(const std::string& key, const std::string& text) {
  const char* begin = text.c_str();
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || errno == ERANGE || !std::isfinite(v)) {
    throw InputError("config key '" + key + "' wants a finite number, got '" +
                     text + "'");
  }
  return v;
}

long parse_integer(const std::string& key, const std::string& text) {
  const char* begin = text.c_str();
  char* end = nullptr;
  errno = 0;
  const long v = std::strtol(begin, &end, 10);
  if (end == begin || *end != '\0' || errno == ERANGE) {
    throw InputError("config key '" + key + "' wants an integer, got '" +
                     text + "'");
  }
  return v;
}

int parse_int(const std::string& key, const std::string& text) {
  return static_cast<int>(parse_integer(key, text));
}

unsigned parse_unsigned(const std::string& key, const std::string& text) {
  const long v = parse_integer(key, text);
  if (v < 0) {
    throw InputError("config key '" + key + "' must not be negative");
  }
  return static_cast<unsigned>(v);
}

RunConfig defaults_for(const std::string& experiment) {
  RunConfig d;
  d.experiment = experiment;
  if (experiment == "odd") {
    // The struct initializers are the odd-pair defaults.
  } else if (experiment == "symmetric") {
    d.packet = "symmetric-pair";
  } else if (experiment == "theta-step") {
    d.packet = "theta-step";
    d.n = 8192;
    d.x_min = -163.84;
    d.dx = 0.04;
    d.theta_min = 1.0;
    d.theta_max = 3.0;
    d.theta_samples = 4096;
    d.v0 = 2.0;
    d.half_width = 0.5;
    d.t_total = 2.0;
  } else if (experiment == "covariance") {
    d.n = 2048;
    d.dx = 80.0 / 2048;
  } else if (experiment == "evolve") {
    d.packet = "gaussian";
    d.center = -8.0;
    d.p0 = 4.0;
    d.n = 1024;
    d.x_min = -20.0;
    d.dx = 40.0 / 1024;
    d.v0 = 2.0;
    d.half_width = 2.0;
    d.t_total = 6.0;
  } else if (experiment == "arrival") {
    d.packet = "gaussian";
    d.center = -8.0;
    d.p0 = 4.0;
    d.n = 2048;
    d.dx = 80.0 / 2048;
    d.theta_min = -4.0;
    d.theta_max = 8.0;
    d.theta_samples = 1601;
  } else {
    throw InputError("unknown experiment '" + experiment +
                     "' (choose odd, symmetric, theta-step, covariance, "
                     "evolve, arrival)");
  }
  return d;
}

void apply(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "experiment") cfg.experiment = value;
  else if (key == "out") cfg.out = value;
  else if (key == "n") cfg.n = parse_int(key, value);
  else if (key == "x-min") cfg.x_min = parse_double(key, value);
  else if (key == "dx") cfg.dx = parse_double(key, value);
  else if (key == "packet") cfg.packet = value;
  else if (key == "center") cfg.center = parse_double(key, value);
  else if (key == "sigma") cfg.sigma = parse_double(key, value);
  else if (key == "p0") cfg.p0 = parse_double(key, value);
  else if (key == "theta1") cfg.theta1 = parse_double(key, value);
  else if (key == "theta2") cfg.theta2 = parse_double(key, value);
  else if (key == "theta-min") cfg.theta_min = parse_double(key, value);
  else if (key == "theta-max") cfg.theta_max = parse_double(key, value);
  else if (key == "theta-samples") cfg.theta_samples = parse_int(key, value);
  else if (key == "v0") cfg.v0 = parse_double(key, value);
  else if (key == "half-width") cfg.half_width = parse_double(key, value);
  else if (key == "x-center") cfg.x_center = parse_double(key, value);
  else if (key == "profile") cfg.profile = value;
  else if (key == "dt") cfg.dt = parse_double(key, value);
  else if (key == "t-total") cfg.t_total = parse_double(key, value);
  else if (key == "seed") cfg.seed = parse_unsigned(key, value);
  else if (key == "samples") cfg.samples = parse_int(key, value);
  else if (key == "s") cfg.s = parse_double(key, value);
  else if (key == "far-radius") cfg.far_radius = parse_double(key, value);
  else if (key == "x-probe") cfg.x_probe = parse_double(key, value);
  else if (key == "probe-delta") cfg.probe_delta = parse_double(key, value);
  else throw InputError("unknown config key '" + key + "'");
}

void validate(const RunConfig& cfg) {
  if (cfg.out.empty()) throw InputError("out directory must be named");
  if (!(cfg.sigma > 0.0)) throw InputError("width must be positive");
  if (cfg.packet != "gaussian" && cfg.packet != "odd-pair" &&
      cfg.packet != "symmetric-pair" && cfg.packet != "theta-step") {
    throw InputError("unknown packet '" + cfg.packet +
                     "' (choose gaussian, odd-pair, symmetric-pair, "
                     "theta-step)");
  }
  if (cfg.profile != "gaussian" && cfg.profile != "rectangular") {
    throw InputError("unknown profile '" + cfg.profile +
                     "' (choose gaussian, rectangular)");
  }
  if (cfg.theta_samples < 2) {
    throw InputError("theta-samples must be at least 2");
  }
  if (!(cfg.theta_max > cfg.theta_min)) {
    throw InputError("theta-max must exceed theta-min");
  }
  if (cfg.samples < 1) throw InputError("samples must be at least 1");
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

KeyValues parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read config file '" + path + "'");

  KeyValues kv;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#') continue;
    const size_t eq = text.find('=');
    if (eq == std::string::npos) {
      throw InputError("config line " + std::to_string(line_no) +
                       " is not key = value: '" + text + "'");
    }
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (!known_key(key)) throw InputError("unknown config key '" + key + "'");
    kv[key] = value;
  }
  return kv;
}

RunConfig resolve(const KeyValues& overrides) {
  std::string experiment = "odd";
  if (const auto it = overrides.find("experiment"); it != overrides.end()) {
    experiment = it->second;
  }
  RunConfig cfg = defaults_for(experiment);
  for (const auto& [key, value] : overrides) apply(cfg, key, value);
  validate(cfg);
  return cfg;
}

SpatialGrid grid_of(const RunConfig& cfg) {
  return SpatialGrid(cfg.n, cfg.x_min, cfg.dx);
}

ThetaGrid theta_grid_of(const RunConfig& cfg) {
  return ThetaGrid::span(cfg.theta_min, cfg.theta_max, cfg.theta_samples);
}

PacketSpec packet_of(const RunConfig& cfg) {
  PacketSpec spec;
  if (cfg.packet == "gaussian") spec.kind = PacketKind::gaussian;
  else if (cfg.packet == "odd-pair") spec.kind = PacketKind::odd_pair;
  else if (cfg.packet == "symmetric-pair") spec.kind = PacketKind::symmetric_pair;
  else spec.kind = PacketKind::theta_step;
  spec.center = cfg.center;
  spec.sigma = cfg.sigma;
  spec.momentum = cfg.p0;
  spec.theta1 = cfg.theta1;
  spec.theta2 = cfg.theta2;
  return spec;
}

AbsorberSpec absorber_of(const RunConfig& cfg) {
  AbsorberSpec spec;
  spec.x_center = cfg.x_center;
  spec.half_width = cfg.half_width;
  spec.strength = cfg.v0;
  spec.profile = cfg.profile == "gaussian" ? AbsorberProfile::gaussian
                                           : AbsorberProfile::rectangular;
  return spec;
}

std::map<std::string, std::string> key_values_of(const RunConfig& cfg) {
  std::map<std::string, std::string> kv;
  kv["experiment"] = cfg.experiment;
  kv["out"] = cfg.out;
  kv["n"] = std::to_string(cfg.n);
  kv["x-min"] = format_double(cfg.x_min);
  kv["dx"] = format_double(cfg.dx);
  kv["packet"] = cfg.packet;
  kv["center"] = format_double(cfg.center);
  kv["sigma"] = format_double(cfg.sigma);
  kv["p0"] = format_double(cfg.p0);
  kv["theta1"] = format_double(cfg.theta1);
  kv["theta2"] = format_double(cfg.theta2);
  kv["theta-min"] = format_double(cfg.theta_min);
  kv["theta-max"] = format_double(cfg.theta_max);
  kv["theta-samples"] = std::to_string(cfg.theta_samples);
  kv["v0"] = format_double(cfg.v0);
  kv["half-width"] = format_double(cfg.half_width);
  kv["x-center"] = format_double(cfg.x_center);
  kv["profile"] = cfg.profile;
  kv["dt"] = format_double(cfg.dt);
  kv["t-total"] = format_double(cfg.t_total);
  kv["seed"] = std::to_string(cfg.seed);
  kv["samples"] = std::to_string(cfg.samples);
  kv["s"] = format_double(cfg.s);
  kv["far-radius"] = format_double(cfg.far_radius);
  kv["x-probe"] = format_double(cfg.x_probe);
  kv["probe-delta"] = format_double(cfg.probe_delta);
  return kv;
}

void write_manifest(const RunConfig& cfg, const std::string& path,
                    double wall_seconds) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open manifest '" + path + "'");
  out << "# toa " << kToolVersion << '\n';
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3f", wall_seconds);
  out << "# wall clock: " << buf << " s\n";
  for (const auto& [key, value] : key_values_of(cfg)) {
    out << key << " = " << value << '\n';
  }
  if (!out) throw InputError("write to manifest '" + path + "' failed");
}

}  // namespace toa::cli
