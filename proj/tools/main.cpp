#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "config.hpp"
#include "runner.hpp"

namespace {

struct FlagSlot {
  std::string key;
  std::string help;
  std::string value;
  CLI::Option* option = nullptr;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Time-of-arrival laboratory: spectral arrival densities, absorbing "
      "screens, and pilot trajectories for one-dimensional packets."};

  std::string config_path;
  app.add_option("--config", config_path, "key = value config file");

  // Every config key doubles as a flag; flags override the file.
  std::vector<FlagSlot> slots = {
      {"experiment",
       "odd | symmetric | theta-step | covariance | evolve | arrival", "",
       nullptr},
      {"out", "output directory", "", nullptr},
      {"n", "grid points (power of two)", "", nullptr},
      {"x-min", "left edge of the position box", "", nullptr},
      {"dx", "grid spacing", "", nullptr},
      {"packet", "gaussian | odd-pair | symmetric-pair | theta-step", "",
       nullptr},
      {"center", "packet center (lobe center for pairs)", "", nullptr},
      {"sigma", "packet width", "", nullptr},
      {"p0", "packet mean momentum", "", nullptr},
      {"theta1", "lower edge of the pseudotime step", "", nullptr},
      {"theta2", "upper edge of the pseudotime step", "", nullptr},
      {"theta-min", "arrival axis start", "", nullptr},
      {"theta-max", "arrival axis end", "", nullptr},
      {"theta-samples", "arrival axis samples", "", nullptr},
      {"v0", "screen strength (0 switches it off)", "", nullptr},
      {"half-width", "screen half-width", "", nullptr},
      {"x-center", "screen center", "", nullptr},
      {"profile", "screen shape: gaussian | rectangular", "", nullptr},
      {"dt", "propagation step", "", nullptr},
      {"t-total", "propagation time", "", nullptr},
      {"seed", "ensemble random seed", "", nullptr},
      {"samples", "classical ensemble size", "", nullptr},
      {"s", "covariance time shift", "", nullptr},
      {"far-radius", "far-mass radius for theta-step", "", nullptr},
      {"x-probe", "tail probe position for theta-step", "", nullptr},
      {"probe-delta", "silent-window length before theta1", "", nullptr}};
  for (FlagSlot& slot : slots) {
    slot.option = app.add_option("--" + slot.key, slot.value, slot.help);
  }

  CLI11_PARSE(app, argc, argv);

  try {
    toa::cli::KeyValues kv;
    if (!config_path.empty()) kv = toa::cli::parse_config_file(config_path);
    for (const FlagSlot& slot : slots) {
      if (slot.option->count() > 0) kv[slot.key] = slot.value;
    }
    return toa::cli::run(toa::cli::resolve(kv));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
