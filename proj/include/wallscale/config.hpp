#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wallscale/bounds.hpp"
#include "wallscale/grid.hpp"
#include "wallscale/minimize.hpp"
#include "wallscale/neel1d.hpp"
#include "wallscale/sweep.hpp"

namespace wallscale {

/// Tool configuration, read from a single JSON file.  Every knob has a
/// default so a minimal config like {"params": {"Q": 1e-3}} works.
struct RunConfig {
  std::uint64_t seed = 20260810;
  MaterialParams params;

  // grid policy for build/energy/relax commands
  std::size_t n1 = 0;          // 0 = auto from resolution rule
  std::size_t n3 = 0;
  double L_over_t = 0.0;       // 0 = auto (truncation rule)
  TruncationRule trunc;
  double grid_resolution = 4.0;
  std::size_t n1_cap = 4097;
  std::size_t n3_cap = 49;

  double construction_delta = 0.1;
  double mollify_width = 0.0;  // 0 = auto max(h, d/t)

  RelaxOptions relax;
  NeelBranchOptions neel;
  SweepOptions sweep_opts;     // Qs / t_over_d lists for the sweep command
  std::vector<double> crossover_Q;
  double crossover_lo = 1.2, crossover_hi = 8.0, crossover_rel_width = 0.02;

  int bounds_n_perturbations = 100;
  double bounds_amplitude = 0.2;
  std::size_t bounds_n1 = 241, bounds_n3 = 21;
  double bounds_L_over_t = 6.0;

  /// canonical compact JSON of the parsed config, embedded in outputs
  std::string compact;
};

RunConfig load_config(const std::string& path);
RunConfig parse_config_json(const std::string& text, const std::string& origin = "<string>");

/// grid for the single-point commands; neel_tail switches the L rule
StripGrid grid_from_config(const RunConfig& cfg, bool neel_tail);

}  // namespace wallscale
