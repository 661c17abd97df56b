#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wallscale/grid.hpp"
#include "wallscale/minimize.hpp"
#include "wallscale/neel1d.hpp"

namespace wallscale {

/// Per-point grid rules for the parameter study.  The Bloch branch gets a 2D
/// strip grid (compact support, L = bloch_L_over_t * t); the Neel branch is
/// relaxed on the graded 1D profile grid from neel1d.
struct SweepGridPolicy {
  double bloch_L_over_t = 5.0;
  double resolution = 4.0;      // points per min(d, delta*t) feature
  std::size_t n1_cap = 1601;
  std::size_t n3_cap = 49;
  std::size_t n1_min = 61;
  std::size_t n3_min = 7;
};

struct SweepOptions {
  double d = 1.0;                  // base length scale
  std::vector<double> Qs;
  std::vector<double> t_over_d;
  SweepGridPolicy grid;
  RelaxOptions bloch_relax;
  NeelBranchOptions neel;
  double construction_delta = 0.1;
  std::uint64_t seed = 0;          // recorded in outputs
};

struct SweepPoint {
  double Q = 0.0;
  double t_over_d = 0.0;
  double E_bloch = 0.0;
  double E_neel = 0.0;
  double E_min = 0.0;
  std::string winner;      // "bloch" | "neel"
  double pred_thick = 0.0; // d^2
  double pred_thin = 0.0;  // t^2 / ln(t^2/(Q d^2))
  double ratio_thick = 0.0;
  double ratio_thin = 0.0;
  double l2_ratio = 0.0;
  double l1_ratio = 0.0;
  double lb_ratio = 0.0;
  std::size_t n1 = 0, n3 = 0;  // Bloch 2D grid
  double L_over_t = 0.0;
  std::size_t iters_bloch = 0, iters_neel = 0;
  std::string status = "ok";   // ok | skipped_regime | failed: ...
};

struct SweepTable {
  std::vector<SweepPoint> points;
};

StripGrid bloch_grid_for(const MaterialParams& params, const SweepGridPolicy& policy,
                         double delta);

/// evaluate one parameter point: build both initializers, relax each in its
/// branch, compare against the two scaling predictions
SweepPoint evaluate_sweep_point(const MaterialParams& params, const SweepOptions& opts);

SweepTable run_sweep(const SweepOptions& opts);

struct CrossoverProbe {
  double t_over_d;
  double E_bloch, E_neel;
};

struct CrossoverResult {
  double Q = 0.0;
  double t_star_over_d = 0.0;
  double predicted_scale = 0.0;  // sqrt(ln(1/Q))
  double ratio = 0.0;            // t_star / (d * predicted_scale)
  std::vector<CrossoverProbe> probes;
};

/// bisection for E_bloch = E_neel on the bracket (relative width 2% default);
/// every probe rebuilds and relaxes from fresh initializers
CrossoverResult find_crossover(double Q, double bracket_lo, double bracket_hi,
                               const SweepOptions& opts, double rel_width = 0.02);

struct BranchStats {
  std::size_t n = 0;
  double min_ratio = 0.0, max_ratio = 0.0, geomean_ratio = 0.0;
  double band = 0.0;         // max_ratio / min_ratio
  double flatness = 0.0;     // max E / min E
  double slope = 0.0;        // log E vs log prediction
  bool slope_valid = false;
};

struct ScalingReport {
  BranchStats thick, thin;
};

ScalingReport fit_scaling(const SweepTable& table);

}  // namespace wallscale
