#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wallscale/energy.hpp"
#include "wallscale/field.hpp"
#include "wallscale/grid.hpp"

namespace wallscale {

struct RelaxOptions {
  std::size_t max_iters = 5000;
  double grad_tol = 1e-8;        // sup-norm of the tangent gradient
  double step0 = 0.0;            // 0 = auto-scaled from the first gradient
  double armijo_factor = 0.5;
  double armijo_c = 1e-4;        // sufficient-decrease constant, in (0, 1/2]
  double stall_factor = 1e-14;   // give up when step < stall_factor * initial
  bool record_trace = true;

  void validate() const;
};

struct TraceRow {
  std::size_t iter;
  double exchange, anisotropy, stray, total, grad_norm;
};

struct RelaxReport {
  std::size_t iterations = 0;
  std::vector<TraceRow> trace;   // strictly non-increasing totals
  double final_grad_norm = 0.0;
  std::string termination;       // converged | max_iters | stalled
  double initial_step = 0.0;
  std::uint64_t fd_probe_seed = 0;  // seed used by any FD descent probe
  EnergyBreakdown final_energy;
};

/// Projected gradient descent with Armijo backtracking: step along the
/// negative tangent gradient, renormalize to S^2, re-clamp the end columns.
std::pair<MagnetizationField, RelaxReport> relax(const MagnetizationField& field,
                                                 const MaterialParams& params,
                                                 const RelaxOptions& opts);

struct BestOfResult {
  MagnetizationField field;
  EnergyBreakdown energy;
  std::string provenance;  // name of the winning initializer
  std::vector<std::pair<std::string, RelaxReport>> reports;
};

BestOfResult best_of(const std::vector<std::pair<std::string, MagnetizationField>>& inits,
                     const MaterialParams& params, const RelaxOptions& opts);

}  // namespace wallscale
