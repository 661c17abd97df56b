#pragma once

#include <vector>

#include "wallscale/field.hpp"
#include "wallscale/grid.hpp"
#include "wallscale/stray.hpp"

namespace wallscale {

/// Specific wall energy, split into the three terms.  Units: length^2.
struct EnergyBreakdown {
  double exchange = 0.0;
  double anisotropy = 0.0;
  double stray = 0.0;
  double total = 0.0;
  // diagnostics
  double reciprocity_defect = 0.0;   // |dirichlet - pairing| / max(dirichlet, eps)
  double k0_residual_mass = 0.0;     // truncation diagnostic from the k = 0 mode
};

/// tangent gradient of the total energy (d E / d m, projected onto the
/// tangent plane of S^2 per node, zeroed on the clamped end columns)
struct EnergyGradient {
  std::vector<double> g1, g2, g3;
  double sup_norm = 0.0;
};

double exchange_energy(const MagnetizationField& field, const MaterialParams& params);
double anisotropy_energy(const MagnetizationField& field, const MaterialParams& params);

EnergyBreakdown total_energy(const MagnetizationField& field, const MaterialParams& params);

EnergyGradient energy_gradient(const MagnetizationField& field, const MaterialParams& params);

}  // namespace wallscale
