#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "wallscale/field.hpp"

namespace wallscale {

/// Per-wavenumber representation of the magnetostatic potential u of a field
/// on the truncated strip.  The x1 direction is treated as 2L-periodic
/// (samples i = 0..n1-2; the last column is the periodic image of the first,
/// which is exact for clamped admissible fields since m1 = m3 = 0 there and
/// m2 carries no charge).  For each mode the 1D problem -u'' + k^2 u = rho
/// is solved on the whole x3 line with the decaying Green function
/// exp(-|k||x3-y3|)/(2|k|); the k = 0 mode uses -|x3-y3|/2 against the
/// structurally zero-mass charge.
struct StrayFieldSolution {
  std::vector<double> wavenumbers;  // k_n >= 0, units 1/length (n = 0..N/2)
  std::size_t n3 = 0;
  /// potential at the strip nodes, mode-major [n*n3 + j], in units of t
  std::vector<std::complex<double>> u_modes;
  double dirichlet_energy = 0.0;  // integral of |grad u|^2 over R^2, length^2
  double charge_pairing = 0.0;    // integral over the strip of m . grad u, length^2
  double k0_residual_mass = 0.0;  // truncation diagnostic, should be ~round-off
};

/// summary without the per-mode potential (fast path for energy evaluation)
struct StraySummary {
  double dirichlet_energy = 0.0;
  double charge_pairing = 0.0;
  double k0_residual_mass = 0.0;
};

StrayFieldSolution solve_stray_field(const MagnetizationField& field);

StraySummary stray_energy(const MagnetizationField& field);

/// Dirichlet energy plus d(stray)/d(m) at every node; g1, g3 are resized to
/// grid.size().  The potential is even in the charge, so dE/dm2 = 0.
StraySummary stray_energy_and_gradient(const MagnetizationField& field,
                                       std::vector<double>& g1, std::vector<double>& g3);

}  // namespace wallscale
