#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "wallscale/energy.hpp"
#include "wallscale/field.hpp"
#include "wallscale/grid.hpp"

namespace wallscale {

/// Stream function for the asymmetric Bloch wall on the nondimensional
/// (t = 1) strip: psi = f_delta(1/2 - |x|) * w(x1), where f_delta is a smooth
/// non-decreasing flattening (0 <= f' <= 1, f = 0 for s <= delta/2, f' = 1
/// for s >= delta) and w a smooth x1 cutoff (1 for |x1| <= 1/2, 0 beyond 1).
/// gamma is the half-ellipse 4 x1^2 + x3^2 = 1/4, x1 >= 0, connecting
/// (0,-1/2) to (0,1/2); away from its endpoints |grad psi| = 1 on it.
struct BlochStream {
  StripGrid grid;
  std::vector<double> psi;                      // nondimensional values per node
  std::vector<std::array<double, 2>> gamma;     // polyline, t = 1 coordinates
  double delta = 0.1;
  double max_grad_sq = 0.0;       // max |grad_h psi|^2 after the rescale pass
  double grad_allowance = 0.0;    // 10 h^2 reporting allowance
  double rescale = 1.0;           // (1+eta)^-1 applied if the bound was exceeded
  double core_coverage = 0.0;     // fraction of gamma with |grad psi| >= 1 - delta_core
  double min_grad_on_gamma = 0.0; // achieved minimum of |grad psi| along gamma
};

BlochStream build_bloch_stream(const StripGrid& grid, double delta);

struct BlochBuildResult {
  MagnetizationField field;
  BlochStream stream;
  bool regime_warning = false;  // (t/d)^2 not small against 1/Q
};

/// Hubert's construction: (m1,m3) = (-d psi/d x3, d psi/d x1), m2 follows
/// from |m| = 1 with a mollified sign change across gamma.
BlochBuildResult build_bloch(const StripGrid& grid, const MaterialParams& params,
                             double delta = 0.1, double mollify_width = 0.0);

struct NeelProfileResult {
  Profile1D profile;
  bool regime_warning = false;       // (t/d)^2 not large against Q
  bool truncation_warning = false;   // L < t/Q
  double truncated_tail_energy = 0.0;
};

/// Logarithmic Neel wall profile with cut-offs at d^2/t (inner) and t/Q
/// (outer); m1(0) = 1 exactly.  x_samples must be sorted and symmetric-ish
/// about 0; they become the profile nodes.
NeelProfileResult build_neel_profile(const MaterialParams& params,
                                     const std::vector<double>& x_samples);

std::vector<double> uniform_profile_samples(double L, std::size_t n);

/// x3-independent in-plane field m = (cos theta, sin theta, 0) on the grid
/// (the profile nodes must coincide with the grid's x1 nodes)
MagnetizationField lift_profile(const Profile1D& profile, const StripGrid& grid);

/// Reduced 1D wall functional in angle form,
///   t^2 { (d^2/t) int theta'^2 + (Q/t) int cos^2 theta + N(cos theta) },
/// with N the Dirichlet energy of the two-sided harmonic extension evaluated
/// spectrally (|k| symbol, periodic in x1).  Requires a uniform profile grid.
EnergyBreakdown reduced_neel_energy(const Profile1D& profile, const MaterialParams& params);

/// two-sided harmonic-extension Dirichlet energy of samples g on a uniform
/// periodic grid of period 2L (the N(.) above, exposed for tests)
double harmonic_extension_energy(const std::vector<double>& g, double L);

}  // namespace wallscale
