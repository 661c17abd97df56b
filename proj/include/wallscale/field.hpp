#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "wallscale/grid.hpp"

namespace wallscale {

using Vec3 = std::array<double, 3>;

/// Unit-vector magnetization on a StripGrid.  Components are stored as three
/// separate planes, row-major with x3 outer and x1 inner.  The wall boundary
/// condition is a hard clamp of the first and last x1 columns to (0,-1,0)
/// and (0,+1,0).
struct MagnetizationField {
  StripGrid grid;
  std::vector<double> m1, m2, m3;

  MagnetizationField() = default;
  explicit MagnetizationField(const StripGrid& g)
      : grid(g), m1(g.size(), 0.0), m2(g.size(), 0.0), m3(g.size(), 0.0) {}

  Vec3 at(std::size_t i, std::size_t j) const {
    const std::size_t p = grid.idx(i, j);
    return {m1[p], m2[p], m3[p]};
  }
  void set(std::size_t i, std::size_t j, const Vec3& v) {
    const std::size_t p = grid.idx(i, j);
    m1[p] = v[0];
    m2[p] = v[1];
    m3[p] = v[2];
  }
};

struct AdmissibilityReport {
  double max_norm_residual = 0.0;   // max | |m| - 1 |
  double clamp_residual_left = 0.0; // max |m(-L,.) - (0,-1,0)|
  double clamp_residual_right = 0.0;
  double norm_tol = 1e-12;
  double clamp_tol = 1e-9;
  bool norm_ok = false;
  bool clamp_ok = false;
  bool pass = false;
};

/// Uniform x1 samples on [-L, L] carrying a wall angle theta(x1); the induced
/// in-plane field is m = (cos theta, sin theta, 0).
struct Profile1D {
  double L = 0.0;
  std::vector<double> x;      // node positions, uniform
  std::vector<double> theta;  // radians, theta(-L) = -pi/2, theta(L) = +pi/2
  std::size_t n() const { return x.size(); }
};

MagnetizationField make_uniform(const StripGrid& grid, const Vec3& v);

AdmissibilityReport validate_admissible(const MagnetizationField& field);

/// renormalize every node to |m| = 1 and re-impose the end-column clamps
void project_to_sphere(MagnetizationField& field);
void enforce_clamps(MagnetizationField& field);

/// vertical (x3) trapezoid average of component c in {1,2,3}; one value per x1 node
std::vector<double> vertical_average(const MagnetizationField& field, int component);

/// x1 -> -x1 together with m1 -> -m1, m2 -> -m2 (an energy symmetry)
MagnetizationField reflect_x1(const MagnetizationField& field);

/// Smooth random admissible field: a clamped base wall plus seeded smooth
/// perturbations, renormalized.  Defined through analytic mode sums so the
/// same seed yields the same continuum field on any grid resolution.
MagnetizationField random_admissible_field(const StripGrid& grid, std::uint64_t seed,
                                           double amplitude = 0.25, int n_modes = 4);

/// Seeded smooth tangent perturbation of an existing field (renormalized,
/// re-clamped).  Used by the bounds-module ensemble audit.
MagnetizationField perturb_field(const MagnetizationField& base, std::uint64_t seed,
                                 double amplitude);

}  // namespace wallscale
