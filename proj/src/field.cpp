#include "wallscale/field.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace wallscale {

namespace {

double norm3(double a, double b, double c) { return std::sqrt(a * a + b * b + c * c); }

// quintic smoothstep on [0,1]
double smooth01(double u) {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  return u * u * u * (10.0 + u * (-15.0 + 6.0 * u));
}

}  // namespace

MagnetizationField make_uniform(const StripGrid& grid, const Vec3& v) {
  const double n = norm3(v[0], v[1], v[2]);
  if (std::abs(n - 1.0) > 1e-12)
    throw std::invalid_argument("make_uniform: v must be a unit vector");
  MagnetizationField f(grid);
  std::fill(f.m1.begin(), f.m1.end(), v[0]);
  std::fill(f.m2.begin(), f.m2.end(), v[1]);
  std::fill(f.m3.begin(), f.m3.end(), v[2]);
  return f;
}

AdmissibilityReport validate_admissible(const MagnetizationField& field) {
  AdmissibilityReport r;
  const StripGrid& g = field.grid;
  for (std::size_t p = 0; p < g.size(); ++p) {
    const double res = std::abs(norm3(field.m1[p], field.m2[p], field.m3[p]) - 1.0);
    if (res > r.max_norm_residual) r.max_norm_residual = res;
  }
  for (std::size_t j = 0; j < g.n3; ++j) {
    const Vec3 l = field.at(0, j);
    const Vec3 rr = field.at(g.n1 - 1, j);
    const double dl = norm3(l[0], l[1] + 1.0, l[2]);
    const double dr = norm3(rr[0], rr[1] - 1.0, rr[2]);
    if (dl > r.clamp_residual_left) r.clamp_residual_left = dl;
    if (dr > r.clamp_residual_right) r.clamp_residual_right = dr;
  }
  r.norm_ok = r.max_norm_residual <= r.norm_tol;
  r.clamp_ok = r.clamp_residual_left <= r.clamp_tol && r.clamp_residual_right <= r.clamp_tol;
  r.pass = r.norm_ok && r.clamp_ok;
  return r;
}

void project_to_sphere(MagnetizationField& field) {
  for (std::size_t p = 0; p < field.grid.size(); ++p) {
    const double n = norm3(field.m1[p], field.m2[p], field.m3[p]);
    if (n > 0.0) {
      const double inv = 1.0 / n;
      field.m1[p] *= inv;
      field.m2[p] *= inv;
      field.m3[p] *= inv;
    } else {
      field.m1[p] = 0.0;
      field.m2[p] = 1.0;
      field.m3[p] = 0.0;
    }
  }
}

void enforce_clamps(MagnetizationField& field) {
  const StripGrid& g = field.grid;
  for (std::size_t j = 0; j < g.n3; ++j) {
    field.set(0, j, {0.0, -1.0, 0.0});
    field.set(g.n1 - 1, j, {0.0, 1.0, 0.0});
  }
}

std::vector<double> vertical_average(const MagnetizationField& field, int component) {
  if (component < 1 || component > 3)
    throw std::invalid_argument("vertical_average: component must be 1, 2 or 3");
  const StripGrid& g = field.grid;
  const std::vector<double>& m =
      component == 1 ? field.m1 : (component == 2 ? field.m2 : field.m3);
  std::vector<double> avg(g.n1, 0.0);
  const double h = g.h3();
  for (std::size_t i = 0; i < g.n1; ++i) {
    double s = 0.5 * (m[g.idx(i, 0)] + m[g.idx(i, g.n3 - 1)]);
    for (std::size_t j = 1; j + 1 < g.n3; ++j) s += m[g.idx(i, j)];
    avg[i] = s * h / g.t;
  }
  return avg;
}

MagnetizationField reflect_x1(const MagnetizationField& field) {
  const StripGrid& g = field.grid;
  MagnetizationField out(g);
  for (std::size_t j = 0; j < g.n3; ++j)
    for (std::size_t i = 0; i < g.n1; ++i) {
      const Vec3 v = field.at(g.n1 - 1 - i, j);
      out.set(i, j, {-v[0], -v[1], v[2]});
    }
  return out;
}

MagnetizationField random_admissible_field(const StripGrid& grid, std::uint64_t seed,
                                           double amplitude, int n_modes) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  struct Mode {
    double a1, a2, a3, k1, k3, p1, p3;
  };
  std::vector<Mode> modes(static_cast<std::size_t>(n_modes));
  for (Mode& md : modes) {
    md.a1 = uni(rng);
    md.a2 = uni(rng);
    md.a3 = uni(rng);
    md.k1 = 0.5 + 2.5 * std::abs(uni(rng));  // wavenumbers in units of 1/L, 1/t
    md.k3 = 0.5 + 2.5 * std::abs(uni(rng));
    md.p1 = 3.14159 * uni(rng);
    md.p3 = 3.14159 * uni(rng);
  }

  MagnetizationField f(grid);
  const double pi = 3.14159265358979323846;
  for (std::size_t j = 0; j < grid.n3; ++j) {
    const double z = grid.x3(j) / grid.t;  // in [-1/2, 1/2]
    for (std::size_t i = 0; i < grid.n1; ++i) {
      const double x = grid.x1(i) / grid.L;  // in [-1, 1]
      // base wall: theta ramps smoothly from -pi/2 to +pi/2 over |x| <= 0.5
      const double s = 2.0 * smooth01(0.5 * (x / 0.5 + 1.0)) - 1.0;
      const double theta = 0.5 * pi * (x <= -0.5 ? -1.0 : (x >= 0.5 ? 1.0 : s));
      double v1 = std::cos(theta), v2 = std::sin(theta), v3 = 0.0;
      // envelope vanishing at the clamped columns
      const double env = amplitude * (1.0 - x * x) * (1.0 - x * x);
      for (const Mode& md : modes) {
        const double c = std::cos(pi * md.k1 * x + md.p1) * std::cos(pi * md.k3 * z + md.p3);
        v1 += env * md.a1 * c;
        v2 += env * md.a2 * c;
        v3 += env * md.a3 * c;
      }
      const double n = norm3(v1, v2, v3);
      f.set(i, j, {v1 / n, v2 / n, v3 / n});
    }
  }
  enforce_clamps(f);
  return f;
}

MagnetizationField perturb_field(const MagnetizationField& base, std::uint64_t seed,
                                 double amplitude) {
  const StripGrid& g = base.grid;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  const int n_modes = 5;
  struct Mode {
    double a1, a2, a3, k1, k3, p1, p3;
  };
  std::vector<Mode> modes(n_modes);
  for (Mode& md : modes) {
    md.a1 = uni(rng);
    md.a2 = uni(rng);
    md.a3 = uni(rng);
    md.k1 = 0.5 + 3.0 * std::abs(uni(rng));
    md.k3 = 0.5 + 2.0 * std::abs(uni(rng));
    md.p1 = 3.0 * uni(rng);
    md.p3 = 3.0 * uni(rng);
  }
  const double pi = 3.14159265358979323846;
  MagnetizationField f(g);
  for (std::size_t j = 0; j < g.n3; ++j) {
    const double z = g.x3(j) / g.t;
    for (std::size_t i = 0; i < g.n1; ++i) {
      const double x = g.x1(i) / g.L;
      const double env = amplitude * (1.0 - x * x) * (1.0 - x * x);
      Vec3 v = base.at(i, j);
      double p1 = 0.0, p2 = 0.0, p3 = 0.0;
      for (const Mode& md : modes) {
        const double c = std::cos(pi * md.k1 * x + md.p1) * std::cos(pi * md.k3 * z + md.p3);
        p1 += env * md.a1 * c;
        p2 += env * md.a2 * c;
        p3 += env * md.a3 * c;
      }
      // tangent part only, so small amplitudes stay small after renormalizing
      const double dot = p1 * v[0] + p2 * v[1] + p3 * v[2];
      p1 -= dot * v[0];
      p2 -= dot * v[1];
      p3 -= dot * v[2];
      const double w1 = v[0] + p1, w2 = v[1] + p2, w3 = v[2] + p3;
      const double n = norm3(w1, w2, w3);
      f.set(i, j, {w1 / n, w2 / n, w3 / n});
    }
  }
  enforce_clamps(f);
  return f;
}

void MaterialParams::validate() const {
  if (!(d > 0.0) || !std::isfinite(d)) throw std::invalid_argument("MaterialParams: d must be positive and finite");
  if (!(Q > 0.0) || !std::isfinite(Q)) throw std::invalid_argument("MaterialParams: Q must be positive and finite");
  if (!(t > 0.0) || !std::isfinite(t)) throw std::invalid_argument("MaterialParams: t must be positive and finite");
}

}  // namespace wallscale
