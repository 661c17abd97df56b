#include "wallscale/energy.hpp"

#include <cmath>
#include <stdexcept>

#include "wallscale/ops1d.hpp"

namespace wallscale {

namespace {

// nondimensional node quadrature weights (lengths in units of t)
struct Quadrature {
  std::vector<double> wx, wz;
  double hx, hz;
  explicit Quadrature(const StripGrid& g)
      : wx(trapezoid_weights(g.n1, g.h1() / g.t)),
        wz(trapezoid_weights(g.n3, g.h3() / g.t)),
        hx(g.h1() / g.t),
        hz(g.h3() / g.t) {}
};

// |grad m|^2 from cell differences (derivative at each cell midpoint,
// trapezoid across the other direction); optionally accumulates the adjoint
// into grad.  Cell differencing keeps the quadratic form coercive: central
// differences are blind to node-alternating oscillations, which descent then
// exploits as a zero-cost texture.
double exchange_quadratic(const StripGrid& g, const Quadrature& q,
                          const std::vector<double>& m, std::vector<double>* grad) {
  const std::size_t n1 = g.n1, n3 = g.n3;
  double acc = 0.0;
  // x1 cells
  const double inv_hx = 1.0 / q.hx;
  for (std::size_t j = 0; j < n3; ++j) {
    const double* row = m.data() + j * n1;
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < n1; ++i) {
      const double d = (row[i + 1] - row[i]) * inv_hx;
      s += d * d;
    }
    acc += q.wz[j] * s * q.hx;
    if (grad) {
      double* gr = grad->data() + j * n1;
      const double c = 2.0 * q.wz[j] * inv_hx;
      for (std::size_t i = 0; i + 1 < n1; ++i) {
        const double d = row[i + 1] - row[i];
        gr[i + 1] += c * d;
        gr[i] -= c * d;
      }
    }
  }
  // x3 cells
  const double inv_hz = 1.0 / q.hz;
  for (std::size_t j = 0; j + 1 < n3; ++j) {
    const double* row = m.data() + j * n1;
    const double* row_up = m.data() + (j + 1) * n1;
    double s = 0.0;
    for (std::size_t i = 0; i < n1; ++i) {
      const double d = (row_up[i] - row[i]) * inv_hz;
      s += q.wx[i] * d * d;
    }
    acc += s * q.hz;
    if (grad) {
      double* gr = grad->data() + j * n1;
      double* gr_up = grad->data() + (j + 1) * n1;
      for (std::size_t i = 0; i < n1; ++i) {
        const double c = 2.0 * q.wx[i] * inv_hz;
        const double d = row_up[i] - row[i];
        gr_up[i] += c * d;
        gr[i] -= c * d;
      }
    }
  }
  return acc;
}

}  // namespace

double exchange_energy(const MagnetizationField& field, const MaterialParams& params) {
  params.validate();
  const StripGrid& g = field.grid;
  const Quadrature q(g);
  const double dd2 = (params.d / g.t) * (params.d / g.t);
  double acc = 0.0;
  acc += exchange_quadratic(g, q, field.m1, nullptr);
  acc += exchange_quadratic(g, q, field.m2, nullptr);
  acc += exchange_quadratic(g, q, field.m3, nullptr);
  return dd2 * acc * g.t * g.t;
}

double anisotropy_energy(const MagnetizationField& field, const MaterialParams& params) {
  params.validate();
  const StripGrid& g = field.grid;
  const Quadrature q(g);
  double acc = 0.0;
  for (std::size_t j = 0; j < g.n3; ++j) {
    double s = 0.0;
    const double* r1 = field.m1.data() + j * g.n1;
    const double* r3 = field.m3.data() + j * g.n1;
    for (std::size_t i = 0; i < g.n1; ++i) s += q.wx[i] * (r1[i] * r1[i] + r3[i] * r3[i]);
    acc += q.wz[j] * s;
  }
  return params.Q * acc * g.t * g.t;
}

EnergyBreakdown total_energy(const MagnetizationField& field, const MaterialParams& params) {
  EnergyBreakdown e;
  e.exchange = exchange_energy(field, params);
  e.anisotropy = anisotropy_energy(field, params);
  const StraySummary s = stray_energy(field);
  e.stray = s.dirichlet_energy;
  e.total = e.exchange + e.anisotropy + e.stray;
  const double ref = std::max(std::abs(s.dirichlet_energy), 1e-300);
  e.reciprocity_defect = std::abs(s.dirichlet_energy - s.charge_pairing) / ref;
  e.k0_residual_mass = s.k0_residual_mass;
  return e;
}

EnergyGradient energy_gradient(const MagnetizationField& field, const MaterialParams& params) {
  params.validate();
  const StripGrid& g = field.grid;
  const Quadrature q(g);
  const double t2 = g.t * g.t;
  const double dd2 = (params.d / g.t) * (params.d / g.t);

  EnergyGradient out;
  out.g1.assign(g.size(), 0.0);
  out.g2.assign(g.size(), 0.0);
  out.g3.assign(g.size(), 0.0);

  exchange_quadratic(g, q, field.m1, &out.g1);
  exchange_quadratic(g, q, field.m2, &out.g2);
  exchange_quadratic(g, q, field.m3, &out.g3);
  for (std::size_t p = 0; p < g.size(); ++p) {
    out.g1[p] *= dd2 * t2;
    out.g2[p] *= dd2 * t2;
    out.g3[p] *= dd2 * t2;
  }

  for (std::size_t j = 0; j < g.n3; ++j)
    for (std::size_t i = 0; i < g.n1; ++i) {
      const std::size_t p = j * g.n1 + i;
      const double w = 2.0 * params.Q * q.wx[i] * q.wz[j] * t2;
      out.g1[p] += w * field.m1[p];
      out.g3[p] += w * field.m3[p];
    }

  std::vector<double> s1, s3;
  stray_energy_and_gradient(field, s1, s3);
  for (std::size_t p = 0; p < g.size(); ++p) {
    out.g1[p] += s1[p];
    out.g3[p] += s3[p];
  }

  // tangent projection and clamp columns
  for (std::size_t j = 0; j < g.n3; ++j)
    for (std::size_t i = 0; i < g.n1; ++i) {
      const std::size_t p = j * g.n1 + i;
      if (i == 0 || i == g.n1 - 1) {
        out.g1[p] = out.g2[p] = out.g3[p] = 0.0;
        continue;
      }
      const double dot =
          out.g1[p] * field.m1[p] + out.g2[p] * field.m2[p] + out.g3[p] * field.m3[p];
      out.g1[p] -= dot * field.m1[p];
      out.g2[p] -= dot * field.m2[p];
      out.g3[p] -= dot * field.m3[p];
      const double a = std::sqrt(out.g1[p] * out.g1[p] + out.g2[p] * out.g2[p] +
                                 out.g3[p] * out.g3[p]);
      if (a > out.sup_norm) out.sup_norm = a;
    }
  return out;
}

}  // namespace wallscale
