#include "wallscale/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wallscale/constructions.hpp"
#include "wallscale/ops1d.hpp"

namespace wallscale {

namespace {

double log_factor(const MaterialParams& p) {
  const double arg = p.t * p.t / (p.Q * p.d * p.d);
  if (arg <= 1.0)
    throw std::invalid_argument("bounds: t^2/(Q d^2) must exceed 1 (log non-positive)");
  return std::log(arg);
}

void check_l1_hypothesis(const MaterialParams& p) {
  if (!((p.t / p.d) * (p.t / p.d) > p.Q))
    throw std::invalid_argument("bounds: hypothesis (t/d)^2 > Q violated");
  log_factor(p);
}

// interpolated zero crossing of avg(m2); throws when the field is not a wall
double wall_centre(const MagnetizationField& field) {
  const std::vector<double> a2 = vertical_average(field, 2);
  const StripGrid& g = field.grid;
  for (std::size_t i = 0; i + 1 < g.n1; ++i) {
    if ((a2[i] <= 0.0 && a2[i + 1] > 0.0) || (a2[i] >= 0.0 && a2[i + 1] < 0.0)) {
      const double denom = a2[i + 1] - a2[i];
      const double frac = denom != 0.0 ? -a2[i] / denom : 0.0;
      return g.x1(i) + frac * g.h1();
    }
  }
  throw std::invalid_argument("poincare_ratio: avg(m2) has no sign change (not a wall)");
}

}  // namespace

BoundReport lemma_l2_ratio(const MagnetizationField& field, const MaterialParams& params,
                           double energy_total) {
  params.validate();
  const StripGrid& g = field.grid;
  const std::vector<double> wx = trapezoid_weights(g.n1, g.h1());
  const std::vector<double> wz = trapezoid_weights(g.n3, g.h3());
  double lhs = 0.0;
  for (std::size_t j = 0; j < g.n3; ++j) {
    double s = 0.0;
    const double* row = field.m3.data() + j * g.n1;
    for (std::size_t i = 0; i < g.n1; ++i) s += wx[i] * row[i] * row[i];
    lhs += wz[j] * s;
  }
  const double r2 = (g.t / params.d) * (g.t / params.d);
  BoundReport r;
  r.lemma = "l2";
  r.params = params;
  r.lhs = lhs;
  r.rhs = (1.0 + r2) * energy_total;
  r.ratio = (r.rhs > 0.0) ? lhs / r.rhs : 0.0;
  return r;
}

BoundReport lemma_l1_ratio(const MagnetizationField& field, const MaterialParams& params,
                           double energy_total) {
  params.validate();
  check_l1_hypothesis(params);
  const std::vector<double> a1 = vertical_average(field, 1);
  double lhs = 0.0;
  for (double v : a1) lhs = std::max(lhs, v * v);
  BoundReport r;
  r.lemma = "l1";
  r.params = params;
  r.lhs = lhs;
  r.rhs = (log_factor(params) / (params.t * params.t) + 1.0 / (params.d * params.d)) *
          energy_total;
  r.ratio = (r.rhs > 0.0) ? lhs / r.rhs : 0.0;
  return r;
}

BoundReport poincare_ratio(const MagnetizationField& field, const MaterialParams& params,
                           int component, double energy_total) {
  params.validate();
  if (component < 1 || component > 3)
    throw std::invalid_argument("poincare_ratio: component must be 1, 2 or 3");
  const StripGrid& g = field.grid;
  const double xi = wall_centre(field);
  const std::vector<double>& m =
      component == 1 ? field.m1 : (component == 2 ? field.m2 : field.m3);
  const std::vector<double> avg = vertical_average(field, component);

  // linear interpolation in x1, clamped to the grid
  auto interp_at = [&](double x, auto&& value_at) {
    double s = (x + g.L) / g.h1();
    s = std::clamp(s, 0.0, double(g.n1 - 1));
    const std::size_t i0 = std::min(std::size_t(s), g.n1 - 2);
    const double f = s - double(i0);
    return (1.0 - f) * value_at(i0) + f * value_at(i0 + 1);
  };
  const double avg_xi = interp_at(xi, [&](std::size_t i) { return avg[i]; });

  // sample the t x t square on a fixed offset grid relative to xi so the
  // result is exactly translation invariant
  const std::size_t n_sq = std::max<std::size_t>(3, std::size_t(std::ceil(g.t / g.h1())) + 1);
  const double hs = g.t / double(n_sq - 1);
  const std::vector<double> ws = trapezoid_weights(n_sq, hs);
  const std::vector<double> wz = trapezoid_weights(g.n3, g.h3());
  double lhs = 0.0;
  for (std::size_t j = 0; j < g.n3; ++j) {
    double s = 0.0;
    for (std::size_t k = 0; k < n_sq; ++k) {
      const double x = xi - 0.5 * g.t + double(k) * hs;
      const double v =
          interp_at(x, [&](std::size_t i) { return m[g.idx(i, j)]; }) - avg_xi;
      s += ws[k] * v * v;
    }
    lhs += wz[j] * s;
  }

  BoundReport r;
  r.lemma = "poincare";
  r.params = params;
  r.lhs = lhs;
  r.rhs = (g.t / params.d) * (g.t / params.d) * energy_total;
  r.ratio = (r.rhs > 0.0) ? lhs / r.rhs : 0.0;
  return r;
}

BoundReport lower_bound_ratio(const MagnetizationField& field, const MaterialParams& params,
                              double energy_total) {
  params.validate();
  check_l1_hypothesis(params);
  BoundReport r;
  r.lemma = "lower_bound";
  r.params = params;
  r.lhs = 1.0;
  r.rhs = (log_factor(params) / (params.t * params.t) + 1.0 / (params.d * params.d)) *
          energy_total;
  r.ratio = (r.rhs > 0.0) ? 1.0 / r.rhs : 0.0;
  (void)field;
  return r;
}

BoundReport lemma_l2_ratio(const MagnetizationField& field, const MaterialParams& params) {
  return lemma_l2_ratio(field, params, total_energy(field, params).total);
}
BoundReport lemma_l1_ratio(const MagnetizationField& field, const MaterialParams& params) {
  return lemma_l1_ratio(field, params, total_energy(field, params).total);
}
BoundReport poincare_ratio(const MagnetizationField& field, const MaterialParams& params,
                           int component) {
  return poincare_ratio(field, params, component, total_energy(field, params).total);
}
BoundReport lower_bound_ratio(const MagnetizationField& field, const MaterialParams& params) {
  return lower_bound_ratio(field, params, total_energy(field, params).total);
}

EnsembleReport run_bounds_ensemble(const EnsembleOptions& opts) {
  opts.params.validate();
  EnsembleReport rep;
  rep.min_lower_bound = 1e300;

  std::vector<std::pair<std::string, MagnetizationField>> fields;

  BlochBuildResult bloch = build_bloch(opts.grid, opts.params, opts.construction_delta);
  fields.emplace_back("bloch", bloch.field);

  NeelProfileResult neel = build_neel_profile(
      opts.params, uniform_profile_samples(opts.grid.L, opts.grid.n1));
  fields.emplace_back("neel", lift_profile(neel.profile, opts.grid));

  auto relaxed_bloch = relax(bloch.field, opts.params, opts.relax);
  fields.emplace_back("bloch_relaxed", std::move(relaxed_bloch.first));
  auto relaxed_neel = relax(fields[1].second, opts.params, opts.relax);
  fields.emplace_back("neel_relaxed", std::move(relaxed_neel.first));

  const int per_base = std::max(1, opts.n_perturbations / 4);
  const std::size_t n_bases = fields.size();
  int made = 0;
  for (std::size_t b = 0; b < n_bases && made < opts.n_perturbations; ++b) {
    for (int k = 0; k < per_base && made < opts.n_perturbations; ++k, ++made) {
      const std::uint64_t seed = opts.seed + 977u * std::uint64_t(made) + 13u;
      fields.emplace_back("perturb_" + fields[b].first + "_" + std::to_string(k),
                          perturb_field(fields[b].second, seed, opts.perturb_amplitude));
    }
  }
  while (made < opts.n_perturbations) {
    const std::uint64_t seed = opts.seed + 977u * std::uint64_t(made) + 13u;
    fields.emplace_back("random_" + std::to_string(made),
                        random_admissible_field(opts.grid, seed, opts.perturb_amplitude));
    ++made;
  }

  for (const auto& [name, f] : fields) {
    const double E = total_energy(f, opts.params).total;
    BoundReport r2 = lemma_l2_ratio(f, opts.params, E);
    r2.provenance = name;
    rep.max_l2 = std::max(rep.max_l2, r2.ratio);
    rep.rows.push_back(r2);

    BoundReport r1 = lemma_l1_ratio(f, opts.params, E);
    r1.provenance = name;
    rep.max_l1 = std::max(rep.max_l1, r1.ratio);
    rep.rows.push_back(r1);

    for (int c = 1; c <= 3; ++c) {
      BoundReport rp = poincare_ratio(f, opts.params, c, E);
      rp.provenance = name + "_m" + std::to_string(c);
      rep.max_poincare = std::max(rep.max_poincare, rp.ratio);
      rep.rows.push_back(rp);
    }

    BoundReport rl = lower_bound_ratio(f, opts.params, E);
    rl.provenance = name;
    rep.min_lower_bound = std::min(rep.min_lower_bound, rl.ratio);
    rep.max_lower_bound = std::max(rep.max_lower_bound, rl.ratio);
    rep.rows.push_back(rl);
  }
  return rep;
}

}  // namespace wallscale
