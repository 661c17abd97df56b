#include "wallscale/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wallscale/bounds.hpp"
#include "wallscale/constructions.hpp"

namespace wallscale {

namespace {

bool in_sweep_regime(const MaterialParams& p) {
  const double r2 = (p.t / p.d) * (p.t / p.d);
  return p.Q <= 0.01 && 2.0 * p.Q <= r2 && r2 <= 0.5 / p.Q;
}

std::size_t clamp_odd(std::size_t n, std::size_t lo, std::size_t hi) {
  n = std::clamp(n, lo, hi);
  return (n % 2 == 0) ? n + 1 : n;  // odd keeps a node at x1 = 0
}

}  // namespace

StripGrid bloch_grid_for(const MaterialParams& params, const SweepGridPolicy& policy,
                         double delta) {
  const double t = params.t;
  const double feature = std::min(params.d / t, delta);
  double h = feature / policy.resolution;
  h = std::min(h, 0.45 * delta);  // build_bloch requires h <= delta/2
  const double span = 2.0 * policy.bloch_L_over_t;
  std::size_t n1 = clamp_odd(std::size_t(std::ceil(span / h)) + 1, policy.n1_min, policy.n1_cap);
  std::size_t n3 = clamp_odd(std::size_t(std::ceil(1.0 / h)) + 1, policy.n3_min, policy.n3_cap);
  return StripGrid(policy.bloch_L_over_t * t, t, n1, n3);
}

SweepPoint evaluate_sweep_point(const MaterialParams& params, const SweepOptions& opts) {
  SweepPoint pt;
  pt.Q = params.Q;
  pt.t_over_d = params.t / params.d;
  pt.pred_thick = params.d * params.d;
  const double log_arg = params.t * params.t / (params.Q * params.d * params.d);
  pt.pred_thin = log_arg > 1.0 ? params.t * params.t / std::log(log_arg) : 0.0;

  if (!in_sweep_regime(params)) {
    pt.status = "skipped_regime";
    return pt;
  }

  try {
    const StripGrid bg = bloch_grid_for(params, opts.grid, opts.construction_delta);
    pt.n1 = bg.n1;
    pt.n3 = bg.n3;
    pt.L_over_t = bg.L / bg.t;

    BlochBuildResult bloch = build_bloch(bg, params, opts.construction_delta);
    // seeded symmetry breaking: the raw construction has m2 = 0 over the
    // vortex disk, a saddle that plain descent leaves very slowly
    const MagnetizationField init = perturb_field(bloch.field, opts.seed + 17, 0.2);
    auto relaxed = relax(init, params, opts.bloch_relax);
    pt.E_bloch = relaxed.second.final_energy.total;
    pt.iters_bloch = relaxed.second.iterations;

    ProfileRelaxResult neel = relax_neel_branch(params, opts.neel);
    pt.E_neel = neel.energy.total;
    pt.iters_neel = neel.iterations;

    if (pt.E_bloch <= pt.E_neel) {
      pt.E_min = pt.E_bloch;
      pt.winner = "bloch";
      pt.l2_ratio = lemma_l2_ratio(relaxed.first, params, pt.E_min).ratio;
      pt.l1_ratio = lemma_l1_ratio(relaxed.first, params, pt.E_min).ratio;
    } else {
      pt.E_min = pt.E_neel;
      pt.winner = "neel";
      // the Neel branch field is x3-independent with m3 = 0: the l2 numerator
      // vanishes and avg(m1) = m1 = cos(theta)
      pt.l2_ratio = 0.0;
      double lhs = 0.0;
      for (double th : neel.profile.theta) {
        const double c = std::cos(th);
        lhs = std::max(lhs, c * c);
      }
      const double rhs =
          (std::log(log_arg) / (params.t * params.t) + 1.0 / (params.d * params.d)) * pt.E_min;
      pt.l1_ratio = rhs > 0.0 ? lhs / rhs : 0.0;
    }
    const double rhs =
        (std::log(log_arg) / (params.t * params.t) + 1.0 / (params.d * params.d)) * pt.E_min;
    pt.lb_ratio = rhs > 0.0 ? 1.0 / rhs : 0.0;
    pt.ratio_thick = pt.E_min / pt.pred_thick;
    pt.ratio_thin = pt.pred_thin > 0.0 ? pt.E_min / pt.pred_thin : 0.0;
  } catch (const std::exception& ex) {
    pt.status = std::string("failed: ") + ex.what();
  }
  return pt;
}

SweepTable run_sweep(const SweepOptions& opts) {
  SweepTable table;
  for (double Q : opts.Qs)
    for (double r : opts.t_over_d) {
      MaterialParams p;
      p.d = opts.d;
      p.Q = Q;
      p.t = r * opts.d;
      table.points.push_back(evaluate_sweep_point(p, opts));
    }
  return table;
}

CrossoverResult find_crossover(double Q, double bracket_lo, double bracket_hi,
                               const SweepOptions& opts, double rel_width) {
  if (!(bracket_hi > bracket_lo))
    throw std::invalid_argument("find_crossover: degenerate bracket");
  CrossoverResult res;
  res.Q = Q;
  res.predicted_scale = std::sqrt(std::log(1.0 / Q));

  auto probe = [&](double r) {
    MaterialParams p;
    p.d = opts.d;
    p.Q = Q;
    p.t = r * opts.d;
    const SweepPoint pt = evaluate_sweep_point(p, opts);
    if (pt.status != "ok")
      throw std::runtime_error("find_crossover: probe at t/d=" + std::to_string(r) +
                               " failed (" + pt.status + ")");
    res.probes.push_back({r, pt.E_bloch, pt.E_neel});
    return pt.E_bloch - pt.E_neel;
  };

  double a = bracket_lo, b = bracket_hi;
  double Da = probe(a), Db = probe(b);
  if (Da * Db > 0.0)
    throw std::invalid_argument(
        "find_crossover: no sign change on bracket (E_bloch - E_neel = " +
        std::to_string(Da) + " at t/d=" + std::to_string(a) + ", " + std::to_string(Db) +
        " at t/d=" + std::to_string(b) + ")");
  while (b - a > rel_width * 0.5 * (a + b)) {
    const double mid = 0.5 * (a + b);
    const double Dm = probe(mid);
    if ((Dm <= 0.0) == (Da <= 0.0)) {
      a = mid;
      Da = Dm;
    } else {
      b = mid;
      Db = Dm;
    }
  }
  res.t_star_over_d = 0.5 * (a + b);
  res.ratio = res.t_star_over_d / res.predicted_scale;
  return res;
}

ScalingReport fit_scaling(const SweepTable& table) {
  auto collect = [&](const std::string& winner, bool thin) {
    BranchStats s;
    std::vector<double> ratios, logE, logP, Es;
    for (const SweepPoint& pt : table.points) {
      if (pt.status != "ok" || pt.winner != winner) continue;
      const double pred = thin ? pt.pred_thin : pt.pred_thick;
      if (!(pred > 0.0) || !(pt.E_min > 0.0)) continue;
      ratios.push_back(pt.E_min / pred);
      Es.push_back(pt.E_min);
      logE.push_back(std::log(pt.E_min));
      logP.push_back(std::log(pred));
    }
    s.n = ratios.size();
    if (s.n == 0) return s;
    s.min_ratio = *std::min_element(ratios.begin(), ratios.end());
    s.max_ratio = *std::max_element(ratios.begin(), ratios.end());
    double lg = 0.0;
    for (double r : ratios) lg += std::log(r);
    s.geomean_ratio = std::exp(lg / double(s.n));
    s.band = s.max_ratio / s.min_ratio;
    s.flatness = *std::max_element(Es.begin(), Es.end()) /
                 *std::min_element(Es.begin(), Es.end());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < s.n; ++i) {
      mx += logP[i];
      my += logE[i];
    }
    mx /= double(s.n);
    my /= double(s.n);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < s.n; ++i) {
      sxx += (logP[i] - mx) * (logP[i] - mx);
      sxy += (logP[i] - mx) * (logE[i] - my);
    }
    if (sxx > 1e-12) {
      s.slope = sxy / sxx;
      s.slope_valid = true;
    }
    return s;
  };

  ScalingReport rep;
  rep.thick = collect("bloch", false);
  rep.thin = collect("neel", true);
  if (rep.thick.n < 3 && rep.thin.n < 3)
    throw std::invalid_argument("fit_scaling: need at least 3 points in a branch");
  return rep;
}

}  // namespace wallscale
