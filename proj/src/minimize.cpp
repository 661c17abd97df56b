#include "wallscale/minimize.hpp"

#include <cmath>
#include <stdexcept>

namespace wallscale {

void RelaxOptions::validate() const {
  if (max_iters == 0) throw std::invalid_argument("RelaxOptions: max_iters must be positive");
  if (!(grad_tol > 0.0)) throw std::invalid_argument("RelaxOptions: grad_tol must be positive");
  if (!(armijo_factor > 0.0 && armijo_factor < 1.0))
    throw std::invalid_argument("RelaxOptions: armijo_factor must be in (0,1)");
  if (!(armijo_c > 0.0 && armijo_c <= 0.5))
    throw std::invalid_argument("RelaxOptions: armijo_c must be in (0, 1/2]");
}

std::pair<MagnetizationField, RelaxReport> relax(const MagnetizationField& field,
                                                 const MaterialParams& params,
                                                 const RelaxOptions& opts) {
  opts.validate();
  params.validate();
  const AdmissibilityReport adm = validate_admissible(field);
  if (!adm.pass)
    throw std::invalid_argument("relax: input field is not admissible");

  MagnetizationField m = field;
  RelaxReport rep;

  EnergyBreakdown E = total_energy(m, params);
  if (!std::isfinite(E.total)) throw std::runtime_error("relax: non-finite initial energy");
  EnergyGradient g = energy_gradient(m, params);

  auto grad_sq = [](const EnergyGradient& gr) {
    double s = 0.0;
    for (std::size_t p = 0; p < gr.g1.size(); ++p)
      s += gr.g1[p] * gr.g1[p] + gr.g2[p] * gr.g2[p] + gr.g3[p] * gr.g3[p];
    return s;
  };

  double step = opts.step0 > 0.0 ? opts.step0 : (g.sup_norm > 0.0 ? 0.1 / g.sup_norm : 1.0);
  rep.initial_step = step;
  const double step_floor = opts.stall_factor * step;
  const double step_ceil = 1e4 * step;

  if (opts.record_trace)
    rep.trace.push_back({0, E.exchange, E.anisotropy, E.stray, E.total, g.sup_norm});

  rep.termination = "max_iters";
  MagnetizationField trial(m.grid);
  std::size_t it = 0;
  for (; it < opts.max_iters; ++it) {
    if (g.sup_norm <= opts.grad_tol) {
      rep.termination = "converged";
      break;
    }
    const double g2 = grad_sq(g);
    bool accepted = false;
    while (step >= step_floor) {
      for (std::size_t p = 0; p < m.grid.size(); ++p) {
        trial.m1[p] = m.m1[p] - step * g.g1[p];
        trial.m2[p] = m.m2[p] - step * g.g2[p];
        trial.m3[p] = m.m3[p] - step * g.g3[p];
      }
      project_to_sphere(trial);
      enforce_clamps(trial);
      const EnergyBreakdown Et = total_energy(trial, params);
      if (std::isfinite(Et.total) && Et.total <= E.total - opts.armijo_c * step * g2) {
        std::swap(m.m1, trial.m1);
        std::swap(m.m2, trial.m2);
        std::swap(m.m3, trial.m3);
        E = Et;
        accepted = true;
        break;
      }
      step *= opts.armijo_factor;
    }
    if (!accepted) {
      rep.termination = "stalled";
      break;
    }
    g = energy_gradient(m, params);
    if (opts.record_trace)
      rep.trace.push_back({it + 1, E.exchange, E.anisotropy, E.stray, E.total, g.sup_norm});
    step = std::min(step * 2.0, step_ceil);
  }
  rep.iterations = it;
  rep.final_grad_norm = g.sup_norm;
  rep.final_energy = E;
  return {std::move(m), std::move(rep)};
}

BestOfResult best_of(const std::vector<std::pair<std::string, MagnetizationField>>& inits,
                     const MaterialParams& params, const RelaxOptions& opts) {
  if (inits.empty()) throw std::invalid_argument("best_of: empty initializer list");
  BestOfResult out;
  bool first = true;
  for (const auto& [name, field] : inits) {
    auto [relaxed, rep] = relax(field, params, opts);
    const EnergyBreakdown e = rep.final_energy;
    if (first || e.total < out.energy.total) {
      out.field = std::move(relaxed);
      out.energy = e;
      out.provenance = name;
      first = false;
    }
    out.reports.emplace_back(name, std::move(rep));
  }
  return out;
}

}  // namespace wallscale
