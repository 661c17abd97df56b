#include "wallscale/cli.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wallscale/bounds.hpp"
#include "wallscale/config.hpp"
#include "wallscale/constructions.hpp"
#include "wallscale/io.hpp"

namespace wallscale {

namespace {

void print_breakdown(const EnergyBreakdown& e) {
  std::printf("exchange   = %.12g\n", e.exchange);
  std::printf("anisotropy = %.12g\n", e.anisotropy);
  std::printf("stray      = %.12g\n", e.stray);
  std::printf("total      = %.12g\n", e.total);
  std::printf("reciprocity_defect = %.3g\n", e.reciprocity_defect);
  std::printf("k0_residual_mass   = %.3g\n", e.k0_residual_mass);
}

void print_validation(const AdmissibilityReport& r) {
  std::printf("norm residual  = %.3g (%s)\n", r.max_norm_residual, r.norm_ok ? "ok" : "FAIL");
  std::printf("clamp residual = %.3g / %.3g (%s)\n", r.clamp_residual_left,
              r.clamp_residual_right, r.clamp_ok ? "ok" : "FAIL");
}

std::string energy_csv(const EnergyBreakdown& e, const RunConfig& cfg) {
  std::string s;
  s += std::string("# ") + kToolVersion + "\n";
  s += "# config: " + cfg.compact + "\n";
  s += "# seed: " + std::to_string(cfg.seed) + "\n";
  s += "exchange,anisotropy,stray,total,reciprocity_defect,k0_residual_mass\n";
  s += format_double(e.exchange) + "," + format_double(e.anisotropy) + "," +
       format_double(e.stray) + "," + format_double(e.total) + "," +
       format_double(e.reciprocity_defect) + "," + format_double(e.k0_residual_mass) + "\n";
  return s;
}

int cmd_energy(const RunConfig& cfg, const std::string& field_path, const std::string& out) {
  const MagnetizationField f = read_field_file(field_path);
  const EnergyBreakdown e = total_energy(f, cfg.params);
  print_breakdown(e);
  print_validation(validate_admissible(f));
  if (!out.empty())
    write_text_file(out, energy_csv(e, cfg));
  else
    std::fputs(energy_csv(e, cfg).c_str(), stdout);
  return 0;
}

int cmd_build(const RunConfig& cfg, const std::string& kind, const std::string& out) {
  MagnetizationField field;
  if (kind == "bloch") {
    const StripGrid g = grid_from_config(cfg, false);
    BlochBuildResult b = build_bloch(g, cfg.params, cfg.construction_delta, cfg.mollify_width);
    if (b.regime_warning)
      std::printf("warning: (t/d)^2 = %.3g is not small against 1/Q = %.3g\n",
                  (cfg.params.t / cfg.params.d) * (cfg.params.t / cfg.params.d),
                  1.0 / cfg.params.Q);
    std::printf("gamma core coverage = %.3g (min |grad psi| on gamma = %.3g)\n",
                b.stream.core_coverage, b.stream.min_grad_on_gamma);
    field = std::move(b.field);
    const EnergyBreakdown e = total_energy(field, cfg.params);
    std::printf("stray fraction = %.3g\n", e.total > 0.0 ? e.stray / e.total : 0.0);
    print_breakdown(e);
  } else if (kind == "neel") {
    const StripGrid g = grid_from_config(cfg, true);
    NeelProfileResult n =
        build_neel_profile(cfg.params, uniform_profile_samples(g.L, g.n1));
    if (n.regime_warning)
      std::printf("warning: (t/d)^2 = %.3g is not large against Q = %.3g\n",
                  (cfg.params.t / cfg.params.d) * (cfg.params.t / cfg.params.d), cfg.params.Q);
    if (n.truncation_warning)
      std::printf("warning: L = %.3g < wall tail t/Q = %.3g, truncated tail energy ~ %.3g\n",
                  g.L, cfg.params.t / cfg.params.Q, n.truncated_tail_energy);
    const std::size_t centre = (g.n1 - 1) / 2;
    std::printf("m1(0) = %.12g\n", std::cos(n.profile.theta[centre]));
    field = lift_profile(n.profile, g);
    print_breakdown(total_energy(field, cfg.params));
  } else {
    throw std::invalid_argument("build: kind must be 'bloch' or 'neel'");
  }
  print_validation(validate_admissible(field));
  write_field_file(out, field, cfg.compact);
  std::printf("wrote %s\n", out.c_str());
  return 0;
}

int cmd_relax(const RunConfig& cfg, const std::string& field_path, const std::string& out,
              const std::string& trace_path) {
  const MagnetizationField f = read_field_file(field_path);
  auto [relaxed, rep] = relax(f, cfg.params, cfg.relax);
  std::printf("iterations = %zu, termination = %s, final grad norm = %.3g\n", rep.iterations,
              rep.termination.c_str(), rep.final_grad_norm);
  print_breakdown(rep.final_energy);
  if (!out.empty()) {
    write_field_file(out, relaxed, cfg.compact);
    std::printf("wrote %s\n", out.c_str());
  }
  if (!trace_path.empty()) {
    write_text_file(trace_path, relax_trace_csv(rep, cfg.compact));
    std::printf("wrote %s\n", trace_path.c_str());
  }
  return 0;
}

int cmd_sweep(const RunConfig& cfg, const std::string& out, const std::string& svg) {
  if (cfg.sweep_opts.Qs.empty())
    throw std::invalid_argument("sweep: config must list sweep.Q values");
  const SweepTable table = run_sweep(cfg.sweep_opts);
  write_text_file(out, sweep_table_csv(table, cfg.compact, cfg.seed));
  std::printf("wrote %s (%zu points)\n", out.c_str(), table.points.size());
  for (const SweepPoint& p : table.points)
    std::printf("Q=%-10.3g t/d=%-8.4g E_min=%-12.5g winner=%-6s status=%s\n", p.Q, p.t_over_d,
                p.E_min, p.winner.c_str(), p.status.c_str());
  if (!svg.empty()) {
    write_text_file(svg, sweep_svg(table, cfg.sweep_opts.d));
    std::printf("wrote %s\n", svg.c_str());
  }
  return 0;
}

int cmd_verify_bounds(const RunConfig& cfg, const std::string& out) {
  EnsembleOptions opts;
  opts.params = cfg.params;
  opts.grid = StripGrid(cfg.bounds_L_over_t * cfg.params.t, cfg.params.t, cfg.bounds_n1,
                        cfg.bounds_n3);
  opts.n_perturbations = cfg.bounds_n_perturbations;
  opts.seed = cfg.seed;
  opts.perturb_amplitude = cfg.bounds_amplitude;
  opts.relax = cfg.relax;
  opts.construction_delta = cfg.construction_delta;
  const EnsembleReport rep = run_bounds_ensemble(opts);

  std::printf("lemma l2:   max ratio = %.4g (calibrated %.4g)\n", rep.max_l2, kCalibratedL2);
  std::printf("lemma l1:   max ratio = %.4g (calibrated %.4g)\n", rep.max_l1, kCalibratedL1);
  std::printf("poincare:   max ratio = %.4g (calibrated %.4g)\n", rep.max_poincare,
              kCalibratedPoincare);
  std::printf("lower bound ratio range = [%.4g, %.4g]\n", rep.min_lower_bound,
              rep.max_lower_bound);
  if (!out.empty()) {
    std::string s;
    s += std::string("# ") + kToolVersion + "\n";
    s += "# config: " + cfg.compact + "\n";
    s += "# seed: " + std::to_string(cfg.seed) + "\n";
    s += "lemma,provenance,lhs,rhs,ratio\n";
    for (const BoundReport& r : rep.rows)
      s += r.lemma + "," + r.provenance + "," + format_double(r.lhs) + "," +
           format_double(r.rhs) + "," + format_double(r.ratio) + "\n";
    write_text_file(out, s);
    std::printf("wrote %s\n", out.c_str());
  }
  const bool ok = rep.max_l2 <= 10.0 * kCalibratedL2 && rep.max_l1 <= 10.0 * kCalibratedL1 &&
                  rep.max_poincare <= 10.0 * kCalibratedPoincare;
  if (!ok) {
    std::printf("FAIL: a ratio exceeds 10x its calibrated constant\n");
    return 1;
  }
  std::printf("all ratios within 10x calibrated constants\n");
  return 0;
}

int cmd_crossover(const RunConfig& cfg, const std::string& out) {
  if (cfg.crossover_Q.empty())
    throw std::invalid_argument("crossover: config must list crossover.Q values");
  std::vector<CrossoverResult> results;
  for (double Q : cfg.crossover_Q) {
    CrossoverResult r =
        find_crossover(Q, cfg.crossover_lo, cfg.crossover_hi, cfg.sweep_opts,
                       cfg.crossover_rel_width);
    std::printf("Q=%.3g: t*/d = %.4g, sqrt(ln 1/Q) = %.4g, ratio = %.4g (%zu probes)\n", r.Q,
                r.t_star_over_d, r.predicted_scale, r.ratio, r.probes.size());
    results.push_back(std::move(r));
  }
  if (!out.empty()) {
    write_text_file(out, crossover_csv(results, cfg.compact, cfg.seed));
    std::printf("wrote %s\n", out.c_str());
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"wallscale: thin-film domain-wall energy laboratory"};
  app.require_subcommand(1);

  std::string config_path, field_path, out_path, trace_path, svg_path, kind;

  CLI::App* energy = app.add_subcommand("energy", "evaluate the energy of a field file");
  energy->add_option("--config", config_path)->required();
  energy->add_option("--field", field_path)->required();
  energy->add_option("--out", out_path);

  CLI::App* build = app.add_subcommand("build", "build a wall construction");
  build->add_option("--config", config_path)->required();
  build->add_option("--kind", kind)->required()->check(CLI::IsMember({"bloch", "neel"}));
  build->add_option("--out", out_path)->required();

  CLI::App* relax_cmd = app.add_subcommand("relax", "relax a field file");
  relax_cmd->add_option("--config", config_path)->required();
  relax_cmd->add_option("--field", field_path)->required();
  relax_cmd->add_option("--out", out_path);
  relax_cmd->add_option("--trace", trace_path);

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "run the (Q, t/d) parameter study");
  sweep_cmd->add_option("--config", config_path)->required();
  sweep_cmd->add_option("--out", out_path)->required();
  sweep_cmd->add_option("--svg", svg_path);

  CLI::App* vb = app.add_subcommand("verify-bounds", "ensemble audit of the lemma ratios");
  vb->add_option("--config", config_path)->required();
  vb->add_option("--out", out_path);

  CLI::App* xo = app.add_subcommand("crossover", "locate the Bloch/Neel energy crossover");
  xo->add_option("--config", config_path)->required();
  xo->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const RunConfig cfg = load_config(config_path);
    if (energy->parsed()) return cmd_energy(cfg, field_path, out_path);
    if (build->parsed()) return cmd_build(cfg, kind, out_path);
    if (relax_cmd->parsed()) return cmd_relax(cfg, field_path, out_path, trace_path);
    if (sweep_cmd->parsed()) return cmd_sweep(cfg, out_path, svg_path);
    if (vb->parsed()) return cmd_verify_bounds(cfg, out_path);
    if (xo->parsed()) return cmd_crossover(cfg, out_path);
  } catch (const FileParseError& e) {
    std::fprintf(stderr, "parse error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "validation error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}

}  // namespace wallscale
