#include "wallscale/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "wallscale/io.hpp"

namespace wallscale {

using nlohmann::json;

namespace {

template <typename T>
void get_if(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace

RunConfig parse_config_json(const std::string& text, const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FileParseError(origin + ": " + e.what());
  }

  RunConfig c;
  get_if(j, "seed", c.seed);
  if (j.contains("params")) {
    const json& p = j["params"];
    get_if(p, "d", c.params.d);
    get_if(p, "Q", c.params.Q);
    get_if(p, "t", c.params.t);
    get_if(p, "q_max", c.params.q_max);
    if (p.contains("t_over_d")) c.params.t = p["t_over_d"].get<double>() * c.params.d;
  }
  if (j.contains("grid")) {
    const json& g = j["grid"];
    get_if(g, "n1", c.n1);
    get_if(g, "n3", c.n3);
    get_if(g, "L_over_t", c.L_over_t);
    get_if(g, "c5", c.trunc.c5);
    get_if(g, "c_tail", c.trunc.c_tail);
    get_if(g, "resolution", c.grid_resolution);
    get_if(g, "n1_cap", c.n1_cap);
    get_if(g, "n3_cap", c.n3_cap);
  }
  if (j.contains("construction")) {
    const json& g = j["construction"];
    get_if(g, "delta", c.construction_delta);
    get_if(g, "mollify_width", c.mollify_width);
  }
  if (j.contains("relax")) {
    const json& r = j["relax"];
    get_if(r, "max_iters", c.relax.max_iters);
    get_if(r, "grad_tol", c.relax.grad_tol);
    get_if(r, "step0", c.relax.step0);
    get_if(r, "armijo_factor", c.relax.armijo_factor);
    get_if(r, "armijo_c", c.relax.armijo_c);
    get_if(r, "record_trace", c.relax.record_trace);
  }
  if (j.contains("neel_branch")) {
    const json& n = j["neel_branch"];
    get_if(n, "points_per_core", c.neel.points_per_core);
    get_if(n, "core_extent_factor", c.neel.core_extent_factor);
    get_if(n, "growth", c.neel.growth);
    get_if(n, "tail_factor", c.neel.tail_factor);
    get_if(n, "max_iters", c.neel.relax.max_iters);
    get_if(n, "grad_tol", c.neel.relax.grad_tol);
  }
  c.sweep_opts.d = c.params.d;
  c.sweep_opts.bloch_relax = c.relax;
  c.sweep_opts.neel = c.neel;
  c.sweep_opts.construction_delta = c.construction_delta;
  c.sweep_opts.seed = c.seed;
  if (j.contains("sweep")) {
    const json& s = j["sweep"];
    if (s.contains("Q")) c.sweep_opts.Qs = s["Q"].get<std::vector<double>>();
    if (s.contains("t_over_d"))
      c.sweep_opts.t_over_d = s["t_over_d"].get<std::vector<double>>();
    get_if(s, "bloch_L_over_t", c.sweep_opts.grid.bloch_L_over_t);
    get_if(s, "resolution", c.sweep_opts.grid.resolution);
    get_if(s, "n1_cap", c.sweep_opts.grid.n1_cap);
    get_if(s, "n3_cap", c.sweep_opts.grid.n3_cap);
  }
  if (j.contains("crossover")) {
    const json& x = j["crossover"];
    if (x.contains("Q")) c.crossover_Q = x["Q"].get<std::vector<double>>();
    if (x.contains("bracket")) {
      const auto b = x["bracket"].get<std::vector<double>>();
      if (b.size() != 2) throw FileParseError(origin + ": crossover.bracket must be [lo, hi]");
      c.crossover_lo = b[0];
      c.crossover_hi = b[1];
    }
    get_if(x, "rel_width", c.crossover_rel_width);
  }
  if (j.contains("bounds")) {
    const json& b = j["bounds"];
    get_if(b, "n_perturbations", c.bounds_n_perturbations);
    get_if(b, "amplitude", c.bounds_amplitude);
    get_if(b, "grid_n1", c.bounds_n1);
    get_if(b, "grid_n3", c.bounds_n3);
    get_if(b, "L_over_t", c.bounds_L_over_t);
  }
  c.params.validate();
  c.compact = j.dump();
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileParseError(path + ": cannot open config");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_json(ss.str(), path);
}

StripGrid grid_from_config(const RunConfig& cfg, bool neel_tail) {
  const MaterialParams& p = cfg.params;
  const double L =
      cfg.L_over_t > 0.0 ? cfg.L_over_t * p.t : cfg.trunc.half_width(p, neel_tail);
  std::size_t n1 = cfg.n1, n3 = cfg.n3;
  if (n1 == 0 || n3 == 0) {
    const double feature = std::min({p.d, cfg.construction_delta * p.t, p.t});
    const double h = feature / cfg.grid_resolution;
    if (n1 == 0) {
      n1 = std::size_t(std::ceil(2.0 * L / h)) + 1;
      n1 = std::clamp<std::size_t>(n1, 61, cfg.n1_cap);
      if (n1 % 2 == 0) ++n1;
    }
    if (n3 == 0) {
      n3 = std::size_t(std::ceil(p.t / h)) + 1;
      n3 = std::clamp<std::size_t>(n3, 7, cfg.n3_cap);
      if (n3 % 2 == 0) ++n3;
    }
  }
  return StripGrid(L, p.t, n1, n3);
}

}  // namespace wallscale
