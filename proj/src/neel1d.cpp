#include "wallscale/neel1d.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wallscale {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double strip_rod_kernel(double r, double t) {
  // J(r) = -(1/2pi) * int_0^t (t-s) ln(r^2+s^2) ds  (doubled even part folded in)
  const double a = std::abs(r);
  double I;
  if (a < 1e-14 * t) {
    const double lt2 = 2.0 * std::log(t);
    I = 0.5 * t * t * lt2 - 1.5 * t * t;
  } else if (a > 6.0 * t) {
    // large-separation series; the closed form cancels catastrophically there
    const double q = (t / a) * (t / a);
    I = t * t * (std::log(a) + q * (1.0 / 12.0 + q * (-1.0 / 60.0 + q / 168.0)));
  } else {
    const double r2 = a * a, t2 = t * t;
    const double lrt = std::log(r2 + t2);
    const double lr = std::log(r2);
    I = t * (t * lrt - 2.0 * t + 2.0 * a * std::atan(t / a)) -
        0.5 * ((r2 + t2) * (lrt - 1.0) - r2 * (lr - 1.0));
  }
  return -I / (2.0 * kPi);
}

std::vector<double> graded_profile_samples(double L, double h_core, double core_extent,
                                           double growth) {
  if (!(L > core_extent) || !(h_core > 0.0) || !(growth > 1.0))
    throw std::invalid_argument("graded_profile_samples: bad parameters");
  std::vector<double> right;
  double x = 0.0, h = h_core;
  right.push_back(0.0);
  while (x < L) {
    if (x >= core_extent) h *= growth;
    x += h;
    if (x > L) x = L;
    right.push_back(x);
  }
  std::vector<double> out;
  out.reserve(2 * right.size() - 1);
  for (std::size_t k = right.size(); k-- > 1;) out.push_back(-right[k]);
  for (double v : right) out.push_back(v);
  return out;
}

NeelWallFunctional::NeelWallFunctional(std::vector<double> x_samples,
                                       const MaterialParams& params)
    : x_(std::move(x_samples)), params_(params) {
  params_.validate();
  const std::size_t n = x_.size();
  if (n < 4) throw std::invalid_argument("NeelWallFunctional: too few samples");
  cell_h_.resize(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    cell_h_[i] = x_[i + 1] - x_[i];
    if (!(cell_h_[i] > 0.0))
      throw std::invalid_argument("NeelWallFunctional: samples must be increasing");
  }
  node_w_.assign(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    node_w_[i] += 0.5 * cell_h_[i];
    node_w_[i + 1] += 0.5 * cell_h_[i];
  }
  // cell-midpoint kernel matrix (nondimensionalized by t)
  const double t = params_.t;
  const std::size_t nc = n - 1;
  std::vector<double> mid(nc);
  for (std::size_t i = 0; i < nc; ++i) mid[i] = (0.5 * (x_[i] + x_[i + 1])) / t;
  kernel_.resize(nc * nc);
  for (std::size_t a = 0; a < nc; ++a)
    for (std::size_t b = 0; b <= a; ++b) {
      const double J = strip_rod_kernel(mid[a] - mid[b], 1.0);
      kernel_[a * nc + b] = J;
      kernel_[b * nc + a] = J;
    }
}

EnergyBreakdown NeelWallFunctional::energy(const std::vector<double>& theta) const {
  const std::size_t n = x_.size(), nc = n - 1;
  EnergyBreakdown e;
  double ex = 0.0;
  for (std::size_t i = 0; i < nc; ++i) {
    const double dth = theta[i + 1] - theta[i];
    ex += dth * dth / cell_h_[i];
  }
  e.exchange = params_.d * params_.d * params_.t * ex;

  double an = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double c = std::cos(theta[i]);
    an += node_w_[i] * c * c;
  }
  e.anisotropy = params_.Q * params_.t * an;

  std::vector<double> dm(nc);
  for (std::size_t i = 0; i < nc; ++i)
    dm[i] = std::cos(theta[i + 1]) - std::cos(theta[i]);
  double st = 0.0;
  for (std::size_t a = 0; a < nc; ++a) {
    double row = 0.0;
    const double* K = kernel_.data() + a * nc;
    for (std::size_t b = 0; b < nc; ++b) row += K[b] * dm[b];
    st += dm[a] * row;
  }
  e.stray = params_.t * params_.t * st;
  e.total = e.exchange + e.anisotropy + e.stray;
  return e;
}

double NeelWallFunctional::energy_and_gradient(const std::vector<double>& theta,
                                               std::vector<double>& grad) const {
  const std::size_t n = x_.size(), nc = n - 1;
  grad.assign(n, 0.0);

  const double cex = params_.d * params_.d * params_.t;
  double ex = 0.0;
  for (std::size_t i = 0; i < nc; ++i) {
    const double dth = theta[i + 1] - theta[i];
    ex += dth * dth / cell_h_[i];
    grad[i + 1] += cex * 2.0 * dth / cell_h_[i];
    grad[i] -= cex * 2.0 * dth / cell_h_[i];
  }

  const double can = params_.Q * params_.t;
  double an = 0.0;
  std::vector<double> cth(n), sth(n);
  for (std::size_t i = 0; i < n; ++i) {
    cth[i] = std::cos(theta[i]);
    sth[i] = std::sin(theta[i]);
    an += node_w_[i] * cth[i] * cth[i];
    grad[i] += can * node_w_[i] * 2.0 * cth[i] * (-sth[i]);
  }

  std::vector<double> dm(nc), u(nc);
  for (std::size_t i = 0; i < nc; ++i) dm[i] = cth[i + 1] - cth[i];
  double st = 0.0;
  for (std::size_t a = 0; a < nc; ++a) {
    double row = 0.0;
    const double* K = kernel_.data() + a * nc;
    for (std::size_t b = 0; b < nc; ++b) row += K[b] * dm[b];
    u[a] = row;
    st += dm[a] * row;
  }
  const double cst = params_.t * params_.t;
  // dE_s/dm_i = 2 (u_{i-1} - u_i); chain rule m = cos(theta)
  for (std::size_t i = 0; i < n; ++i) {
    double dmdi = 0.0;
    if (i > 0) dmdi += u[i - 1];
    if (i < nc) dmdi -= u[i];
    grad[i] += cst * 2.0 * dmdi * (-sth[i]);
  }

  grad.front() = 0.0;
  grad.back() = 0.0;
  return cex * ex + can * an + cst * st;
}

ProfileRelaxResult relax_profile(const NeelWallFunctional& fn, std::vector<double> theta,
                                 const ProfileRelaxOptions& opts) {
  const std::size_t n = theta.size();
  if (n != fn.samples().size())
    throw std::invalid_argument("relax_profile: theta size mismatch");
  theta.front() = -0.5 * kPi;
  theta.back() = 0.5 * kPi;

  ProfileRelaxResult out;
  std::vector<double> grad, trial(n), gtrial;
  double E = fn.energy_and_gradient(theta, grad);

  double g2 = 0.0, gsup = 0.0;
  auto measure = [&](const std::vector<double>& g) {
    g2 = 0.0;
    gsup = 0.0;
    for (double v : g) {
      g2 += v * v;
      gsup = std::max(gsup, std::abs(v));
    }
  };
  measure(grad);

  double step = gsup > 0.0 ? 0.1 / gsup : 1.0;
  const double step_init = step;
  out.termination = "max_iters";
  std::size_t it = 0;
  for (; it < opts.max_iters; ++it) {
    if (gsup <= opts.grad_tol) {
      out.termination = "converged";
      break;
    }
    bool accepted = false;
    while (step >= 1e-14 * step_init) {
      for (std::size_t i = 0; i < n; ++i) trial[i] = theta[i] - step * grad[i];
      trial.front() = -0.5 * kPi;
      trial.back() = 0.5 * kPi;
      const double Et = fn.energy_and_gradient(trial, gtrial);
      if (std::isfinite(Et) && Et <= E - opts.armijo_c * step * g2) {
        theta.swap(trial);
        grad.swap(gtrial);
        E = Et;
        measure(grad);
        accepted = true;
        step = std::min(step * 2.0, 1e4 * step_init);
        break;
      }
      step *= opts.armijo_factor;
    }
    if (!accepted) {
      out.termination = "stalled";
      break;
    }
  }
  out.iterations = it;
  out.profile.L = std::max(std::abs(fn.samples().front()), std::abs(fn.samples().back()));
  out.profile.x = fn.samples();
  out.profile.theta = std::move(theta);
  out.energy = fn.energy(out.profile.theta);
  return out;
}

ProfileRelaxResult relax_neel_branch(const MaterialParams& params,
                                     const NeelBranchOptions& opts) {
  params.validate();
  const double core = params.d * params.d / params.t;
  const double L = std::max(opts.tail_factor * params.t / params.Q, 6.0 * params.t);
  const double h_core = core / opts.points_per_core;
  std::vector<double> x =
      graded_profile_samples(L, h_core, opts.core_extent_factor * core, opts.growth);
  NeelProfileResult init = build_neel_profile(params, x);
  NeelWallFunctional fn(x, params);
  return relax_profile(fn, init.profile.theta, opts.relax);
}

}  // namespace wallscale
