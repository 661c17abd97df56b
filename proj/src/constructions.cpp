#include "wallscale/constructions.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wallscale/ops1d.hpp"

namespace wallscale {

namespace {

constexpr double kPi = 3.14159265358979323846;

// quintic smoothstep and its primitive
double sstep(double u) {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  return u * u * u * (10.0 + u * (-15.0 + 6.0 * u));
}
double sstep_integral(double u) {  // int_0^u sstep
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 0.5 + (u - 1.0);
  const double u4 = u * u * u * u;
  return u4 * (2.5 + u * (-3.0 + u));
}

// flattening: f(s) = 0 for s <= delta/2, slope ramps smoothly to 1 at delta
double flatten(double s, double delta) {
  const double a = 0.5 * delta;
  if (s <= a) return 0.0;
  return a * sstep_integral((s - a) / a);
}
double flatten_prime(double s, double delta) {
  const double a = 0.5 * delta;
  return sstep((s - a) / a);
}

// x1 cutoff: 1 for |x| <= 1/2, 0 for |x| >= 1
double cutoff(double x) { return 1.0 - sstep(2.0 * (std::abs(x) - 0.5)); }

// odd saturating smooth sign: exactly +-1 for |u| >= 1
double smooth_sign(double u) {
  if (u <= -1.0) return -1.0;
  if (u >= 1.0) return 1.0;
  const double u2 = u * u;
  return u * (15.0 + u2 * (-10.0 + 3.0 * u2)) / 8.0;
}

double ellipse_x1(double z) { return 0.5 * std::sqrt(std::max(0.0, 0.25 - z * z)); }

}  // namespace

BlochStream build_bloch_stream(const StripGrid& grid, double delta) {
  if (!(delta > 0.0 && delta < 0.2))
    throw std::invalid_argument("build_bloch_stream: delta must be in (0, 0.2)");
  BlochStream s;
  s.grid = grid;
  s.delta = delta;
  const std::size_t n1 = grid.n1, n3 = grid.n3;
  const double t = grid.t;
  s.psi.resize(grid.size());
  for (std::size_t j = 0; j < n3; ++j) {
    const double z = grid.x3(j) / t;
    for (std::size_t i = 0; i < n1; ++i) {
      const double x = grid.x1(i) / t;
      const double r = std::sqrt(x * x + z * z);
      s.psi[grid.idx(i, j)] = flatten(0.5 - r, delta) * cutoff(x);
    }
  }

  const double hx = grid.h1() / t, hz = grid.h3() / t;
  auto max_grad_sq = [&]() {
    std::vector<double> dx(n1), col(n3), dz(n3);
    std::vector<double> gsq(grid.size(), 0.0);
    for (std::size_t j = 0; j < n3; ++j) {
      diff1(s.psi.data() + j * n1, dx.data(), n1, hx);
      for (std::size_t i = 0; i < n1; ++i) gsq[grid.idx(i, j)] += dx[i] * dx[i];
    }
    for (std::size_t i = 0; i < n1; ++i) {
      for (std::size_t j = 0; j < n3; ++j) col[j] = s.psi[grid.idx(i, j)];
      diff1(col.data(), dz.data(), n3, hz);
      for (std::size_t j = 0; j < n3; ++j) gsq[grid.idx(i, j)] += dz[j] * dz[j];
    }
    return *std::max_element(gsq.begin(), gsq.end());
  };

  double g2 = max_grad_sq();
  if (g2 > 1.0) {
    const double eta = std::sqrt(g2) - 1.0;
    s.rescale = 1.0 / (1.0 + eta);
    for (double& v : s.psi) v *= s.rescale;
    g2 = max_grad_sq();
  }
  s.max_grad_sq = g2;
  const double h = std::max(hx, hz);
  s.grad_allowance = 10.0 * h * h;

  // gamma polyline and the achieved |grad psi| along it (analytic form;
  // the cutoff w is identically 1 there)
  const std::size_t M = 129;
  s.gamma.resize(M);
  double min_g = 1e300;
  std::size_t covered = 0;
  const double delta_core = 0.05;
  for (std::size_t k = 0; k < M; ++k) {
    const double z = -0.5 + double(k) / double(M - 1);
    const double x = ellipse_x1(z);
    s.gamma[k] = {x, z};
    const double r = std::sqrt(x * x + z * z);
    const double gp = flatten_prime(0.5 - r, delta) * s.rescale;
    if (gp < min_g) min_g = gp;
    if (gp >= 1.0 - delta_core) ++covered;
  }
  s.min_grad_on_gamma = min_g;
  s.core_coverage = double(covered) / double(M);
  return s;
}

BlochBuildResult build_bloch(const StripGrid& grid, const MaterialParams& params,
                             double delta, double mollify_width) {
  params.validate();
  const double t = grid.t;
  const double hx = grid.h1() / t, hz = grid.h3() / t;
  if (std::max(hx, hz) > 0.5 * delta)
    throw std::invalid_argument(
        "build_bloch: grid too coarse to resolve the core (h > delta/2)");

  BlochBuildResult out;
  const double r2 = (t / params.d) * (t / params.d);
  out.regime_warning = r2 * params.Q > 0.5;

  out.stream = build_bloch_stream(grid, delta);
  const std::size_t n1 = grid.n1, n3 = grid.n3;
  const BlochStream& s = out.stream;

  std::vector<double> p1(grid.size(), 0.0), p3(grid.size(), 0.0);
  {
    std::vector<double> dx(n1), col(n3), dz(n3);
    for (std::size_t j = 0; j < n3; ++j) {
      diff1(s.psi.data() + j * n1, dx.data(), n1, hx);
      for (std::size_t i = 0; i < n1; ++i) p3[grid.idx(i, j)] = dx[i];  // m3 = d psi/d x1
    }
    for (std::size_t i = 0; i < n1; ++i) {
      for (std::size_t j = 0; j < n3; ++j) col[j] = s.psi[grid.idx(i, j)];
      diff1(col.data(), dz.data(), n3, hz);
      for (std::size_t j = 0; j < n3; ++j) p1[grid.idx(i, j)] = -dz[j];  // m1 = -d psi/d x3
    }
  }

  const double w_moll =
      mollify_width > 0.0 ? mollify_width : std::max(std::max(hx, hz), params.d / t);
  MagnetizationField f(grid);
  for (std::size_t j = 0; j < n3; ++j) {
    const double z = grid.x3(j) / t;
    for (std::size_t i = 0; i < n1; ++i) {
      const double x = grid.x1(i) / t;
      const std::size_t p = grid.idx(i, j);
      const double gsq = p1[p] * p1[p] + p3[p] * p3[p];
      const double side = x - ellipse_x1(z);
      const double m2 = smooth_sign(side / w_moll) * std::sqrt(std::max(0.0, 1.0 - gsq));
      double v1 = p1[p], v2 = m2, v3 = p3[p];
      const double n = std::sqrt(v1 * v1 + v2 * v2 + v3 * v3);
      if (n < 1e-9) {
        // surface vortex core at the gamma endpoints: direction degenerate
        f.set(i, j, {1.0, 0.0, 0.0});
      } else {
        f.set(i, j, {v1 / n, v2 / n, v3 / n});
      }
    }
  }
  enforce_clamps(f);
  out.field = std::move(f);
  return out;
}

std::vector<double> uniform_profile_samples(double L, std::size_t n) {
  if (n < 4) throw std::invalid_argument("uniform_profile_samples: n must be >= 4");
  std::vector<double> x(n);
  const double h = 2.0 * L / double(n - 1);
  for (std::size_t i = 0; i < n; ++i) x[i] = -L + double(i) * h;
  return x;
}

NeelProfileResult build_neel_profile(const MaterialParams& params,
                                     const std::vector<double>& x_samples) {
  params.validate();
  if (x_samples.size() < 4)
    throw std::invalid_argument("build_neel_profile: need at least 4 samples");
  const double log_arg = (params.t * params.t) / (params.Q * params.d * params.d);
  if (log_arg <= 1.0)
    throw std::invalid_argument("build_neel_profile: t^2/(Q d^2) must exceed 1");

  NeelProfileResult out;
  out.regime_warning = (params.t / params.d) * (params.t / params.d) < 10.0 * params.Q;

  const double q = params.Q / params.t;            // inverse outer scale
  const double eps2 = 1.0 / log_arg;               // Q d^2 / t^2
  const double inv_log_eps2 = 1.0 / std::log(eps2);
  auto U = [&](double x) {
    const double a = q * std::abs(x);
    const double arg = std::min(a * a + eps2 * eps2, 1.0);
    return 0.5 * std::log(arg) * inv_log_eps2;
  };

  const double L = std::max(std::abs(x_samples.front()), std::abs(x_samples.back()));
  out.profile.L = L;
  out.profile.x = x_samples;
  out.profile.theta.resize(x_samples.size());
  for (std::size_t i = 0; i < x_samples.size(); ++i) {
    const double x = x_samples[i];
    const double m1 = std::clamp(U(x), 0.0, 1.0);
    const double sgn = x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0);
    out.profile.theta[i] = sgn * std::acos(m1);
  }
  out.profile.theta.front() = -0.5 * kPi;
  out.profile.theta.back() = 0.5 * kPi;

  const double tail = params.t / params.Q;
  if (L < tail) {
    out.truncation_warning = true;
    // dropped anisotropy of the outer tail, midpoint quadrature of U^2
    const std::size_t M = 512;
    double acc = 0.0;
    const double hq = (tail - L) / double(M);
    for (std::size_t k = 0; k < M; ++k) {
      const double x = L + (double(k) + 0.5) * hq;
      const double u = U(x);
      acc += u * u * hq;
    }
    out.truncated_tail_energy = 2.0 * params.Q * params.t * acc;
  }
  return out;
}

MagnetizationField lift_profile(const Profile1D& profile, const StripGrid& grid) {
  if (profile.n() != grid.n1)
    throw std::invalid_argument("lift_profile: profile size does not match grid n1");
  const double tol = 1e-9 * grid.L;
  for (std::size_t i = 0; i < grid.n1; ++i)
    if (std::abs(profile.x[i] - grid.x1(i)) > tol)
      throw std::invalid_argument("lift_profile: profile x1 range does not match grid");
  MagnetizationField f(grid);
  for (std::size_t i = 0; i < grid.n1; ++i) {
    const double c = std::cos(profile.theta[i]);
    const double s = std::sin(profile.theta[i]);
    for (std::size_t j = 0; j < grid.n3; ++j) f.set(i, j, {c, s, 0.0});
  }
  enforce_clamps(f);
  return f;
}

double harmonic_extension_energy(const std::vector<double>& g, double L) {
  const std::size_t N = g.size() - 1;  // periodic samples, last node = image of first
  if (N < 3) throw std::invalid_argument("harmonic_extension_energy: too few samples");
  const double P = 2.0 * L;
  std::vector<double> in(N);
  for (std::size_t i = 0; i < N; ++i) in[i] = g[i];
  std::vector<double> re(N / 2 + 1), im(N / 2 + 1);
  {
    fftw_complex* spec = fftw_alloc_complex(N / 2 + 1);
    fftw_plan plan = fftw_plan_dft_r2c_1d(int(N), in.data(), spec, FFTW_ESTIMATE);
    fftw_execute(plan);
    for (std::size_t n = 0; n <= N / 2; ++n) {
      re[n] = spec[n][0] / double(N);
      im[n] = spec[n][1] / double(N);
    }
    fftw_destroy_plan(plan);
    fftw_free(spec);
  }
  double acc = 0.0;
  for (std::size_t n = 1; n <= N / 2; ++n) {
    const double k = 2.0 * kPi * double(n) / P;
    const double cn = (N % 2 == 0 && n == N / 2) ? 1.0 : 2.0;
    acc += cn * 2.0 * k * (re[n] * re[n] + im[n] * im[n]);
  }
  return P * acc;
}

EnergyBreakdown reduced_neel_energy(const Profile1D& profile, const MaterialParams& params) {
  params.validate();
  const std::size_t n = profile.n();
  if (n < 4) throw std::invalid_argument("reduced_neel_energy: too few samples");
  const double h = profile.x[1] - profile.x[0];
  for (std::size_t i = 1; i + 1 < n; ++i)
    if (std::abs((profile.x[i + 1] - profile.x[i]) - h) > 1e-9 * h)
      throw std::invalid_argument("reduced_neel_energy: profile grid must be uniform");

  EnergyBreakdown e;
  // exchange in angle form, cell-based so piecewise-linear theta is exact
  double ex = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double dth = profile.theta[i + 1] - profile.theta[i];
    ex += dth * dth / h;
  }
  e.exchange = params.d * params.d * params.t * ex;

  std::vector<double> m1(n);
  for (std::size_t i = 0; i < n; ++i) m1[i] = std::cos(profile.theta[i]);
  double an = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double w = (i == 0 || i == n - 1) ? 0.5 * h : h;
    an += w * m1[i] * m1[i];
  }
  e.anisotropy = params.Q * params.t * an;

  e.stray = params.t * params.t * harmonic_extension_energy(m1, profile.L);
  e.total = e.exchange + e.anisotropy + e.stray;
  return e;
}

}  // namespace wallscale
