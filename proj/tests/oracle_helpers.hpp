#pragma once

// Test-only oracles, kept independent of the library's solver internals.

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

namespace oracle {

constexpr double kPi = 3.14159265358979323846;

// x1-periodic 2D Laplace Green function (period P), the periodization of
// -ln|r|/(2 pi).  Additive constant is fixed P-relative, which cancels for
// zero-net-charge systems.
inline double periodic_log_kernel(double x1, double x3, double P) {
  const double a = 2.0 * kPi * x3 / P;
  const double b = 2.0 * kPi * x1 / P;
  return -std::log(0.5 * (std::cosh(a) - std::cos(b))) / (4.0 * kPi);
}

// Dirichlet energy of the potential of two sinusoidal surface line charges
// +-eps*sin(k0 x1) at x3 = +-t/2, by direct real-space quadrature of the
// periodic log kernel (midpoint cells, analytic same-cell self term).
inline double sine_sheet_energy_quadrature(double eps, int n0, double t, double P,
                                           std::size_t M) {
  const double k0 = 2.0 * kPi * double(n0) / P;
  const double h = P / double(M);
  std::vector<double> lam(M), x(M);
  for (std::size_t i = 0; i < M; ++i) {
    x[i] = (double(i) + 0.5) * h;
    lam[i] = eps * std::sin(k0 * x[i]);
  }
  // faces: z = +t/2 carries +lam, z = -t/2 carries -lam
  double E = 0.0;
  // same-face pairs (two identical faces)
  double same = 0.0;
  for (std::size_t i = 0; i < M; ++i) {
    for (std::size_t j = 0; j < M; ++j) {
      if (i == j) continue;
      same += lam[i] * lam[j] * periodic_log_kernel(x[i] - x[j], 0.0, P);
    }
    // self cell: int int over the cell of the log kernel
    same += lam[i] * lam[i] * (-(std::log(kPi * h / P) - 1.5) / (2.0 * kPi));
  }
  E += 2.0 * same * h * h;
  // cross-face pairs (opposite signs, separation t), smooth kernel
  double cross = 0.0;
  for (std::size_t i = 0; i < M; ++i)
    for (std::size_t j = 0; j < M; ++j)
      cross += lam[i] * (-lam[j]) * periodic_log_kernel(x[i] - x[j], t, P);
  E += 2.0 * cross * h * h;
  return E;
}

// hand-derived closed form for the same configuration:
//   E = P eps^2 (1 - exp(-k0 t)) / (2 k0)
inline double sine_sheet_energy_closed_form(double eps, int n0, double t, double P) {
  const double k0 = 2.0 * kPi * double(n0) / P;
  return P * eps * eps * (1.0 - std::exp(-k0 * t)) / (2.0 * k0);
}

// Gagliardo double-sum form of the two-sided harmonic-extension energy of a
// P-periodic sample set (diagonal excluded; converges O(h) in the cell size)
inline double halfnorm_gagliardo(const std::vector<double>& g, double P) {
  const std::size_t N = g.size();
  const double h = P / double(N);
  const double c = (kPi / P) * (kPi / P);
  double acc = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      if (i == j) continue;
      const double d = g[i] - g[j];
      const double s = std::sin(kPi * double(i - j) * h / P);
      acc += d * d * c / (s * s);
    }
  return acc * h * h / kPi;
}

// trapezoid quadrature of an analytic function on a refined 1D grid
inline double refined_trapezoid(const std::function<double(double)>& f, double a, double b,
                                std::size_t n) {
  const double h = (b - a) / double(n - 1);
  double s = 0.5 * (f(a) + f(b));
  for (std::size_t i = 1; i + 1 < n; ++i) s += f(a + double(i) * h);
  return s * h;
}

}  // namespace oracle
