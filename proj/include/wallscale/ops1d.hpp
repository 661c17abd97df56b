#pragma once

#include <cstddef>
#include <vector>

namespace wallscale {

// First-derivative stencil used everywhere a one-sided/central difference is
// needed: second-order central in the interior, first-order one-sided at the
// two ends.  Together with trapezoid weights this pair satisfies the exact
// summation-by-parts identity
//   sum_p w_p (Df)_p g_p + sum_p w_p f_p (Dg)_p = f_{n-1} g_{n-1} - f_0 g_0,
// which is what makes the stray-field reciprocity check close to round-off.

/// trapezoid weights: h/2 at the ends, h inside
inline std::vector<double> trapezoid_weights(std::size_t n, double h) {
  std::vector<double> w(n, h);
  if (n > 0) {
    w.front() = 0.5 * h;
    w.back() = 0.5 * h;
  }
  return w;
}

/// y = D f (no aliasing: y must not be f)
template <typename T>
inline void diff1(const T* f, T* y, std::size_t n, double h) {
  if (n == 1) {
    y[0] = T(0.0);
    return;
  }
  const double inv_h = 1.0 / h;
  const double inv_2h = 0.5 / h;
  y[0] = (f[1] - f[0]) * inv_h;
  for (std::size_t p = 1; p + 1 < n; ++p) y[p] = (f[p + 1] - f[p - 1]) * inv_2h;
  y[n - 1] = (f[n - 1] - f[n - 2]) * inv_h;
}

/// y = D^T f (transpose of the stencil above, same spacing)
template <typename T>
inline void diff1_transpose(const T* f, T* y, std::size_t n, double h) {
  if (n == 1) {
    y[0] = T(0.0);
    return;
  }
  const double inv_h = 1.0 / h;
  const double inv_2h = 0.5 / h;
  for (std::size_t p = 0; p < n; ++p) y[p] = T(0.0);
  // row 0: (f[1]-f[0])/h contributes
  y[0] -= f[0] * inv_h;
  y[1] += f[0] * inv_h;
  for (std::size_t p = 1; p + 1 < n; ++p) {
    y[p + 1] += f[p] * inv_2h;
    y[p - 1] -= f[p] * inv_2h;
  }
  y[n - 1] += f[n - 1] * inv_h;
  y[n - 2] -= f[n - 1] * inv_h;
}

}  // namespace wallscale
