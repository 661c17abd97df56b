#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace wallscale {

/// Material scales of the thin-film wall model: exchange length d,
/// quality factor Q, film thickness t.  Lengths are in user units;
/// energies come out in (user length)^2.
struct MaterialParams {
  double d = 1.0;
  double Q = 1e-3;
  double t = 1.0;

  /// regime margin for the softness check
  double q_max = 0.05;

  void validate() const;

  double t_over_d() const { return t / d; }

  /// Q < q_max, Q < (t/d)^2 < 1/Q
  bool in_soft_regime() const {
    const double r2 = (t / d) * (t / d);
    return Q < q_max && Q < r2 && r2 < 1.0 / Q;
  }
};

/// Uniform collocated grid on the truncated strip [-L, L] x [-t/2, t/2].
struct StripGrid {
  double L = 0.0;   // half-width in x1
  double t = 0.0;   // strip thickness (x3 extent)
  std::size_t n1 = 0;
  std::size_t n3 = 0;

  StripGrid() = default;
  StripGrid(double half_width, double thickness, std::size_t nodes1, std::size_t nodes3)
      : L(half_width), t(thickness), n1(nodes1), n3(nodes3) {
    if (!(L > 0.0) || !(t > 0.0)) throw std::invalid_argument("StripGrid: L and t must be positive");
    if (n1 < 4) throw std::invalid_argument("StripGrid: n1 must be >= 4");
    if (n3 < 2) throw std::invalid_argument("StripGrid: n3 must be >= 2");
  }

  double h1() const { return 2.0 * L / double(n1 - 1); }
  double h3() const { return t / double(n3 - 1); }
  double x1(std::size_t i) const { return -L + double(i) * h1(); }
  double x3(std::size_t j) const { return -0.5 * t + double(j) * h3(); }
  std::size_t size() const { return n1 * n3; }
  /// row-major, x3 outer, x1 inner
  std::size_t idx(std::size_t i, std::size_t j) const { return j * n1 + i; }
  bool same_layout(const StripGrid& o) const {
    return n1 == o.n1 && n3 == o.n3 && L == o.L && t == o.t;
  }
};

/// Default truncation rule: L = max(c5*t, c_tail*t/Q) when a long Neel tail
/// is expected, L = c5*t otherwise (Bloch fields are compactly supported).
struct TruncationRule {
  double c5 = 5.0;
  double c_tail = 2.0;
  double half_width(const MaterialParams& p, bool neel_tail) const {
    const double base = c5 * p.t;
    if (!neel_tail) return base;
    const double tail = c_tail * p.t / p.Q;
    return tail > base ? tail : base;
  }
};

}  // namespace wallscale
