#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "wallscale/field.hpp"
#include "wallscale/grid.hpp"
#include "wallscale/ops1d.hpp"

using namespace wallscale;

TEST_CASE("grid geometry") {
  StripGrid g(5.0, 1.0, 11, 5);
  CHECK(g.h1() == doctest::Approx(1.0));
  CHECK(g.h3() == doctest::Approx(0.25));
  CHECK(g.x1(0) == doctest::Approx(-5.0));
  CHECK(g.x1(10) == doctest::Approx(5.0));
  CHECK(g.x3(0) == doctest::Approx(-0.5));
  CHECK(g.x3(4) == doctest::Approx(0.5));
  CHECK_THROWS_AS(StripGrid(5.0, 1.0, 3, 5), std::invalid_argument);
  CHECK_THROWS_AS(StripGrid(-1.0, 1.0, 11, 5), std::invalid_argument);
}

TEST_CASE("soft regime flag") {
  MaterialParams p;
  p.d = 1.0;
  p.Q = 1e-3;
  p.t = 1.0;
  CHECK(p.in_soft_regime());
  p.Q = 0.2;
  CHECK_FALSE(p.in_soft_regime());  // Q >= q_max
  p.Q = 1e-3;
  p.t = 50.0;
  CHECK_FALSE(p.in_soft_regime());  // (t/d)^2 >= 1/Q
  p.t = 0.02;
  CHECK_FALSE(p.in_soft_regime());  // (t/d)^2 <= Q
}

TEST_CASE("summation by parts identity is exact") {
  for (std::size_t n : {2ul, 3ul, 5ul, 17ul}) {
    const double h = 0.37;
    std::vector<double> f(n), gg(n), Df(n), Dg(n);
    for (std::size_t i = 0; i < n; ++i) {
      f[i] = std::sin(1.3 * double(i)) + 0.2 * double(i);
      gg[i] = std::cos(0.7 * double(i) * double(i));
    }
    diff1(f.data(), Df.data(), n, h);
    diff1(gg.data(), Dg.data(), n, h);
    const std::vector<double> w = trapezoid_weights(n, h);
    double lhs = 0.0;
    for (std::size_t i = 0; i < n; ++i) lhs += w[i] * (Df[i] * gg[i] + f[i] * Dg[i]);
    const double rhs = f[n - 1] * gg[n - 1] - f[0] * gg[0];
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
  }
}

TEST_CASE("diff1 transpose is the adjoint") {
  const std::size_t n = 9;
  const double h = 0.21;
  std::vector<double> f(n), gg(n), Df(n), Dtg(n);
  for (std::size_t i = 0; i < n; ++i) {
    f[i] = std::sin(2.1 * double(i));
    gg[i] = std::cos(1.1 * double(i));
  }
  diff1(f.data(), Df.data(), n, h);
  diff1_transpose(gg.data(), Dtg.data(), n, h);
  double a = 0.0, b = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    a += Df[i] * gg[i];
    b += f[i] * Dtg[i];
  }
  CHECK(a == doctest::Approx(b).epsilon(1e-14));
}

TEST_CASE("make_uniform") {
  StripGrid g(5.0, 1.0, 8, 4);
  MagnetizationField f = make_uniform(g, {0.0, 1.0, 0.0});
  for (std::size_t p = 0; p < g.size(); ++p) {
    CHECK(f.m2[p] == 1.0);
    CHECK(f.m1[p] == 0.0);
  }
  MagnetizationField fx = make_uniform(g, {1.0, 0.0, 0.0});
  CHECK(fx.m2[0] == 0.0);
  CHECK_THROWS_AS(make_uniform(g, {0.0, 0.0, 2.0}), std::invalid_argument);
}

TEST_CASE("validate_admissible") {
  StripGrid g(5.0, 1.0, 16, 4);
  SUBCASE("uniform (1,0,0) fails clamps with residual 1") {
    const AdmissibilityReport r = validate_admissible(make_uniform(g, {1.0, 0.0, 0.0}));
    CHECK(r.norm_ok);
    CHECK_FALSE(r.clamp_ok);
    // |(1,0,0) - (0,-1,0)| = sqrt(2), and the m1 residual alone is 1
    CHECK(r.clamp_residual_left == doctest::Approx(std::sqrt(2.0)));
    CHECK_FALSE(r.pass);
  }
  SUBCASE("one node scaled by 1.01 fails the norm check") {
    MagnetizationField f = make_uniform(g, {0.0, 1.0, 0.0});
    enforce_clamps(f);
    f.m2[g.idx(5, 2)] = 1.01;
    const AdmissibilityReport r = validate_admissible(f);
    CHECK(r.max_norm_residual == doctest::Approx(0.01));
    CHECK_FALSE(r.pass);
  }
  SUBCASE("random admissible field passes") {
    const MagnetizationField f = random_admissible_field(g, 42);
    const AdmissibilityReport r = validate_admissible(f);
    CHECK(r.pass);
    CHECK(r.max_norm_residual <= 1e-12);
  }
}

TEST_CASE("vertical_average") {
  StripGrid g(4.0, 2.0, 9, 8);
  SUBCASE("constant field") {
    const MagnetizationField f = make_uniform(g, {0.0, 1.0, 0.0});
    const std::vector<double> a = vertical_average(f, 2);
    for (double v : a) CHECK(v == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("odd-in-x3 component averages to zero") {
    MagnetizationField f = make_uniform(g, {0.0, 1.0, 0.0});
    for (std::size_t j = 0; j < g.n3; ++j)
      for (std::size_t i = 0; i < g.n1; ++i)
        f.m3[g.idx(i, j)] = g.x3(j) * 2.0 / g.t;  // raw component test, no renormalization
    const std::vector<double> a = vertical_average(f, 3);
    for (double v : a) CHECK(std::abs(v) <= 1e-14);
  }
  SUBCASE("trapezoid exact for linear in x3") {
    MagnetizationField f(g);
    for (std::size_t j = 0; j < g.n3; ++j)
      for (std::size_t i = 0; i < g.n1; ++i)
        f.m1[g.idx(i, j)] = 0.3 + 0.7 * g.x3(j);
    const std::vector<double> a = vertical_average(f, 1);
    for (double v : a) CHECK(v == doctest::Approx(0.3).epsilon(1e-13));
  }
  SUBCASE("matches the piecewise-linear refinement oracle on a random smooth field") {
    const MagnetizationField f = random_admissible_field(g, 7);
    const std::vector<double> a = vertical_average(f, 1);
    // oracle: integrate the piecewise-linear interpolant of the same nodal
    // data on a 64x refined grid
    for (std::size_t i = 0; i < g.n1; i += 3) {
      const std::size_t R = 64;
      double acc = 0.0;
      for (std::size_t j = 0; j + 1 < g.n3; ++j) {
        const double a0 = f.m1[g.idx(i, j)], a1 = f.m1[g.idx(i, j + 1)];
        const double hr = g.h3() / double(R);
        for (std::size_t r = 0; r < R; ++r) {
          const double u0 = double(r) / double(R), u1 = double(r + 1) / double(R);
          acc += 0.5 * ((a0 + (a1 - a0) * u0) + (a0 + (a1 - a0) * u1)) * hr;
        }
      }
      CHECK(a[i] == doctest::Approx(acc / g.t).epsilon(1e-10));
    }
  }
  CHECK_THROWS_AS(vertical_average(make_uniform(g, {0.0, 1.0, 0.0}), 4),
                  std::invalid_argument);
}

TEST_CASE("vertical_average is linear in the field component") {
  StripGrid g(4.0, 1.0, 9, 6);
  const MagnetizationField f1 = random_admissible_field(g, 11);
  const MagnetizationField f2 = random_admissible_field(g, 12);
  MagnetizationField sum(g);
  for (std::size_t p = 0; p < g.size(); ++p) sum.m1[p] = 2.0 * f1.m1[p] + 3.0 * f2.m1[p];
  const auto a1 = vertical_average(f1, 1);
  const auto a2 = vertical_average(f2, 1);
  const auto as = vertical_average(sum, 1);
  for (std::size_t i = 0; i < g.n1; ++i)
    CHECK(as[i] == doctest::Approx(2.0 * a1[i] + 3.0 * a2[i]).epsilon(1e-12));
}

TEST_CASE("perturb_field stays admissible") {
  StripGrid g(6.0, 1.0, 24, 6);
  const MagnetizationField base = random_admissible_field(g, 5);
  for (std::uint64_t s : {1ull, 2ull, 3ull}) {
    const MagnetizationField f = perturb_field(base, s, 0.3);
    CHECK(validate_admissible(f).pass);
  }
}
