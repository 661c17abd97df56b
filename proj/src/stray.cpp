#include "wallscale/stray.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <map>
#include <memory>
#include <stdexcept>

#include "wallscale/ops1d.hpp"

namespace wallscale {

namespace {

constexpr double kPi = 3.14159265358979323846;

using cplx = std::complex<double>;

// FFTW buffers and plans, cached per transform length.  Single-threaded use.
struct FftSlot {
  std::size_t n = 0;
  double* real = nullptr;
  fftw_complex* spec = nullptr;
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;

  explicit FftSlot(std::size_t len) : n(len) {
    real = fftw_alloc_real(n);
    spec = fftw_alloc_complex(n / 2 + 1);
    fwd = fftw_plan_dft_r2c_1d(int(n), real, spec, FFTW_ESTIMATE);
    bwd = fftw_plan_dft_c2r_1d(int(n), spec, real, FFTW_ESTIMATE);
  }
  ~FftSlot() {
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);
    fftw_free(real);
    fftw_free(spec);
  }
  FftSlot(const FftSlot&) = delete;
  FftSlot& operator=(const FftSlot&) = delete;
};

FftSlot& fft_slot(std::size_t n) {
  static std::map<std::size_t, std::unique_ptr<FftSlot>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, std::make_unique<FftSlot>(n)).first;
  return *it->second;
}

void check_finite(const MagnetizationField& f) {
  for (std::size_t p = 0; p < f.grid.size(); ++p)
    if (!std::isfinite(f.m1[p]) || !std::isfinite(f.m2[p]) || !std::isfinite(f.m3[p]))
      throw std::invalid_argument("stray field solve: field contains NaN/Inf");
}

// v = G_a mu on the uniform x3 nodes, spacing hz.  For a > 0 the kernel
// exp(-a|z_p - z_q|)/(2a) is Toeplitz in |p-q|, so the matvec reduces to two
// exponential recurrences; for a = 0 the kernel -|z_p - z_q|/2 reduces to
// prefix sums.  Both are O(n3).
void apply_mode_green(double a, double hz, const cplx* mu, cplx* v, std::size_t n3,
                      std::vector<cplx>& scratch) {
  if (a > 0.0) {
    const double E = std::exp(-a * hz);
    const double inv2a = 0.5 / a;
    scratch.resize(n3);
    cplx s = mu[0];
    scratch[0] = s;
    for (std::size_t p = 1; p < n3; ++p) {
      s = mu[p] + E * s;
      scratch[p] = s;
    }
    cplx r(0.0, 0.0);
    v[n3 - 1] = scratch[n3 - 1] * inv2a;
    for (std::size_t p = n3 - 1; p-- > 0;) {
      r = E * (mu[p + 1] + r);
      v[p] = (scratch[p] + r) * inv2a;
    }
  } else {
    // sum_q |p-q| mu_q = 2 p S_p - 2 T_p + T_end - p S_end
    cplx S(0.0, 0.0), T(0.0, 0.0);
    scratch.resize(2 * n3);
    for (std::size_t q = 0; q < n3; ++q) {
      S += mu[q];
      T += double(q) * mu[q];
      scratch[q] = S;
      scratch[n3 + q] = T;
    }
    const cplx S_end = S, T_end = T;
    for (std::size_t p = 0; p < n3; ++p) {
      const cplx acc = 2.0 * double(p) * scratch[p] - 2.0 * scratch[n3 + p] + T_end -
                       double(p) * S_end;
      v[p] = -0.5 * hz * acc;
    }
  }
}

struct ModeWork {
  std::vector<cplx> m1hat, m3hat;  // [n*n3 + j]
  std::vector<cplx> rho, mu, v, dzv, scratch;
  std::vector<double> wz;
};

// Shared driver: forward transforms, per-mode charge/solve/pairing, and
// (optionally) the adjoint pass that accumulates the gradient or stores the
// per-mode potential.
struct StrayResult {
  double dirichlet_nd = 0.0;
  double pairing_nd = 0.0;
  double k0_mass = 0.0;
};

StrayResult run_modes(const MagnetizationField& field, std::vector<double>* g1,
                      std::vector<double>* g3, StrayFieldSolution* sol) {
  check_finite(field);
  const StripGrid& g = field.grid;
  const std::size_t N = g.n1 - 1;  // periodic sample count
  const std::size_t n3 = g.n3;
  const std::size_t nmodes = N / 2 + 1;
  const double t = g.t;
  const double hz = g.h3() / t;
  const double P = 2.0 * g.L / t;

  FftSlot& slot = fft_slot(N);
  ModeWork w;
  w.m1hat.resize(nmodes * n3);
  w.m3hat.resize(nmodes * n3);
  w.rho.resize(n3);
  w.mu.resize(n3);
  w.v.resize(n3);
  w.dzv.resize(n3);
  w.wz = trapezoid_weights(n3, hz);

  const double invN = 1.0 / double(N);
  for (int comp = 0; comp < 2; ++comp) {
    const std::vector<double>& src = comp == 0 ? field.m1 : field.m3;
    std::vector<cplx>& dst = comp == 0 ? w.m1hat : w.m3hat;
    for (std::size_t j = 0; j < n3; ++j) {
      std::memcpy(slot.real, src.data() + j * g.n1, N * sizeof(double));
      fftw_execute(slot.fwd);
      for (std::size_t n = 0; n < nmodes; ++n)
        dst[n * n3 + j] = cplx(slot.spec[n][0], slot.spec[n][1]) * invN;
    }
  }

  std::vector<cplx> g1hat, g3hat;
  if (g1) {
    g1hat.assign(nmodes * n3, cplx(0.0, 0.0));
    g3hat.assign(nmodes * n3, cplx(0.0, 0.0));
  }
  if (sol) {
    sol->wavenumbers.resize(nmodes);
    sol->n3 = n3;
    sol->u_modes.assign(nmodes * n3, cplx(0.0, 0.0));
  }

  const bool even = (N % 2 == 0);
  StrayResult res;
  for (std::size_t n = 0; n < nmodes; ++n) {
    const double k = 2.0 * kPi * double(n) / P;
    const bool nyquist = even && (n == N / 2);
    const double kt = nyquist ? 0.0 : k;  // derivative multiplier
    const double cn = (n == 0 || nyquist) ? 1.0 : 2.0;
    const cplx* m1h = &w.m1hat[n * n3];
    const cplx* m3h = &w.m3hat[n * n3];

    diff1(m3h, w.rho.data(), n3, hz);
    for (std::size_t j = 0; j < n3; ++j)
      w.mu[j] = w.wz[j] * (cplx(0.0, -kt) * m1h[j] - w.rho[j]);
    w.mu[n3 - 1] += m3h[n3 - 1];
    w.mu[0] -= m3h[0];

    if (n == 0) {
      cplx mass(0.0, 0.0);
      for (std::size_t j = 0; j < n3; ++j) mass += w.mu[j];
      res.k0_mass = std::abs(mass);
    }

    apply_mode_green(k, hz, w.mu.data(), w.v.data(), n3, w.scratch);

    double En = 0.0;
    for (std::size_t j = 0; j < n3; ++j)
      En += std::real(std::conj(w.mu[j]) * w.v[j]);

    diff1(w.v.data(), w.dzv.data(), n3, hz);
    double Rn = 0.0;
    for (std::size_t j = 0; j < n3; ++j) {
      Rn += w.wz[j] * std::real(std::conj(m1h[j]) * (cplx(0.0, kt) * w.v[j]));
      Rn += w.wz[j] * std::real(std::conj(m3h[j]) * w.dzv[j]);
    }

    res.dirichlet_nd += cn * En;
    res.pairing_nd += cn * Rn;

    if (sol) {
      sol->wavenumbers[n] = k / t;
      for (std::size_t j = 0; j < n3; ++j) sol->u_modes[n * n3 + j] = w.v[j];
    }
    if (g1) {
      cplx* gh1 = &g1hat[n * n3];
      cplx* gh3 = &g3hat[n * n3];
      for (std::size_t j = 0; j < n3; ++j) gh1[j] = cplx(0.0, kt) * w.wz[j] * w.v[j];
      // transpose of the charge map: -Dz^T (wz v) plus the face charges
      for (std::size_t j = 0; j < n3; ++j) w.rho[j] = w.wz[j] * w.v[j];
      diff1_transpose(w.rho.data(), w.dzv.data(), n3, hz);
      for (std::size_t j = 0; j < n3; ++j) gh3[j] = -w.dzv[j];
      gh3[n3 - 1] += w.v[n3 - 1];
      gh3[0] -= w.v[0];
    }
  }
  res.dirichlet_nd *= P;
  res.pairing_nd *= P;

  if (g1) {
    g1->assign(g.size(), 0.0);
    g3->assign(g.size(), 0.0);
    const double scale = 2.0 * P * invN * t * t;  // d(E_dim)/dm
    for (int comp = 0; comp < 2; ++comp) {
      const std::vector<cplx>& src = comp == 0 ? g1hat : g3hat;
      std::vector<double>& dst = comp == 0 ? *g1 : *g3;
      for (std::size_t j = 0; j < n3; ++j) {
        for (std::size_t n = 0; n < nmodes; ++n) {
          slot.spec[n][0] = src[n * n3 + j].real();
          slot.spec[n][1] = src[n * n3 + j].imag();
        }
        if (even) slot.spec[N / 2][1] = 0.0;
        fftw_execute(slot.bwd);
        double* row = dst.data() + j * g.n1;
        for (std::size_t i = 0; i < N; ++i) row[i] = scale * slot.real[i];
        row[g.n1 - 1] = 0.0;  // periodic image of column 0
      }
    }
  }
  return res;
}

}  // namespace

StrayFieldSolution solve_stray_field(const MagnetizationField& field) {
  StrayFieldSolution sol;
  const StrayResult r = run_modes(field, nullptr, nullptr, &sol);
  const double t2 = field.grid.t * field.grid.t;
  sol.dirichlet_energy = r.dirichlet_nd * t2;
  sol.charge_pairing = r.pairing_nd * t2;
  sol.k0_residual_mass = r.k0_mass;
  return sol;
}

StraySummary stray_energy(const MagnetizationField& field) {
  const StrayResult r = run_modes(field, nullptr, nullptr, nullptr);
  const double t2 = field.grid.t * field.grid.t;
  return {r.dirichlet_nd * t2, r.pairing_nd * t2, r.k0_mass};
}

StraySummary stray_energy_and_gradient(const MagnetizationField& field,
                                       std::vector<double>& g1, std::vector<double>& g3) {
  const StrayResult r = run_modes(field, &g1, &g3, nullptr);
  const double t2 = field.grid.t * field.grid.t;
  return {r.dirichlet_nd * t2, r.pairing_nd * t2, r.k0_mass};
}

}  // namespace wallscale
