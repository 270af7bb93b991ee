#include "vdw/evolution.hpp"

#include <algorithm>
#include <cmath>

namespace vdw {

namespace {

constexpr double kTiny = 1e-300;

// 4th-order second-derivative weights: centered 5-point and the 6-point
// stencil biased one node from the edge.
constexpr double kC5[5] = {-1.0 / 12, 16.0 / 12, -30.0 / 12, 16.0 / 12,
                           -1.0 / 12};
constexpr double kB6[6] = {10.0 / 12, -15.0 / 12, -4.0 / 12,
                           14.0 / 12, -6.0 / 12,  1.0 / 12};

void check_finite(const std::vector<double>& v, const char* what) {
  for (double x : v)
    if (!std::isfinite(x)) throw NonFiniteInputError(std::string(what) +
                                                     " contains a non-finite sample");
}

// Cumulative trapezoid integral of h along theta, one value per node,
// anchored at zero on the first node of each eta-row. On periodic grids the
// antiderivative is taken on the zero-mean part of each row (the secular
// ramp of any nonzero row mean is removed); otherwise a theta-independent
// residue feeds the transverse term as anti-diffusion and the semi-discrete
// system is linearly unstable.
std::vector<double> cumtrapz_theta(const WaveField& f) {
  const int n = f.grid.n_theta, m = f.grid.n_eta;
  const double dth = f.grid.dtheta();
  std::vector<double> M(f.h.size());
  for (int j = 0; j < m; ++j) {
    M[f.idx(0, j)] = 0.0;
    for (int i = 1; i < n; ++i)
      M[f.idx(i, j)] = M[f.idx(i - 1, j)] +
                       0.5 * dth * (f.h[f.idx(i, j)] + f.h[f.idx(i - 1, j)]);
  }
  if (f.grid.bc == BoundaryKind::Periodic) {
    const double L = n * dth;
    for (int j = 0; j < m; ++j) {
      const double total = M[f.idx(n - 1, j)] +
                           0.5 * dth * (f.h[f.idx(n - 1, j)] + f.h[f.idx(0, j)]);
      for (int i = 1; i < n; ++i)
        M[f.idx(i, j)] -= total * (i * dth) / L;
    }
  }
  return M;
}

// Second eta-derivative of a field, 4th order. Periodic grids wrap; on
// Dirichlet grids boundary rows are left at zero (their values are imposed).
std::vector<double> d2_eta(const WaveField& f, const std::vector<double>& u) {
  const int n = f.grid.n_theta, m = f.grid.n_eta;
  const double de2 = f.grid.deta() * f.grid.deta();
  std::vector<double> out(u.size(), 0.0);
  if (f.grid.bc == BoundaryKind::Periodic) {
    for (int j = 0; j < m; ++j)
      for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int k = -2; k <= 2; ++k)
          acc += kC5[k + 2] * u[f.idx(i, ((j + k) % m + m) % m)];
        out[f.idx(i, j)] = acc / de2;
      }
    return out;
  }
  for (int j = 2; j < m - 2; ++j)
    for (int i = 0; i < n; ++i) {
      double acc = 0.0;
      for (int k = -2; k <= 2; ++k) acc += kC5[k + 2] * u[f.idx(i, j + k)];
      out[f.idx(i, j)] = acc / de2;
    }
  for (int i = 0; i < n; ++i) {
    double lo = 0.0, hi = 0.0;
    for (int k = 0; k < 6; ++k) {
      lo += kB6[k] * u[f.idx(i, k)];
      hi += kB6[k] * u[f.idx(i, m - 1 - k)];
    }
    out[f.idx(i, 1)] = lo / de2;
    out[f.idx(i, m - 2)] = hi / de2;
  }
  return out;
}

// g slaved to h: trapezoid quadrature of the central-difference h_eta along
// theta, gauge g(theta_min, eta) = 0.
std::vector<double> slaved_g(const WaveField& f) {
  const int n = f.grid.n_theta, m = f.grid.n_eta;
  const double de = f.grid.deta();
  WaveField tmp = f;
  tmp.h.assign(f.h.size(), 0.0);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < n; ++i) {
      double d;
      if (f.grid.bc == BoundaryKind::Periodic) {
        d = (f.h[f.idx(i, (j + 1) % m)] - f.h[f.idx(i, (j - 1 + m) % m)]) /
            (2 * de);
      } else if (j == 0) {
        d = (-3 * f.h[f.idx(i, 0)] + 4 * f.h[f.idx(i, 1)] -
             f.h[f.idx(i, 2)]) /
            (2 * de);
      } else if (j == m - 1) {
        d = (3 * f.h[f.idx(i, m - 1)] - 4 * f.h[f.idx(i, m - 2)] +
             f.h[f.idx(i, m - 3)]) /
            (2 * de);
      } else {
        d = (f.h[f.idx(i, j + 1)] - f.h[f.idx(i, j - 1)]) / (2 * de);
      }
      tmp.h[f.idx(i, j)] = d;
    }
  return cumtrapz_theta(tmp);
}

void impose_boundaries(WaveField& f, const BoundaryData* bdata, double tau) {
  if (f.grid.bc != BoundaryKind::DirichletFromExact || bdata == nullptr ||
      !bdata->h)
    return;
  const int n = f.grid.n_theta, m = f.grid.n_eta;
  for (int j = 0; j < m; ++j) {
    f.h[f.idx(0, j)] = bdata->h(tau, f.grid.theta(0), f.grid.eta(j));
    f.h[f.idx(n - 1, j)] = bdata->h(tau, f.grid.theta(n - 1), f.grid.eta(j));
  }
  for (int i = 0; i < n; ++i) {
    f.h[f.idx(i, 0)] = bdata->h(tau, f.grid.theta(i), f.grid.eta(0));
    f.h[f.idx(i, m - 1)] = bdata->h(tau, f.grid.theta(i), f.grid.eta(m - 1));
  }
}

}  // namespace

void Grid2D::check() const {
  if (!(theta_max > theta_min) || !(eta_max > eta_min))
    throw DomainError("grid extents must be positive");
  if (n_theta < 8 || n_eta < 8)
    throw ShapeError("grid needs at least 8 samples per direction");
}

FramePoint to_traveling_frame(double theta, double tau, double eta, double q) {
  return {theta - q * tau, eta};
}

WaveField init_field(const Grid2D& grid,
                     const std::function<double(double, double)>& ic) {
  grid.check();
  WaveField f;
  f.grid = grid;
  f.tau = 0.0;
  f.h.resize(static_cast<size_t>(grid.n_theta) * grid.n_eta);
  for (int j = 0; j < grid.n_eta; ++j)
    for (int i = 0; i < grid.n_theta; ++i)
      f.h[f.idx(i, j)] = ic(grid.theta(i), grid.eta(j));
  check_finite(f.h, "initial condition");
  f.g = slaved_g(f);
  return f;
}

std::vector<double> rhs(const WaveField& field, const WaveCoefficients& coeffs,
                        const BoundaryData* bdata) {
  const Grid2D& gr = field.grid;
  const int n = gr.n_theta, m = gr.n_eta;
  const double dth = gr.dtheta();
  const double G0 = coeffs.gamma_hat0, L0 = coeffs.lambda0;
  const double bh = coeffs.beta_hat, c0 = coeffs.c0;
  const bool periodic = gr.bc == BoundaryKind::Periodic;

  const std::vector<double> M = cumtrapz_theta(field);
  std::vector<double> geta = d2_eta(field, M);

  // The zero gauge at theta_min drops the eta-variation of g on that line;
  // dirichlet-from-exact runs restore it from the supplied analytic g.
  if (!periodic && bdata != nullptr && bdata->g) {
    for (int j = 1; j < m - 1; ++j) {
      const double e = gr.eta(j);
      const double de = 1e-6 * std::max(1.0, std::abs(e));
      const double anchor = (bdata->g(field.tau, gr.theta_min, e + de) -
                             bdata->g(field.tau, gr.theta_min, e - de)) /
                            (2 * de);
      for (int i = 0; i < n; ++i) geta[field.idx(i, j)] += anchor;
    }
  }

  std::vector<double> F(field.h.size());
  for (size_t k = 0; k < field.h.size(); ++k) {
    const double v = field.h[k];
    F[k] = G0 * v * v / 2.0 + L0 * v * v * v / 3.0;
  }

  std::vector<double> r(field.h.size(), 0.0);
  auto flux_visc = [&](int im, int i0, int ip, int j) {
    return (F[field.idx(ip, j)] - F[field.idx(im, j)]) / (2 * dth) +
           bh *
               (field.h[field.idx(ip, j)] - 2 * field.h[field.idx(i0, j)] +
                field.h[field.idx(im, j)]) /
               (dth * dth);
  };
  if (periodic) {
    for (int j = 0; j < m; ++j)
      for (int i = 0; i < n; ++i)
        r[field.idx(i, j)] = flux_visc((i - 1 + n) % n, i, (i + 1) % n, j) -
                             (c0 / 2.0) * geta[field.idx(i, j)];
  } else {
    for (int j = 1; j < m - 1; ++j)
      for (int i = 1; i < n - 1; ++i)
        r[field.idx(i, j)] =
            flux_visc(i - 1, i, i + 1, j) - (c0 / 2.0) * geta[field.idx(i, j)];
  }
  return r;
}

double stable_dtau(const WaveField& field, const WaveCoefficients& coeffs,
                   double cfl) {
  const double dth = field.grid.dtheta(), de = field.grid.deta();
  double amax = kTiny;
  for (double v : field.h)
    amax = std::max(amax, std::abs(coeffs.gamma_hat0 * v +
                                   coeffs.lambda0 * v * v));
  const double diff = dth * dth / (2.0 * coeffs.beta_hat + kTiny);
  const double adv = dth / amax;
  // Dispersive limit: the transverse term acts like (c0/2) l^2 / k on a
  // (k, l) Fourier mode, maximal at the largest l (pi/deta) and the slowest
  // resolved theta mode of the domain.
  const double pi = 3.14159265358979323846;
  const double kmin =
      (field.grid.bc == BoundaryKind::Periodic ? 2.0 * pi : pi) /
      (field.grid.theta_max - field.grid.theta_min);
  const double trans = kmin * de * de / std::max(coeffs.c0, kTiny);
  return cfl * std::min({diff, adv, trans});
}

WaveField step(const WaveField& field, const WaveCoefficients& coeffs,
               double dtau, const BoundaryData* bdata) {
  const size_t N = field.h.size();
  WaveField stage = field;
  auto at_stage = [&](const std::vector<double>& k, double frac) {
    for (size_t p = 0; p < N; ++p)
      stage.h[p] = field.h[p] + frac * dtau * k[p];
    stage.tau = field.tau + frac * dtau;
    impose_boundaries(stage, bdata, stage.tau);
  };

  const std::vector<double> k1 = rhs(field, coeffs, bdata);
  at_stage(k1, 0.5);
  const std::vector<double> k2 = rhs(stage, coeffs, bdata);
  at_stage(k2, 0.5);
  const std::vector<double> k3 = rhs(stage, coeffs, bdata);
  at_stage(k3, 1.0);
  const std::vector<double> k4 = rhs(stage, coeffs, bdata);

  WaveField out = field;
  out.tau = field.tau + dtau;
  for (size_t p = 0; p < N; ++p)
    out.h[p] = field.h[p] +
               dtau / 6.0 * (k1[p] + 2 * k2[p] + 2 * k3[p] + k4[p]);
  impose_boundaries(out, bdata, out.tau);
  for (double v : out.h)
    if (!std::isfinite(v))
      throw StabilityError("time step produced a non-finite sample", out.tau);
  out.g = slaved_g(out);
  return out;
}

std::vector<WaveField> integrate(const WaveField& field,
                                 const WaveCoefficients& coeffs,
                                 double tau_end, double snapshot_every,
                                 const BoundaryData* bdata, double cfl) {
  if (tau_end < field.tau)
    throw DomainError("integrate requires tau_end >= current tau");
  std::vector<WaveField> snaps;
  snaps.push_back(field);
  if (tau_end == field.tau) return snaps;

  WaveField cur = field;
  double next_snap =
      snapshot_every > 0.0 ? field.tau + snapshot_every : tau_end;
  while (cur.tau < tau_end - 1e-14 * std::max(1.0, tau_end)) {
    double dt = stable_dtau(cur, coeffs, cfl);
    dt = std::min(dt, tau_end - cur.tau);
    if (snapshot_every > 0.0) dt = std::min(dt, next_snap - cur.tau);
    cur = step(cur, coeffs, dt, bdata);
    if (snapshot_every > 0.0 &&
        cur.tau >= next_snap - 1e-14 * std::max(1.0, tau_end)) {
      snaps.push_back(cur);
      next_snap += snapshot_every;
    }
  }
  if (snaps.back().tau != cur.tau) snaps.push_back(cur);
  return snaps;
}

double mass(const WaveField& field) {
  const Grid2D& gr = field.grid;
  const bool periodic = gr.bc == BoundaryKind::Periodic;
  auto w = [&](int k, int nk) {
    return (!periodic && (k == 0 || k == nk - 1)) ? 0.5 : 1.0;
  };
  double acc = 0.0;
  for (int j = 0; j < gr.n_eta; ++j)
    for (int i = 0; i < gr.n_theta; ++i)
      acc += w(i, gr.n_theta) * w(j, gr.n_eta) * field.h[field.idx(i, j)];
  return acc * gr.dtheta() * gr.deta();
}

std::vector<std::vector<double>> residual_zk(
    const std::vector<WaveField>& levels, const WaveCoefficients& coeffs) {
  if (levels.size() < 3)
    throw ShapeError("residual_zk needs at least 3 tau-levels");
  const Grid2D& gr = levels[0].grid;
  const double dt0 = levels[1].tau - levels[0].tau;
  for (size_t k = 1; k < levels.size(); ++k) {
    if (levels[k].grid.n_theta != gr.n_theta ||
        levels[k].grid.n_eta != gr.n_eta)
      throw ShapeError("residual_zk levels must share one grid");
    const double dt = levels[k].tau - levels[k - 1].tau;
    if (std::abs(dt - dt0) > 1e-12 * std::max(1.0, std::abs(dt0)))
      throw ShapeError("residual_zk needs uniformly spaced tau-levels");
  }
  const int n = gr.n_theta, m = gr.n_eta;
  const double dth = gr.dtheta(), de = gr.deta();
  const double G0 = coeffs.gamma_hat0, L0 = coeffs.lambda0;
  const double bh = coeffs.beta_hat, c0 = coeffs.c0;
  const bool periodic = gr.bc == BoundaryKind::Periodic;
  auto N = [&](double v) { return G0 * v * v / 2.0 + L0 * v * v * v / 3.0; };

  std::vector<std::vector<double>> out;
  for (size_t k = 1; k + 1 < levels.size(); ++k) {
    const WaveField& f = levels[k];
    const WaveField& fm = levels[k - 1];
    const WaveField& fp = levels[k + 1];
    // inner = h_tau - (N(h))_theta - beta_hat h_thth on each node
    std::vector<double> inner(f.h.size(), 0.0);
    auto inner_at = [&](int im, int i0, int ip, int j) {
      const int a = f.idx(im, j), b = f.idx(i0, j), c = f.idx(ip, j);
      return (fp.h[b] - fm.h[b]) / (2 * dt0) -
             (N(f.h[c]) - N(f.h[a])) / (2 * dth) -
             bh * (f.h[c] - 2 * f.h[b] + f.h[a]) / (dth * dth);
    };
    std::vector<double> res(f.h.size(), 0.0);
    if (periodic) {
      for (int j = 0; j < m; ++j)
        for (int i = 0; i < n; ++i)
          inner[f.idx(i, j)] = inner_at((i - 1 + n) % n, i, (i + 1) % n, j);
      for (int j = 0; j < m; ++j)
        for (int i = 0; i < n; ++i) {
          const int jm = (j - 1 + m) % m, jp = (j + 1) % m;
          res[f.idx(i, j)] =
              (inner[f.idx((i + 1) % n, j)] - inner[f.idx((i - 1 + n) % n, j)]) /
                  (2 * dth) +
              (c0 / 2.0) *
                  (f.h[f.idx(i, jp)] - 2 * f.h[f.idx(i, j)] +
                   f.h[f.idx(i, jm)]) /
                  (de * de);
        }
    } else {
      for (int j = 0; j < m; ++j)
        for (int i = 1; i < n - 1; ++i)
          inner[f.idx(i, j)] = inner_at(i - 1, i, i + 1, j);
      for (int j = 1; j < m - 1; ++j)
        for (int i = 2; i < n - 2; ++i)
          res[f.idx(i, j)] =
              (inner[f.idx(i + 1, j)] - inner[f.idx(i - 1, j)]) / (2 * dth) +
              (c0 / 2.0) *
                  (f.h[f.idx(i, j + 1)] - 2 * f.h[f.idx(i, j)] +
                   f.h[f.idx(i, j - 1)]) /
                  (de * de);
    }
    out.push_back(std::move(res));
  }
  return out;
}

}  // namespace vdw
