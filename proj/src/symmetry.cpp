#include "vdw/symmetry.hpp"

#include <cmath>

#include "vdw/ode.hpp"

namespace vdw {

namespace {

// FD fallbacks: 4th-order first/second derivatives with steps that balance
// truncation against double-precision roundoff; 2nd-order third derivative.
template <typename F>
double fd1(const F& f, double x) {
  const double h = 1e-4 * std::max(1.0, std::abs(x));
  return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) /
         (12 * h);
}
template <typename F>
double fd2(const F& f, double x) {
  const double h = 1e-3 * std::max(1.0, std::abs(x));
  return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) -
          f(x - 2 * h)) /
         (12 * h * h);
}
template <typename F>
double fd3(const F& f, double x) {
  const double h = 5e-3 * std::max(1.0, std::abs(x));
  return (f(x + 2 * h) - 2 * f(x + h) + 2 * f(x - h) - f(x - 2 * h)) /
         (2 * h * h * h);
}

double c1_d1(const CurveFn& c, double x) {
  if (c.fp) return c.fp(x);
  return fd1(c.f, x);
}
double c1_d2(const CurveFn& c, double x) {
  if (c.fpp) return c.fpp(x);
  return fd2(c.f, x);
}
double c1_d3(const CurveFn& c, double x) {
  if (c.fppp) return c.fppp(x);
  if (c.fpp) return fd1(c.fpp, x);
  return fd3(c.f, x);
}

double p_X(const PlaneFn& p, double X, double T) {
  if (p.f_X) return p.f_X(X, T);
  return fd1([&](double x) { return p.f(x, T); }, X);
}
double p_T(const PlaneFn& p, double X, double T) {
  if (p.f_T) return p.f_T(X, T);
  return fd1([&](double t) { return p.f(X, t); }, T);
}
double p_XX(const PlaneFn& p, double X, double T) {
  if (p.f_XX) return p.f_XX(X, T);
  return fd2([&](double x) { return p.f(x, T); }, X);
}
double p_TT(const PlaneFn& p, double X, double T) {
  if (p.f_TT) return p.f_TT(X, T);
  return fd2([&](double t) { return p.f(X, t); }, T);
}
double p_XXX(const PlaneFn& p, double X, double T) {
  if (p.f_XXX) return p.f_XXX(X, T);
  if (p.f_XX) return fd1([&](double x) { return p.f_XX(x, T); }, X);
  return fd3([&](double x) { return p.f(x, T); }, X);
}

}  // namespace

std::vector<double> invariant_surface_residual(
    const Infinitesimals& inf, const Func2& H_fn,
    const std::vector<PlanePoint>& pts) {
  std::vector<double> out;
  out.reserve(pts.size());
  for (const auto& p : pts) {
    const double hx = 1e-6 * std::max(1.0, std::abs(p.X));
    const double ht = 1e-6 * std::max(1.0, std::abs(p.T));
    const double H = H_fn(p.X, p.T);
    const double HX = (H_fn(p.X + hx, p.T) - H_fn(p.X - hx, p.T)) / (2 * hx);
    const double HT = (H_fn(p.X, p.T + ht) - H_fn(p.X, p.T - ht)) / (2 * ht);
    const double r = inf.xi(p.X, p.T, H) * HX + inf.zeta(p.X, p.T, H) * HT -
                     inf.chi(p.X, p.T, H);
    if (!std::isfinite(r))
      throw DomainError("invariant surface residual is non-finite");
    out.push_back(r);
  }
  return out;
}

std::vector<std::array<double, 4>> case1_ode_residuals(
    const CurveFn& f1, const CurveFn& f2, const WaveCoefficients& coeffs,
    const std::vector<double>& pts) {
  const double G0 = coeffs.gamma_hat0, L0 = coeffs.lambda0;
  const double c0 = coeffs.c0, q = coeffs.q;
  std::vector<std::array<double, 4>> out;
  out.reserve(pts.size());
  for (double T : pts) {
    const double v1 = f1.f(T), v2 = f2.f(T);
    const double v1p = c1_d1(f1, T), v1pp = c1_d2(f1, T);
    const double v2p = c1_d1(f2, T), v2pp = c1_d2(f2, T);
    std::array<double, 4> r;
    r[0] = v1pp - 4 * v1 * v1p - 6 * v1 * v1 * v1;
    r[1] = v1pp + 2 * v1 * v1p - 24 * v1 * v1 * v1;
    r[2] = v2pp + 2 * v1p * v2 - 24 * v1 * v1 * v2;
    r[3] = v2 * v2p - 3 * v1 * v2 * v2 +
           (2 * q / c0 - G0 * G0 / (2 * c0 * L0)) * v1;
    out.push_back(r);
  }
  return out;
}

Case1Generators case1_generator(double k1, double k2,
                                const WaveCoefficients& coeffs) {
  const double A = coeffs.plateau();  // -gamma_hat0 / (2 lambda0)
  Case1Generators g;
  g.branch_a.xi = [k1, k2](double X, double T, double) {
    return ((2.0 / 3.0) * X + k2) / (T + k1);
  };
  g.branch_a.zeta = [](double, double, double) { return 1.0; };
  g.branch_a.chi = [k1, A](double, double T, double H) {
    return -(H - A) / (3.0 * (T + k1));
  };
  g.branch_a.normalization = Infinitesimals::Normalization::Case1;

  g.branch_b.xi = [k2](double, double, double) { return k2; };
  g.branch_b.zeta = [](double, double, double) { return 1.0; };
  g.branch_b.chi = [](double, double, double) { return 0.0; };
  g.branch_b.normalization = Infinitesimals::Normalization::Case1;
  return g;
}

Case2Result case2_generator(const WaveCoefficients& coeffs, Case2Choice f) {
  const double G0 = coeffs.gamma_hat0, L0 = coeffs.lambda0;
  const double q0 = coeffs.default_q();
  const bool q_ok =
      std::abs(coeffs.q - q0) <= 1e-12 * std::max(1.0, std::abs(q0));
  const bool b_ok = coeffs.beta_hat == 0.0;

  // chi = alpha(X) H + beta(X); alpha = c/X and beta = (gamma_hat0/(2
  // lambda0)) alpha for the two rational branches.
  auto rational = [](double c) {
    PlaneFn p;
    p.f = [c](double X, double) { return c / X; };
    p.f_X = [c](double X, double) { return -c / (X * X); };
    p.f_T = [](double, double) { return 0.0; };
    p.f_XX = [c](double X, double) { return 2 * c / (X * X * X); };
    p.f_TT = [](double, double) { return 0.0; };
    p.f_XXX = [c](double X, double) { return -6 * c / (X * X * X * X); };
    return p;
  };
  auto zero_fn = [] {
    PlaneFn p;
    p.f = [](double, double) { return 0.0; };
    p.f_X = p.f_T = p.f_XX = p.f_TT = p.f_XXX = p.f;
    return p;
  };

  Case2Result r;
  r.generator.zeta = [](double, double, double) { return 0.0; };
  r.generator.normalization = Infinitesimals::Normalization::Case2;
  r.generator.xi = [](double, double, double) { return 1.0; };
  switch (f) {
    case Case2Choice::OneThirdOverX:
      r.alpha = rational(1.0 / 3.0);
      r.beta = rational(G0 / (6.0 * L0));
      r.generator.chi = [G0, L0](double X, double, double H) {
        return (H + G0 / (2 * L0)) / (3.0 * X);
      };
      r.requires_zero_beta = true;
      r.requires_default_q = true;
      r.beta_satisfied = b_ok;
      r.q_satisfied = q_ok;
      r.detail = "alpha = 1/(3X), beta = gamma_hat0/(6 lambda0 X); needs "
                 "beta_hat = 0 and 2q - gamma_hat0^2/(2 lambda0) = 0";
      break;
    case Case2Choice::OneOverX:
      r.alpha = rational(1.0);
      r.beta = rational(G0 / (2.0 * L0));
      r.generator.chi = [G0, L0](double X, double, double H) {
        return (H + G0 / (2 * L0)) / X;
      };
      // Direct substitution into the determining system: the dissipative
      // and frame-speed contributions cancel identically on this branch.
      r.detail = "alpha = 1/X, beta = gamma_hat0/(2 lambda0 X); admissible "
                 "for any (beta_hat, q)";
      break;
    case Case2Choice::Zero:
      r.alpha = zero_fn();
      r.beta = zero_fn();
      r.generator.chi = [](double, double, double) { return 0.0; };
      r.detail = "alpha = 0; beta = beta(T) with beta'' = (4 lambda0/c0) "
                 "beta^3, e.g. beta = 0 (pure translation) or "
                 "beta = +/- sqrt(c0/(2 lambda0))/T";
      break;
  }
  return r;
}

std::vector<std::array<double, 5>> case2_determining_residuals(
    const PlaneFn& alpha, const PlaneFn& beta, const WaveCoefficients& coeffs,
    double q, const std::vector<PlanePoint>& pts) {
  const double G0 = coeffs.gamma_hat0, L0 = coeffs.lambda0;
  const double bh = coeffs.beta_hat, c0 = coeffs.c0;
  std::vector<std::array<double, 5>> out;
  out.reserve(pts.size());
  for (const auto& pt : pts) {
    const double X = pt.X, T = pt.T;
    const double a = alpha.f(X, T), b = beta.f(X, T);
    const double aX = p_X(alpha, X, T), aXX = p_XX(alpha, X, T);
    const double aT = p_T(alpha, X, T), aTT = p_TT(alpha, X, T);
    const double bX = p_X(beta, X, T), bXX = p_XX(beta, X, T);
    const double bTT = p_TT(beta, X, T);
    const double aXXX = bh != 0.0 ? p_XXX(alpha, X, T) : 0.0;
    const double bXXX = bh != 0.0 ? p_XXX(beta, X, T) : 0.0;
    std::array<double, 5> r;
    r[0] = aT;
    r[1] = aXX + 8 * a * aX + 6 * a * a * a;
    r[2] = aXX + 5 * a * aX + 2 * a * a * a +
           (L0 / G0) * (bXX + 8 * aX * b + 6 * a * bX + 14 * a * a * b);
    r[3] = bh * (aXXX + 3 * a * aXX + 3 * aX * aX + 3 * a * a * aX) +
           2 * L0 * (3 * b * bX + 5 * a * b * b) +
           G0 * (bXX + 3 * a * bX + 5 * b * aX + 4 * a * a * b) +
           (q * aXX + 2 * q * a * aX - (c0 / 2) * aTT);
    r[4] = bh * (bXXX + 3 * b * aXX + 3 * b * a * aX + 3 * aX * bX) +
           (q * bXX - (c0 / 2) * bTT + 2 * q * b * aX) +
           G0 * (3 * b * bX + 2 * a * b * b) + 2 * b * b * b * L0;
    out.push_back(r);
  }
  return out;
}

std::vector<SimilaritySample> similarity_reduce(
    const Func2& H_fn, double k1, double k2, const WaveCoefficients& coeffs,
    const std::vector<PlanePoint>& pts) {
  const double A = coeffs.plateau();
  std::vector<SimilaritySample> out;
  out.reserve(pts.size());
  for (const auto& p : pts) {
    const double Ts = p.T + k1;
    if (!(Ts > 0.0))
      throw DomainError("similarity_reduce requires T + k1 > 0");
    SimilaritySample s;
    s.omega = (p.X + (2.0 / 3.0) * k2) / std::pow(Ts, 2.0 / 3.0);
    s.F = (H_fn(p.X, p.T) - A) * std::pow(Ts, 1.0 / 3.0);
    out.push_back(s);
  }
  return out;
}

std::vector<double> F_ode_residual(const CurveFn& F,
                                   const std::vector<double>& omega_pts,
                                   const WaveCoefficients& coeffs,
                                   double beta_hat) {
  const double L0 = coeffs.lambda0, c0 = coeffs.c0;
  std::vector<double> out;
  out.reserve(omega_pts.size());
  for (double w : omega_pts) {
    const double v = F.f(w), vp = c1_d1(F, w), vpp = c1_d2(F, w);
    double r = -L0 * (v * v * vpp + 2 * v * vp * vp) +
               c0 * ((2.0 / 9.0) * v + (7.0 / 9.0) * vp * w +
                     (2.0 / 9.0) * vpp * w * w);
    if (beta_hat != 0.0) r -= beta_hat * c1_d3(F, w);
    out.push_back(r);
  }
  return out;
}

std::vector<OdeSample> integrate_F_ode(double F0, double F0p, double F0pp,
                                       double omega_start, double omega_end,
                                       const WaveCoefficients& coeffs,
                                       double beta_hat) {
  const double L0 = coeffs.lambda0, c0 = coeffs.c0;
  std::vector<OdeSample> out;
  if (beta_hat == 0.0) {
    if (std::abs(F0) < 1e-12)
      throw SingularityError(
          "inviscid profile ODE is singular at F = 0 (leading coefficient "
          "vanishes)");
    std::function<std::array<double, 2>(double, const std::array<double, 2>&)>
        f = [&](double w, const std::array<double, 2>& y) {
          const double den = -L0 * y[0] * y[0] + (2.0 / 9.0) * c0 * w * w;
          const double scale =
              std::max(1.0, std::abs(L0 * y[0] * y[0]));
          if (std::abs(den) < 1e-12 * scale || std::abs(y[0]) < 1e-12)
            throw SingularityError(
                "inviscid profile ODE leading coefficient vanished during "
                "integration");
          const double num =
              2 * L0 * y[0] * y[1] * y[1] -
              c0 * ((2.0 / 9.0) * y[0] + (7.0 / 9.0) * y[1] * w);
          return std::array<double, 2>{y[1], num / den};
        };
    auto traj = integrate_ode<2>(f, omega_start, omega_end, {F0, F0p});
    for (const auto& s : traj) out.push_back({s.x, s.y[0], s.y[1], 0.0});
    return out;
  }
  std::function<std::array<double, 3>(double, const std::array<double, 3>&)>
      f = [&](double w, const std::array<double, 3>& y) {
        const double rhs =
            (L0 * (y[0] * y[0] * y[2] + 2 * y[0] * y[1] * y[1]) -
             c0 * ((2.0 / 9.0) * y[0] + (7.0 / 9.0) * y[1] * w +
                   (2.0 / 9.0) * y[2] * w * w)) /
            (-beta_hat);
        return std::array<double, 3>{y[1], y[2], rhs};
      };
  auto traj = integrate_ode<3>(f, omega_start, omega_end, {F0, F0p, F0pp});
  for (const auto& s : traj) out.push_back({s.x, s.y[0], s.y[1], s.y[2]});
  return out;
}

}  // namespace vdw
