#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "vdw/gas_model.hpp"
#include "vdw/symmetry.hpp"

using namespace vdw;

namespace {

WaveCoefficients ideal_coeffs(double beta_hat) {
  GasParameters p;
  p.mu_hat = 1.5 * beta_hat;
  return coefficients(validate(p));
}

CurveFn reciprocal(double c) {
  CurveFn f;
  f.f = [c](double T) { return c / T; };
  f.fp = [c](double T) { return -c / (T * T); };
  f.fpp = [c](double T) { return 2 * c / (T * T * T); };
  f.fppp = [c](double T) { return -6 * c / (T * T * T * T); };
  return f;
}

CurveFn linear(double m) {
  CurveFn f;
  f.f = [m](double w) { return m * w; };
  f.fp = [m](double) { return m; };
  f.fpp = [](double) { return 0.0; };
  f.fppp = [](double) { return 0.0; };
  return f;
}

PlaneFn plane_reciprocal(double c) {
  PlaneFn p;
  p.f = [c](double X, double) { return c / X; };
  p.f_X = [c](double X, double) { return -c / (X * X); };
  p.f_T = [](double, double) { return 0.0; };
  p.f_XX = [c](double X, double) { return 2 * c / (X * X * X); };
  p.f_TT = [](double, double) { return 0.0; };
  p.f_XXX = [c](double X, double) { return -6 * c / (X * X * X * X); };
  return p;
}

std::vector<double> t_samples(int n, double lo, double hi, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> out(n);
  for (double& v : out) v = u(rng);
  return out;
}

}  // namespace

TEST_CASE("case1 ODE residuals vanish on the rational pair") {
  const auto c = ideal_coeffs(0.3);
  const auto f1 = reciprocal(-1.0 / 3.0);
  const auto f2 = reciprocal(0.7);
  const auto res = case1_ode_residuals(f1, f2, c, t_samples(100, 1.0, 10.0, 3));
  for (const auto& r : res)
    for (double v : r) CHECK(std::abs(v) < 1e-8);

  // A wrong coefficient breaks the first equation.
  const auto bad = case1_ode_residuals(reciprocal(0.5), f2, c, {2.0});
  CHECK(std::abs(bad[0][0]) > 1e-3);

  // The last equation picks up the frame-speed combination when q shifts.
  auto cq = c;
  cq.q *= 1.1;
  const auto shifted = case1_ode_residuals(f1, f2, cq, {2.0});
  CHECK(std::abs(shifted[0][3]) > 1e-3);
}

TEST_CASE("case1 generators annihilate their invariant solutions") {
  const auto c = ideal_coeffs(0.3);
  const double k1 = 0.4, k2 = -0.3;
  const auto gen = case1_generator(k1, k2, c);
  const double A = c.plateau(), s = c.fan_slope();

  auto fan = [&](double X, double T) {
    return A + s * (X + 1.5 * k2) / (T + k1);
  };
  std::vector<PlanePoint> pts;
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(1.0, 4.0);
  for (int i = 0; i < 100; ++i) pts.push_back({u(rng), u(rng)});

  for (double r : invariant_surface_residual(gen.branch_a, fan, pts))
    CHECK(std::abs(r) < 1e-8);

  auto wave = [&](double X, double T) { return std::sin(X - k2 * T); };
  for (double r : invariant_surface_residual(gen.branch_b, wave, pts))
    CHECK(std::abs(r) < 1e-8);

  // Non-invariant function leaves a visible residual.
  auto other = [](double X, double T) { return X * X + T; };
  double worst = 0.0;
  for (double r : invariant_surface_residual(gen.branch_a, other, pts))
    worst = std::max(worst, std::abs(r));
  CHECK(worst > 1e-2);
}

TEST_CASE("case2 determining equations for the admissible branches") {
  std::vector<PlanePoint> pts;
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> u(0.5, 5.0);
  for (int i = 0; i < 100; ++i) pts.push_back({u(rng), u(rng)});

  // alpha = 1/X, beta = gamma_hat0/(2 lambda0 X): holds for any beta_hat, q.
  auto c = ideal_coeffs(0.3);
  c.q = 5.0;  // deliberately off the default frame speed
  const auto a1 = plane_reciprocal(1.0);
  const auto b1 = plane_reciprocal(c.gamma_hat0 / (2.0 * c.lambda0));
  for (const auto& r : case2_determining_residuals(a1, b1, c, c.q, pts))
    for (double v : r) CHECK(std::abs(v) < 1e-8);

  // alpha = 1/(3X) branch needs beta_hat = 0 and the default q.
  const auto ci = ideal_coeffs(0.0);
  const auto a3 = plane_reciprocal(1.0 / 3.0);
  const auto b3 = plane_reciprocal(ci.gamma_hat0 / (6.0 * ci.lambda0));
  for (const auto& r :
       case2_determining_residuals(a3, b3, ci, ci.default_q(), pts))
    for (double v : r) CHECK(std::abs(v) < 1e-8);

  const auto cv = ideal_coeffs(0.3);
  double worst = 0.0;
  for (const auto& r :
       case2_determining_residuals(a3, b3, cv, cv.default_q(), pts))
    for (double v : r) worst = std::max(worst, std::abs(v));
  CHECK(worst > 1e-3);
}

TEST_CASE("case2_generator reports constraints and matches its residuals") {
  const auto c = ideal_coeffs(0.3);

  auto r = case2_generator(c, Case2Choice::OneOverX);
  CHECK_FALSE(r.requires_zero_beta);
  CHECK_FALSE(r.requires_default_q);
  CHECK(r.beta_satisfied);
  CHECK(r.q_satisfied);
  std::vector<PlanePoint> pts = {{1.0, 1.0}, {2.0, 3.0}, {0.7, 2.0}};
  for (const auto& rr :
       case2_determining_residuals(r.alpha, r.beta, c, c.q, pts))
    for (double v : rr) CHECK(std::abs(v) < 1e-8);

  // Invariant surface H_X = alpha H + beta is solved by H = plateau + C X.
  auto inv = [&](double X, double) { return c.plateau() + 0.7 * X; };
  for (double v : invariant_surface_residual(r.generator, inv, pts))
    CHECK(std::abs(v) < 1e-8);

  r = case2_generator(c, Case2Choice::OneThirdOverX);
  CHECK(r.requires_zero_beta);
  CHECK(r.requires_default_q);
  CHECK_FALSE(r.beta_satisfied);  // beta_hat = 0.3 here
  CHECK(r.q_satisfied);

  const auto ci = ideal_coeffs(0.0);
  r = case2_generator(ci, Case2Choice::OneThirdOverX);
  CHECK(r.beta_satisfied);

  r = case2_generator(c, Case2Choice::Zero);
  CHECK(r.alpha.f(2.0, 1.0) == 0.0);
  // chi = 0: any function of T alone is invariant under pure X-translation.
  auto flat = [](double, double T) { return T * T; };
  for (double v : invariant_surface_residual(r.generator, flat, pts))
    CHECK(std::abs(v) < 1e-8);
}

TEST_CASE("similarity reduction collapses the fan onto F = s omega") {
  const auto c = ideal_coeffs(0.3);
  const double k1 = 0.5, k2 = 0.0;
  const double A = c.plateau(), s = c.fan_slope();
  auto fan = [&](double X, double T) { return A + s * X / (T + k1); };

  std::vector<PlanePoint> pts;
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> u(0.5, 4.0);
  for (int i = 0; i < 50; ++i) pts.push_back({u(rng), u(rng)});

  // Self-similar profile H = A + s omega (T+k1)^{-1/3} collapses onto the
  // line F = s omega.
  auto self_similar = [&](double X, double T) {
    const double w = X / std::pow(T + k1, 2.0 / 3.0);
    return A + s * w / std::pow(T + k1, 1.0 / 3.0);
  };
  for (const auto& smp : similarity_reduce(self_similar, k1, k2, c, pts))
    CHECK(smp.F == doctest::Approx(s * smp.omega).epsilon(1e-12));

  // The plateau maps to F = 0 identically.
  auto flat = [&](double, double) { return A; };
  for (const auto& smp : similarity_reduce(flat, k1, k2, c, pts))
    CHECK(smp.F == 0.0);

  // Distinct (X, T) with equal omega give equal F for any self-similar input.
  const double w0 = 1.3;
  for (double T : {1.0, 2.0, 5.0}) {
    const double X = w0 * std::pow(T + k1, 2.0 / 3.0);
    auto smp = similarity_reduce(self_similar, k1, k2, c, {{X, T}});
    CHECK(smp[0].omega == doctest::Approx(w0).epsilon(1e-13));
    CHECK(smp[0].F == doctest::Approx(s * w0).epsilon(1e-12));
  }

  CHECK_THROWS_AS(similarity_reduce(fan, k1, k2, c, {{1.0, -k1}}),
                  DomainError);
}

TEST_CASE("profile ODE residual on the particular line solutions") {
  for (double bh : {0.0, 0.3}) {
    const auto c = ideal_coeffs(bh);
    const double s = c.fan_slope();
    const auto omega = t_samples(50, 0.2, 5.0, 17);
    for (double sign : {1.0, -1.0}) {
      const auto F = linear(sign * s);
      for (double r : F_ode_residual(F, omega, c, bh))
        CHECK(std::abs(r) < 1e-10);
    }
    // A wrong slope fails.
    double worst = 0.0;
    for (double r : F_ode_residual(linear(2.0 * s), omega, c, bh))
      worst = std::max(worst, std::abs(r));
    CHECK(worst > 1e-3);
  }
}

TEST_CASE("profile ODE integration stays on the invariant line") {
  for (double bh : {0.0, 0.3}) {
    const auto c = ideal_coeffs(bh);
    const double s = c.fan_slope();
    auto traj = integrate_F_ode(s * 1.0, s, 0.0, 1.0, 3.0, c, bh);
    REQUIRE(traj.size() >= 2);
    CHECK(traj.front().omega == 1.0);
    CHECK(traj.back().omega == doctest::Approx(3.0).epsilon(1e-12));
    for (const auto& smp : traj)
      CHECK(std::abs(smp.F - s * smp.omega) < 1e-8);
  }

  // Reversed span integrates backwards.
  const auto c = ideal_coeffs(0.3);
  const double s = c.fan_slope();
  auto back = integrate_F_ode(3.0 * s, s, 0.0, 3.0, 1.0, c, 0.3);
  CHECK(back.back().omega == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(back.back().F - s) < 1e-8);

  // Inviscid start on the singular set F = 0.
  const auto ci = ideal_coeffs(0.0);
  CHECK_THROWS_AS(integrate_F_ode(0.0, 1.0, 0.0, 1.0, 2.0, ci, 0.0),
                  SingularityError);
}
