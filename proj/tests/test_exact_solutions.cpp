#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "vdw/exact_solutions.hpp"
#include "vdw/gas_model.hpp"

using namespace vdw;

namespace {

WaveCoefficients ideal_coeffs(double beta_hat = 0.3) {
  GasParameters p;
  p.mu_hat = 1.5 * beta_hat;  // beta_hat = 2 mu_hat / 3 for rho0 = 1
  auto c = coefficients(validate(p));
  return c;
}

}  // namespace

TEST_CASE("variant names round trip") {
  for (Variant v : all_variants()) {
    CHECK(variant_from_name(variant_name(v)) == v);
  }
  CHECK_THROWS_AS(variant_from_name("no-such-solution"), NotFoundError);
  CHECK(all_variants().size() == 8);
}

TEST_CASE("make_spec pins the default frame speed") {
  const auto c = ideal_coeffs();
  const auto spec = make_spec(Variant::WavefanPlus, c, 0.5, -0.25);
  CHECK(spec.q == c.default_q());
  CHECK(spec.k1 == 0.5);
  CHECK(spec.k2 == -0.25);
}

TEST_CASE("constant solution is the plateau everywhere") {
  const auto c = ideal_coeffs();
  const auto spec = make_spec(Variant::Constant, c);
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 50; ++i) {
    const double tau = u(rng), th = u(rng), et = u(rng);
    CHECK(eval(spec, c, tau, th, et) == c.plateau());
    CHECK(eval_g(spec, c, tau, th, et) == 0.0);
  }
}

TEST_CASE("wavefan closed form and singular set") {
  const auto c = ideal_coeffs();
  const double A = c.plateau();
  const double s = c.fan_slope();
  const double k1 = 0.5, k2 = -0.2;
  const auto plus = make_spec(Variant::WavefanPlus, c, k1, k2);
  const auto minus = make_spec(Variant::WavefanMinus, c, k1, k2);

  const double tau = 0.3, th = 1.1, et = 2.0;
  const double X = th - c.default_q() * tau;
  const double fan = s * (X + 1.5 * k2) / (et + k1);
  CHECK(eval(plus, c, tau, th, et) == doctest::Approx(A + fan).epsilon(1e-14));
  CHECK(eval(minus, c, tau, th, et) ==
        doctest::Approx(A - fan).epsilon(1e-14));

  // Odd pair: plus and minus average to the plateau.
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(0.5, 4.0);
  for (int i = 0; i < 50; ++i) {
    const double t2 = u(rng), x2 = u(rng), e2 = u(rng);
    CHECK(0.5 * (eval(plus, c, t2, x2, e2) + eval(minus, c, t2, x2, e2)) ==
          doctest::Approx(A).epsilon(1e-13));
  }

  CHECK_THROWS_AS(eval(plus, c, 0.0, 1.0, -k1), SingularPointError);
}

TEST_CASE("cuberoot and case2 closed forms") {
  const auto c = ideal_coeffs(0.0);
  const double A = c.plateau();
  const double kb1 = 0.3, kb2 = 0.1;
  const auto cr = make_spec(Variant::Cuberoot, c, 0.0, 0.0, kb1, kb2);
  const double tau = 0.2, et = 1.5;
  const double th = c.default_q() * tau + 0.7;
  CHECK(eval(cr, c, tau, th, et) ==
        doctest::Approx(A + (kb1 * et + kb2) * std::cbrt(0.7)).epsilon(1e-14));

  const auto lp = make_spec(Variant::Case2LinearPlus, c);
  const double s = c.fan_slope();
  CHECK(eval(lp, c, tau, th, et) ==
        doctest::Approx(A + s * 0.7 / et).epsilon(1e-14));
  CHECK_THROWS_AS(eval(lp, c, 0.0, 1.0, 0.0), SingularPointError);

  const auto ep =
      make_spec(Variant::Case2ExtendedPlus, c, 0.0, 0.0, 0.4, 0.2);
  CHECK(eval(ep, c, tau, th, et) ==
        doctest::Approx(A + s * 0.7 / et + 0.4 / et + 0.2 * et * et)
            .epsilon(1e-13));
}

TEST_CASE("frame equivalence is exact") {
  const auto c = ideal_coeffs();
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> u(0.5, 3.0);
  for (Variant v : {Variant::WavefanPlus, Variant::Case2LinearMinus,
                    Variant::Case2ExtendedPlus}) {
    const auto spec = make_spec(v, c, 0.0, 0.0, 0.1, 0.05);
    for (int i = 0; i < 20; ++i) {
      const double tau = u(rng), th = u(rng), et = u(rng);
      // Same traveling-frame point, two lab representations.
      const double h1 = eval(spec, c, tau, th, et);
      const double h2 = eval(spec, c, 0.0, th - spec.q * tau, et);
      CHECK(h1 == h2);
    }
  }
}

TEST_CASE("admissibility constraints per variant") {
  auto c = ideal_coeffs(0.3);

  auto rep = admissibility(make_spec(Variant::Constant, c), c);
  CHECK(rep.admissible);
  CHECK_FALSE(rep.requires_zero_beta);

  rep = admissibility(make_spec(Variant::WavefanPlus, c), c);
  CHECK(rep.admissible);
  CHECK(rep.requires_default_q);
  CHECK_FALSE(rep.requires_zero_beta);

  rep = admissibility(make_spec(Variant::Cuberoot, c, 0, 0, 0.3, 0.1), c);
  CHECK(rep.requires_zero_beta);
  CHECK_FALSE(rep.beta_satisfied);
  CHECK_FALSE(rep.admissible);

  auto c0b = ideal_coeffs(0.0);
  rep = admissibility(make_spec(Variant::Cuberoot, c0b, 0, 0, 0.3, 0.1), c0b);
  CHECK(rep.admissible);

  // Extended family tolerates dissipation but not a shifted frame.
  auto spec = make_spec(Variant::Case2ExtendedMinus, c, 0, 0, 0.4, 0.2);
  rep = admissibility(spec, c);
  CHECK(rep.admissible);
  CHECK_FALSE(rep.requires_zero_beta);
  spec.q = spec.q * 1.01;
  rep = admissibility(spec, c);
  CHECK_FALSE(rep.q_satisfied);
  CHECK_FALSE(rep.admissible);
}

TEST_CASE("finite-difference residuals vanish for admissible solutions") {
  const auto c = ideal_coeffs(0.3);
  const auto ci = ideal_coeffs(0.0);
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> u(1.0, 3.0);

  auto max_residual = [&](const ExactSolutionSpec& spec,
                          const WaveCoefficients& cc, double step) {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      SamplePoint pt{u(rng), u(rng), u(rng)};
      const auto r = pde_residual_fd(spec, cc, pt, step);
      worst = std::max({worst, std::abs(r.lab), std::abs(r.traveling)});
    }
    return worst;
  };

  for (Variant v :
       {Variant::Constant, Variant::WavefanPlus, Variant::WavefanMinus,
        Variant::Case2LinearPlus, Variant::Case2LinearMinus,
        Variant::Case2ExtendedPlus, Variant::Case2ExtendedMinus}) {
    const auto spec = make_spec(v, c, 0.0, 0.0, 0.4, 0.2);
    CHECK(max_residual(spec, c, 1e-3) < 1e-5);
  }
  const auto cr = make_spec(Variant::Cuberoot, ci, 0.0, 0.0, 0.3, 0.1);
  CHECK(max_residual(cr, ci, 1e-3) < 1e-5);

  // With dissipation on, the cube-root profile stops being a solution; the
  // surviving beta_hat term is visible at moderate traveling-frame offsets.
  const auto bad = make_spec(Variant::Cuberoot, c, 0.0, 0.0, 0.3, 0.1);
  double worst_bad = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double tau = 0.02 * i / 100.0, et = 1.0 + 0.02 * i;
    SamplePoint pt{tau, bad.q * tau + 0.5 + 1.5 * i / 100.0, et};
    const auto r = pde_residual_fd(bad, c, pt, 1e-3);
    worst_bad = std::max({worst_bad, std::abs(r.lab), std::abs(r.traveling)});
  }
  CHECK(worst_bad > 1e-2);
}

TEST_CASE("residual scales like step squared") {
  const auto c = ideal_coeffs(0.3);
  const auto spec = make_spec(Variant::WavefanPlus, c);
  const SamplePoint pt{1.3, 2.1, 1.7};
  const auto r1 = pde_residual_fd(spec, c, pt, 2e-3);
  const auto r2 = pde_residual_fd(spec, c, pt, 1e-3);
  // C * step^2 bound from the coarse evaluation must cover the fine one.
  const double C = std::abs(r1.lab) / (2e-3 * 2e-3);
  CHECK(std::abs(r2.lab) <= 4.0 * (C + 1.0) * 1e-6);
}

TEST_CASE("residual evaluation refuses near-singular points") {
  const auto c = ideal_coeffs(0.3);
  const auto spec = make_spec(Variant::WavefanPlus, c);
  CHECK_THROWS_AS(pde_residual_fd(spec, c, {0.0, 1.0, 5e-3}, 1e-3),
                  SingularPointError);
}
