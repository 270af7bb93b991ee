#include "vdw/exact_solutions.hpp"

#include <cmath>
#include <cstdlib>

namespace vdw {

namespace {

constexpr double kSingularTol = 1e-12;

double cbrt_odd(double x) { return std::cbrt(x); }

bool is_plus(Variant v) {
  return v == Variant::WavefanPlus || v == Variant::Case2LinearPlus ||
         v == Variant::Case2ExtendedPlus;
}

bool is_wavefan(Variant v) {
  return v == Variant::WavefanPlus || v == Variant::WavefanMinus;
}

bool is_case2(Variant v) {
  return v == Variant::Case2LinearPlus || v == Variant::Case2LinearMinus ||
         v == Variant::Case2ExtendedPlus || v == Variant::Case2ExtendedMinus;
}

}  // namespace

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::Constant: return "constant";
    case Variant::WavefanPlus: return "wavefan_plus";
    case Variant::WavefanMinus: return "wavefan_minus";
    case Variant::Cuberoot: return "cuberoot";
    case Variant::Case2LinearPlus: return "case2_linear_plus";
    case Variant::Case2LinearMinus: return "case2_linear_minus";
    case Variant::Case2ExtendedPlus: return "case2_extended_plus";
    case Variant::Case2ExtendedMinus: return "case2_extended_minus";
  }
  return "unknown";
}

std::vector<Variant> all_variants() {
  return {Variant::Constant,        Variant::WavefanPlus,
          Variant::WavefanMinus,    Variant::Cuberoot,
          Variant::Case2LinearPlus, Variant::Case2LinearMinus,
          Variant::Case2ExtendedPlus, Variant::Case2ExtendedMinus};
}

Variant variant_from_name(const std::string& name) {
  for (Variant v : all_variants())
    if (name == variant_name(v)) return v;
  throw NotFoundError("unknown exact-solution variant: " + name);
}

ExactSolutionSpec make_spec(Variant v, const WaveCoefficients& coeffs,
                            double k1, double k2, double kbar1, double kbar2) {
  ExactSolutionSpec s;
  s.variant = v;
  s.k1 = k1;
  s.k2 = k2;
  s.kbar1 = kbar1;
  s.kbar2 = kbar2;
  s.q = coeffs.default_q();
  return s;
}

double eval(const ExactSolutionSpec& spec, const WaveCoefficients& coeffs,
            double tau, double theta, double eta) {
  const double A = coeffs.plateau();
  const double s = coeffs.fan_slope();
  const double X = theta - spec.q * tau;  // traveling-frame coordinate
  switch (spec.variant) {
    case Variant::Constant:
      return A;
    case Variant::WavefanPlus:
    case Variant::WavefanMinus: {
      const double den = eta + spec.k1;
      if (std::abs(den) < kSingularTol)
        throw SingularPointError("wavefan evaluated on eta = -k1");
      const double z = X + 1.5 * spec.k2;
      return A + (is_plus(spec.variant) ? s : -s) * z / den;
    }
    case Variant::Cuberoot:
      return A + (spec.kbar1 * eta + spec.kbar2) * cbrt_odd(X);
    case Variant::Case2LinearPlus:
    case Variant::Case2LinearMinus: {
      if (std::abs(eta) < kSingularTol)
        throw SingularPointError("case2 variant evaluated on eta = 0");
      return A + (is_plus(spec.variant) ? s : -s) * X / eta;
    }
    case Variant::Case2ExtendedPlus:
    case Variant::Case2ExtendedMinus: {
      if (std::abs(eta) < kSingularTol)
        throw SingularPointError("case2 variant evaluated on eta = 0");
      return A + (is_plus(spec.variant) ? s : -s) * X / eta +
             spec.kbar1 / eta + spec.kbar2 * eta * eta;
    }
  }
  throw Error("unreachable variant");
}

double eval_g(const ExactSolutionSpec& spec, const WaveCoefficients& coeffs,
              double tau, double theta, double eta) {
  const double s = coeffs.fan_slope();
  const double c0 = coeffs.c0;
  const double L0 = coeffs.lambda0;
  const double X = theta - spec.q * tau;
  const double sgn = is_plus(spec.variant) ? 1.0 : -1.0;
  switch (spec.variant) {
    case Variant::Constant:
      return 0.0;
    case Variant::WavefanPlus:
    case Variant::WavefanMinus: {
      const double den = eta + spec.k1;
      if (std::abs(den) < kSingularTol)
        throw SingularPointError("wavefan evaluated on eta = -k1");
      const double z = X + 1.5 * spec.k2;
      return -sgn * s * z * z / (2.0 * den * den);
    }
    case Variant::Cuberoot: {
      const double z = cbrt_odd(X);
      const double base = 0.75 * spec.kbar1 * z * z * z * z;
      const double P = spec.kbar1 * eta + spec.kbar2;
      double nu;
      if (spec.kbar1 != 0.0) {
        nu = (L0 / (6.0 * c0 * spec.kbar1)) * P * P * P * P;
      } else {
        nu = (2.0 * L0 / (3.0 * c0)) * spec.kbar2 * spec.kbar2 * spec.kbar2 *
             eta;
      }
      return base + nu;
    }
    case Variant::Case2LinearPlus:
    case Variant::Case2LinearMinus: {
      if (std::abs(eta) < kSingularTol)
        throw SingularPointError("case2 variant evaluated on eta = 0");
      return -sgn * s * X * X / (2.0 * eta * eta);
    }
    case Variant::Case2ExtendedPlus:
    case Variant::Case2ExtendedMinus: {
      if (std::abs(eta) < kSingularTol)
        throw SingularPointError("case2 variant evaluated on eta = 0");
      const double T = eta;
      const double wprime = -spec.kbar1 / (T * T) + 2.0 * spec.kbar2 * T;
      const double nu =
          (sgn / s) * (-spec.kbar1 * spec.kbar1 / (2.0 * T * T) +
                       2.0 * spec.kbar1 * spec.kbar2 * T +
                       spec.kbar2 * spec.kbar2 * T * T * T * T / 4.0);
      return -sgn * s * X * X / (2.0 * T * T) + wprime * X + nu;
    }
  }
  throw Error("unreachable variant");
}

ConstraintReport admissibility(const ExactSolutionSpec& spec,
                               const WaveCoefficients& coeffs) {
  ConstraintReport r;
  const double q0 = coeffs.default_q();
  const bool q_ok = std::abs(spec.q - q0) <= 1e-12 * std::max(1.0, q0);
  const bool b_ok = coeffs.beta_hat == 0.0;
  switch (spec.variant) {
    case Variant::Constant:
      r.detail = "constant state solves the equation for any (q, beta_hat)";
      return r;
    case Variant::Cuberoot:
      r.requires_default_q = true;
      r.requires_zero_beta = true;
      r.q_satisfied = q_ok;
      r.beta_satisfied = b_ok;
      r.admissible = q_ok && b_ok;
      r.detail =
          "cuberoot profile needs q = gamma_hat0^2/(4 lambda0) and "
          "beta_hat = 0";
      return r;
    default:
      // Affine dependence on the traveling-frame coordinate annihilates the
      // dissipative term, so only the frame-speed constraint remains.
      r.requires_default_q = true;
      r.q_satisfied = q_ok;
      r.admissible = q_ok;
      r.detail = "fan-type profile needs q = gamma_hat0^2/(4 lambda0); the "
                 "dissipative term vanishes for any beta_hat";
      return r;
  }
}

namespace {

// 4th-order first and second derivatives, 2nd-order third derivative.
template <typename F>
double d1(const F& f, double x, double h) {
  return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) /
         (12 * h);
}
template <typename F>
double d2(const F& f, double x, double h) {
  return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) -
          f(x - 2 * h)) /
         (12 * h * h);
}
template <typename F>
double d3(const F& f, double x, double h) {
  return (f(x + 2 * h) - 2 * f(x + h) + 2 * f(x - h) - f(x - 2 * h)) /
         (2 * h * h * h);
}

}  // namespace

ResidualPair pde_residual_fd(const ExactSolutionSpec& spec,
                             const WaveCoefficients& coeffs,
                             const SamplePoint& pt, double step) {
  if (!(step > 0.0)) throw DomainError("pde_residual_fd requires step > 0");
  // Distance to the variant's singular set must exceed the stencil radius.
  double dist = 1e300;
  if (is_wavefan(spec.variant)) dist = std::abs(pt.eta + spec.k1);
  if (is_case2(spec.variant)) dist = std::abs(pt.eta);
  if (spec.variant == Variant::Cuberoot)
    dist = std::abs(pt.theta - spec.q * pt.tau);
  if (dist < 10.0 * step)
    throw SingularPointError("sample point within 10*step of a singular set");

  const double G0 = coeffs.gamma_hat0;
  const double L0 = coeffs.lambda0;
  const double bh = coeffs.beta_hat;
  const double c0 = coeffs.c0;
  const double q = spec.q;
  auto N = [&](double v) { return G0 * v * v / 2.0 + L0 * v * v * v / 3.0; };

  // Lab frame: (h_tau - N(h)_theta - beta_hat h_theta_theta)_theta
  //            + (c0/2) h_eta_eta.
  const double htau = step / std::max(1.0, std::abs(q));
  auto h = [&](double tau, double th, double et) {
    return eval(spec, coeffs, tau, th, et);
  };
  auto dtau_h = [&](double th) {
    return d1([&](double t) { return h(t, th, pt.eta); }, pt.tau, htau);
  };
  auto hx = [&](double x) { return h(pt.tau, x, pt.eta); };
  const double lab =
      d1(dtau_h, pt.theta, step) -
      d2([&](double x) { return N(hx(x)); }, pt.theta, step) -
      bh * d3(hx, pt.theta, step) +
      (c0 / 2.0) * d2([&](double e) { return h(pt.tau, pt.theta, e); }, pt.eta,
                      step);

  // Traveling frame: (beta_hat H_X + N(H) + qH)_XX - (c0/2) H_TT, with
  // H(X, T) = h(tau=0, theta=X, eta=T).
  auto H = [&](double X, double T) { return h(0.0, X, T); };
  const double X0 = pt.theta - q * pt.tau;
  const double T0 = pt.eta;
  auto P = [&](double v) { return N(v) + q * v; };
  const double tf =
      bh * d3([&](double X) { return H(X, T0); }, X0, step) +
      d2([&](double X) { return P(H(X, T0)); }, X0, step) -
      (c0 / 2.0) * d2([&](double T) { return H(X0, T); }, T0, step);

  return {lab, tf};
}

}  // namespace vdw
