#include "vdw/shock.hpp"

#include <cmath>
#include <sstream>

#include "vdw/ode.hpp"

namespace vdw {

namespace {

const double kSqrt3 = std::sqrt(3.0);

void require_default_q(const WaveCoefficients& coeffs, double q) {
  const double q0 = coeffs.default_q();
  if (std::abs(q - q0) > 1e-12 * std::max(1.0, std::abs(q0)))
    throw DomainError(
        "shock speed relation assumes q = gamma_hat0^2/(4 lambda0); use "
        "speed_bracket for general q diagnostics");
}

}  // namespace

std::pair<double, double> rh_residual(const JumpState& jump, double speed,
                                      const WaveCoefficients& coeffs,
                                      double q) {
  const double G0 = coeffs.gamma_hat0, L0 = coeffs.lambda0, c0 = coeffs.c0;
  auto flux = [&](double H) {
    return q * H + (G0 / 2) * H * H + (L0 / 3) * H * H * H;
  };
  const double dH = jump.h_minus - jump.h_plus;
  const double r1 =
      (flux(jump.h_minus) - flux(jump.h_plus)) + (c0 / 2) * jump.g_jump * speed;
  const double r2 = jump.g_jump + dH * speed;
  return {r1, r2};
}

double speed_bracket(double h_minus, double h_plus,
                     const WaveCoefficients& coeffs, double q) {
  const double G0 = coeffs.gamma_hat0, L0 = coeffs.lambda0;
  return q + (G0 / 2) * (h_plus + h_minus) +
         (L0 / 3) *
             (h_plus * h_plus + h_minus * h_minus + h_plus * h_minus);
}

std::pair<double, double> shock_speed(double h_minus, double h_plus,
                                      const WaveCoefficients& coeffs,
                                      double q) {
  require_default_q(coeffs, q);
  if (h_minus == h_plus)
    throw DomainError("shock_speed requires distinct jump states");
  const double br = speed_bracket(h_minus, h_plus, coeffs, q);
  const double val = (2.0 / coeffs.c0) * br;
  if (val < 0.0) {
    std::ostringstream os;
    os << "negative speed-squared bracket " << val
       << " for jump states (" << h_minus << ", " << h_plus << ")";
    throw ComplexSpeedError(os.str());
  }
  const double s = std::sqrt(val);
  return {s, -s};
}

ShockCurve trajectory_closed_form(ShockSign sign, double C, double T_min,
                                  double T_max, int n) {
  if (!(T_min > 0.0) || !(T_max > T_min) || n < 2)
    throw DomainError("trajectory_closed_form needs 0 < T_min < T_max, n >= 2");
  const double p = (sign == ShockSign::Forward ? 1.0 : -1.0) / kSqrt3;
  ShockCurve c;
  c.sign = sign;
  c.C = C;
  c.samples.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double T = T_min + (T_max - T_min) * i / (n - 1);
    c.samples.push_back({T, C * std::pow(T, p)});
  }
  return c;
}

ShockCurve integrate_trajectory(
    const std::function<double(double, double)>& behind_state, double h_plus,
    const WaveCoefficients& coeffs, double q, double T0, double X0,
    double T_end) {
  require_default_q(coeffs, q);
  const double branch = X0 >= 0.0 ? 1.0 : -1.0;
  std::function<std::array<double, 1>(double, const std::array<double, 1>&)>
      f = [&](double T, const std::array<double, 1>& y) {
        const double hm = behind_state(y[0], T);
        const double br = speed_bracket(hm, h_plus, coeffs, q);
        const double val = (2.0 / coeffs.c0) * br;
        if (val < 0.0) {
          std::ostringstream os;
          os << "negative speed-squared bracket at (X=" << y[0]
             << ", T=" << T << ")";
          throw ComplexSpeedError(os.str());
        }
        return std::array<double, 1>{branch * std::sqrt(val)};
      };
  auto traj = integrate_ode<1>(f, T0, T_end, {X0});
  ShockCurve c;
  c.sign = branch > 0 ? ShockSign::Forward : ShockSign::Backward;
  c.C = X0 / std::pow(T0, branch / kSqrt3);
  c.frame_q = q;
  c.samples.reserve(traj.size());
  for (const auto& s : traj) c.samples.push_back({s.x, s.y[0]});
  return c;
}

std::vector<LabPoint> lab_frame_trajectory(const ShockCurve& curve,
                                           const WaveCoefficients& coeffs,
                                           double tau) {
  std::vector<LabPoint> out;
  out.reserve(curve.samples.size());
  const double q = curve.frame_q != 0.0 ? curve.frame_q : coeffs.default_q();
  for (const auto& s : curve.samples)
    out.push_back({tau, s.T, q * tau + s.X});
  return out;
}

double strength_decay(double eta, const WaveCoefficients& coeffs, double C1) {
  if (!(eta > 0.0)) throw DomainError("strength_decay requires eta > 0");
  const double alpha = (kSqrt3 - 1.0) / kSqrt3;
  return coeffs.fan_slope() * C1 * std::pow(eta, -alpha);
}

ShockType classify(const JumpState& jump) {
  if (jump.h_minus == jump.h_plus)
    throw DomainError("classify requires distinct jump states");
  return jump.h_minus > jump.h_plus ? ShockType::Compressive
                                    : ShockType::Expansive;
}

std::vector<double> critical_b_star(
    double a_tilde, double gamma,
    const std::function<WaveCoefficients(double, double, double)>&
        coeffs_builder) {
  const double ideal = coeffs_builder(0.0, 0.0, gamma).fan_slope();
  auto diff = [&](double b) {
    return coeffs_builder(a_tilde, b, gamma).fan_slope() - ideal;
  };
  const double b_lo = 1e-3, b_hi = 1.0 / 3.0 - 1e-3, scan = 1e-3;
  std::vector<double> roots;
  double prev_b = b_lo, prev_v = diff(b_lo);
  for (double b = b_lo + scan; b <= b_hi + 1e-12; b += scan) {
    const double v = diff(b);
    if (prev_v == 0.0) roots.push_back(prev_b);
    if (prev_v * v < 0.0) {
      double lo = prev_b, hi = b, vlo = prev_v;
      while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi), vm = diff(mid);
        if (vlo * vm <= 0.0) {
          hi = mid;
        } else {
          lo = mid;
          vlo = vm;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    prev_b = b;
    prev_v = v;
  }
  if (roots.empty())
    throw NotFoundError(
        "no sign change of the strength prefactor against the ideal value "
        "on b in (0, 1/3)");
  return roots;
}

}  // namespace vdw
