#include "vdw/gas_model.hpp"

#include <cmath>
#include <sstream>

namespace vdw {

namespace {

std::string fmt(const char* what, double value) {
  std::ostringstream os;
  os << what << " (got " << value << ")";
  return os.str();
}

}  // namespace

ValidatedGasParameters validate(const GasParameters& params) {
  const GasParameters& p = params;
  if (!(p.gamma > 1.0) || !(p.gamma <= 5.0 / 3.0))
    throw DomainError(fmt("gamma must lie in (1, 5/3]", p.gamma));
  if (!(p.a_tilde >= 0.0) || !(p.a_tilde < 1.0))
    throw DomainError(fmt("a_tilde must lie in [0, 1)", p.a_tilde));
  if (!(p.b_tilde >= 0.0) || !(p.b_tilde < 1.0 / 3.0))
    throw DomainError(fmt("b_tilde must lie in [0, 1/3)", p.b_tilde));
  if (!(p.rho0 > 0.0)) throw DomainError(fmt("rho0 must be positive", p.rho0));
  if (!(p.p0 > 0.0)) throw DomainError(fmt("p0 must be positive", p.p0));
  if (!(p.cv > 0.0)) throw DomainError(fmt("cv must be positive", p.cv));
  if (!(p.epsilon > 0.0) || !(p.epsilon < 1.0))
    throw DomainError(fmt("epsilon must lie in (0, 1)", p.epsilon));
  if (!(p.mu_hat >= 0.0))
    throw DomainError(fmt("mu_hat must be nonnegative", p.mu_hat));
  if (!(p.kappa_hat >= 0.0))
    throw DomainError(fmt("kappa_hat must be nonnegative", p.kappa_hat));
  const double c0sq =
      p.gamma * (1.0 + p.a_tilde) / (1.0 - p.b_tilde) - 2.0 * p.a_tilde;
  if (!(c0sq > 0.0))
    throw DomainError(fmt("imaginary sound speed: gamma(1+a~)/(1-b~) - 2a~ "
                          "must be positive",
                          c0sq));
  return ValidatedGasParameters(p);
}

double sound_speed(const ValidatedGasParameters& params) {
  const GasParameters& p = params.get();
  const double c0sq = (p.p0 / p.rho0) *
                      (p.gamma * (1.0 + p.a_tilde) / (1.0 - p.b_tilde) -
                       2.0 * p.a_tilde);
  return std::sqrt(c0sq);
}

EosState eos_eval(double rho, double T, const GasParameters& params,
                  double K) {
  const double a = params.a();
  const double b = params.b();
  const double R = params.R();
  if (!(rho > 0.0) || !(b * rho < 1.0))
    throw DomainError(fmt("eos_eval requires 0 < b*rho < 1; b*rho", b * rho));
  if (!(T > 0.0)) throw DomainError(fmt("eos_eval requires T > 0", T));
  if (!(K > 0.0)) throw DomainError(fmt("entropy constant K must be positive", K));
  EosState st;
  st.p = R * T * rho / (1.0 - b * rho) - a * rho * rho;
  st.S = R * std::log(K * std::pow(T, 1.0 / (params.gamma - 1.0)) *
                      (1.0 - b * rho) / rho);
  return st;
}

namespace {

// Sound speed along the isentrope through (rho0, p0):
// T(rho) = T0 * [ (rho/(1-b rho)) / (rho0/(1-b rho0)) ]^{gamma-1}.
double isentropic_sound_speed(const GasParameters& p, double rho) {
  const double a = p.a();
  const double b = p.b();
  const double R = p.R();
  if (!(rho > 0.0) || !(b * rho < 1.0))
    throw DomainError("isentrope probe point outside 0 < b*rho < 1");
  const double T0 = (p.p0 + a * p.rho0 * p.rho0) * (1.0 - b * p.rho0) /
                    (R * p.rho0);
  const double ratio =
      (rho / (1.0 - b * rho)) / (p.rho0 / (1.0 - b * p.rho0));
  const double T = T0 * std::pow(ratio, p.gamma - 1.0);
  const double pr = R * T * rho / (1.0 - b * rho) - a * rho * rho;
  const double csq =
      p.gamma * (pr + a * rho * rho) / (rho * (1.0 - b * rho)) - 2.0 * a * rho;
  if (!(csq > 0.0))
    throw DomainError("isentrope probe point has imaginary sound speed");
  return std::sqrt(csq);
}

}  // namespace

double fundamental_derivative(const ValidatedGasParameters& params,
                              double drho) {
  const GasParameters& p = params.get();
  const double h = (drho > 0.0) ? drho : p.rho0 * 1e-5;
  const double c = isentropic_sound_speed(p, p.rho0);
  const double cp = isentropic_sound_speed(p, p.rho0 + h);
  const double cm = isentropic_sound_speed(p, p.rho0 - h);
  return c / p.rho0 + (cp - cm) / (2.0 * h);
}

double WaveCoefficients::fan_slope() const {
  return std::sqrt(c0 / (2.0 * lambda0));
}

WaveCoefficients coefficients(const ValidatedGasParameters& params) {
  const GasParameters& p = params.get();
  const double a = p.a();
  const double b = p.b();
  const double rho0 = p.rho0;
  const double p0 = p.p0;
  const double g = p.gamma;
  const double ar2 = a * rho0 * rho0;   // a rho0^2
  const double cov = 1.0 - b * rho0;    // 1 - b rho0

  WaveCoefficients c;
  c.c0 = sound_speed(params);
  c.gamma_hat0 =
      (-g * (g + 1.0) * (p0 + ar2) + 6.0 * ar2 * cov * cov) /
      (2.0 * p.epsilon * cov * (g * (p0 + ar2) - 2.0 * ar2 * cov));
  c.beta_hat = 2.0 * p.mu_hat / (3.0 * rho0) +
               p.kappa_hat * (g - 1.0) * (p0 / rho0 + a * rho0) /
                   (2.0 * p.cv * c.c0 * c.c0 * rho0 * cov);
  const double denom = g * (p0 + ar2) * cov - 2.0 * ar2 * cov * cov;
  c.lambda0 = std::sqrt(rho0) *
              (g * (g + 1.0) * (4.0 - g - 6.0 * b * rho0) * (p0 + ar2) -
               12.0 * ar2 * cov * cov * cov) /
              (2.0 * std::pow(denom, 1.5));
  if (!(c.lambda0 > 0.0))
    throw DomainError(fmt("lambda0 must be positive; parameters lie outside "
                          "the asserted positivity region",
                          c.lambda0));
  c.q = c.default_q();
  return c;
}

}  // namespace vdw
