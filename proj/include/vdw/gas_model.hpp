#ifndef VDW_GAS_MODEL_HPP
#define VDW_GAS_MODEL_HPP

#include "vdw/errors.hpp"

namespace vdw {

// Background state and van der Waals constants. The attraction and covolume
// parameters are carried in dimensionless form:
//   a_tilde = a rho0^2 / p0,   b_tilde = b rho0.
struct GasParameters {
  double gamma = 1.4;      // ratio of specific heats, 1 < gamma <= 5/3
  double a_tilde = 0.0;    // attraction parameter, 0 <= a_tilde < 1
  double b_tilde = 0.0;    // covolume parameter, 0 <= b_tilde < 1/3
  double rho0 = 1.0;       // background density
  double p0 = 1.0;         // background pressure
  double cv = 1.0;         // specific heat at constant volume
  double epsilon = 0.1;    // amplitude scale, 0 < epsilon < 1
  double mu_hat = 0.0;     // scaled viscosity, >= 0
  double kappa_hat = 0.0;  // scaled thermal conductivity, >= 0

  double a() const { return a_tilde * p0 / (rho0 * rho0); }
  double b() const { return b_tilde / rho0; }
  double R() const { return cv * (gamma - 1.0); }
};

// Wrapper certifying that validate() has accepted the parameters.
class ValidatedGasParameters {
 public:
  const GasParameters& get() const { return p_; }
  const GasParameters* operator->() const { return &p_; }

 private:
  explicit ValidatedGasParameters(const GasParameters& p) : p_(p) {}
  friend ValidatedGasParameters validate(const GasParameters&);
  GasParameters p_;
};

// Checks every domain constraint; throws DomainError naming the first
// violated one.
ValidatedGasParameters validate(const GasParameters& params);

// Background sound speed, c0^2 = (p0/rho0) [gamma (1+a~)/(1-b~) - 2 a~].
double sound_speed(const ValidatedGasParameters& params);

struct EosState {
  double p;  // pressure
  double S;  // entropy
};

// Pressure and entropy at (rho, T). K is the entropy normalization constant.
EosState eos_eval(double rho, double T, const GasParameters& params,
                  double K = 1.0);

// Fundamental derivative Gamma = c/rho + dc/drho at constant entropy,
// evaluated at the background state by central differencing of the sound
// speed along the analytic isentrope through (rho0, p0). drho <= 0 selects
// the default step rho0 * 1e-5.
double fundamental_derivative(const ValidatedGasParameters& params,
                              double drho = 0.0);

// Derived model constants of the quadratic-cubic evolution equation.
struct WaveCoefficients {
  double c0;          // background sound speed
  double gamma_hat0;  // quadratic coefficient, signed
  double lambda0;     // cubic coefficient, positive on the validated domain
  double beta_hat;    // dissipation coefficient, >= 0
  double q;           // traveling-frame speed

  double default_q() const { return gamma_hat0 * gamma_hat0 / (4.0 * lambda0); }
  // Amplitude of the constant exact solution, -gamma_hat0 / (2 lambda0).
  double plateau() const { return -gamma_hat0 / (2.0 * lambda0); }
  // Wavefan slope magnitude sqrt(c0 / (2 lambda0)); the strength prefactor.
  double fan_slope() const;
};

// Evaluates c0, gamma_hat0, lambda0, beta_hat and the default frame speed q.
// Throws DomainError if lambda0 <= 0 (parameters outside the asserted
// positivity region).
WaveCoefficients coefficients(const ValidatedGasParameters& params);

}  // namespace vdw

#endif
