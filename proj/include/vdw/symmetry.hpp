#ifndef VDW_SYMMETRY_HPP
#define VDW_SYMMETRY_HPP

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "vdw/errors.hpp"
#include "vdw/gas_model.hpp"

namespace vdw {

using Func3 = std::function<double(double X, double T, double H)>;
using Func2 = std::function<double(double X, double T)>;
using Func1 = std::function<double(double T)>;

// Scalar function of one variable with optional analytic derivatives;
// missing ones fall back to high-order finite differences.
struct CurveFn {
  Func1 f;
  Func1 fp;
  Func1 fpp;
  Func1 fppp;
};

// Scalar function on the (X, T) plane with optional analytic partials.
struct PlaneFn {
  Func2 f;
  Func2 f_X;
  Func2 f_T;
  Func2 f_XX;
  Func2 f_TT;
  Func2 f_XXX;
};

// Infinitesimal generator components xi dX + zeta dT + chi dH.
struct Infinitesimals {
  Func3 xi;
  Func3 zeta;
  Func3 chi;
  enum class Normalization { Case1, Case2, Other } normalization =
      Normalization::Other;
};

struct PlanePoint {
  double X;
  double T;
};

// xi H_X + zeta H_T - chi at each point; partials of H_fn by central
// differences with step 1e-6 * max(1, |coordinate|).
std::vector<double> invariant_surface_residual(
    const Infinitesimals& inf, const Func2& H_fn,
    const std::vector<PlanePoint>& pts);

// The four Case-1 ODE residuals for the pair (f1, f2) at each T sample.
std::vector<std::array<double, 4>> case1_ode_residuals(
    const CurveFn& f1, const CurveFn& f2, const WaveCoefficients& coeffs,
    const std::vector<double>& pts);

struct Case1Generators {
  Infinitesimals branch_a;  // scaling branch, singular at T = -k1
  Infinitesimals branch_b;  // translation branch
};

Case1Generators case1_generator(double k1, double k2,
                                const WaveCoefficients& coeffs);

enum class Case2Choice { OneThirdOverX, OneOverX, Zero };

struct Case2Result {
  Infinitesimals generator;
  PlaneFn alpha;
  PlaneFn beta;
  bool requires_zero_beta = false;
  bool requires_default_q = false;
  bool beta_satisfied = true;
  bool q_satisfied = true;
  std::string detail;
};

Case2Result case2_generator(const WaveCoefficients& coeffs, Case2Choice f);

// The five Case-2 determining-equation residuals for (alpha, beta) at each
// sample point.
std::vector<std::array<double, 5>> case2_determining_residuals(
    const PlaneFn& alpha, const PlaneFn& beta, const WaveCoefficients& coeffs,
    double q, const std::vector<PlanePoint>& pts);

struct SimilaritySample {
  double omega;
  double F;
};

// omega = (X + (2/3) k2) / (T + k1)^{2/3},
// F = (H + gamma_hat0 / (2 lambda0)) (T + k1)^{1/3}.
std::vector<SimilaritySample> similarity_reduce(
    const Func2& H_fn, double k1, double k2, const WaveCoefficients& coeffs,
    const std::vector<PlanePoint>& pts);

// -beta_hat F''' - lambda0 (F^2 F'' + 2 F F'^2)
//   + c0 ((2/9) F + (7/9) F' omega + (2/9) F'' omega^2)
std::vector<double> F_ode_residual(const CurveFn& F,
                                   const std::vector<double>& omega_pts,
                                   const WaveCoefficients& coeffs,
                                   double beta_hat);

struct OdeSample {
  double omega;
  double F;
  double Fp;
  double Fpp;  // not meaningful when beta_hat = 0 (second-order system)
};

// Integrates the profile ODE as an initial value problem with an adaptive
// embedded Runge-Kutta scheme. beta_hat = 0 solves for F'' directly and
// throws SingularityError when the leading coefficient or F vanishes.
std::vector<OdeSample> integrate_F_ode(double F0, double F0p, double F0pp,
                                       double omega_start, double omega_end,
                                       const WaveCoefficients& coeffs,
                                       double beta_hat);

}  // namespace vdw

#endif
