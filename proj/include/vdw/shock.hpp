#ifndef VDW_SHOCK_HPP
#define VDW_SHOCK_HPP

#include <functional>
#include <utility>
#include <vector>

#include "vdw/errors.hpp"
#include "vdw/gas_model.hpp"

namespace vdw {

enum class ShockSign { Forward, Backward };
enum class ShockType { Compressive, Expansive };

struct CurvePoint {
  double T;
  double X;
};

struct ShockCurve {
  ShockSign sign = ShockSign::Forward;
  double C = 1.0;  // integration constant C1 (forward) or C2 (backward)
  std::vector<CurvePoint> samples;
  double frame_q = 0.0;
};

struct JumpState {
  double h_minus;  // behind the shock
  double h_plus;   // ahead of the shock
  double g_jump;   // [G]
};

// Rankine-Hugoniot residuals:
// r1 = [qH + (gamma_hat0/2) H^2 + (lambda0/3) H^3] + (c0/2) [G] sigma
// r2 = [G] + [H] sigma
std::pair<double, double> rh_residual(const JumpState& jump, double speed,
                                      const WaveCoefficients& coeffs,
                                      double q);

// The quantity under the square root in the shock-speed relation, kept as a
// diagnostic for general q.
double speed_bracket(double h_minus, double h_plus,
                     const WaveCoefficients& coeffs, double q);

// +/- sqrt((2/c0) * bracket); requires the default frame speed
// q = gamma_hat0^2/(4 lambda0). Throws ComplexSpeedError when bracket < 0.
std::pair<double, double> shock_speed(double h_minus, double h_plus,
                                      const WaveCoefficients& coeffs,
                                      double q);

// Forward: X = C T^{1/sqrt(3)}; backward: X = C T^{-1/sqrt(3)}.
ShockCurve trajectory_closed_form(ShockSign sign, double C, double T_min,
                                  double T_max, int n);

// Integrates dX/dT = shock_speed(behind(X,T), h_plus) with the sign branch
// matching sign(X0). Throws ComplexSpeedError with the location on failure.
ShockCurve integrate_trajectory(
    const std::function<double(double X, double T)>& behind_state,
    double h_plus, const WaveCoefficients& coeffs, double q, double T0,
    double X0, double T_end);

struct LabPoint {
  double tau;
  double eta;
  double theta;
};

// theta = q tau + X(eta) along the curve.
std::vector<LabPoint> lab_frame_trajectory(const ShockCurve& curve,
                                           const WaveCoefficients& coeffs,
                                           double tau);

// [h] = sqrt(c0/(2 lambda0)) * C1 * eta^{-alpha}, alpha = (sqrt(3)-1)/sqrt(3).
double strength_decay(double eta, const WaveCoefficients& coeffs,
                      double C1 = 1.0);

ShockType classify(const JumpState& jump);

// Roots of fan_slope(a_tilde, b) - fan_slope(0, 0) in b over (0, 1/3):
// bracket scan at 1e-3 resolution, bisection to 1e-10. Throws NotFoundError
// when no sign change exists.
std::vector<double> critical_b_star(
    double a_tilde, double gamma,
    const std::function<WaveCoefficients(double a, double b, double g)>&
        coeffs_builder);

}  // namespace vdw

#endif
