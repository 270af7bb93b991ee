#ifndef VDW_EXACT_SOLUTIONS_HPP
#define VDW_EXACT_SOLUTIONS_HPP

#include <string>
#include <vector>

#include "vdw/errors.hpp"
#include "vdw/gas_model.hpp"

namespace vdw {

enum class Variant {
  Constant,
  WavefanPlus,
  WavefanMinus,
  Cuberoot,
  Case2LinearPlus,
  Case2LinearMinus,
  Case2ExtendedPlus,
  Case2ExtendedMinus,
};

const char* variant_name(Variant v);
Variant variant_from_name(const std::string& name);  // throws NotFoundError
std::vector<Variant> all_variants();

// Closed-form solution family with its constants. q defaults to the frame
// speed gamma_hat0^2 / (4 lambda0) when constructed via make_spec.
struct ExactSolutionSpec {
  Variant variant = Variant::Constant;
  double k1 = 0.0;
  double k2 = 0.0;
  double kbar1 = 0.0;
  double kbar2 = 0.0;
  double q = 0.0;
};

ExactSolutionSpec make_spec(Variant v, const WaveCoefficients& coeffs,
                            double k1 = 0.0, double k2 = 0.0,
                            double kbar1 = 0.0, double kbar2 = 0.0);

// Amplitude h(tau, theta, eta). Throws SingularPointError on the variant's
// singular set (eta = -k1 for wavefans, eta = 0 for the case2 family).
double eval(const ExactSolutionSpec& spec, const WaveCoefficients& coeffs,
            double tau, double theta, double eta);

// Auxiliary field g with g_theta = h_eta, gauged so that (h, g) satisfies
// the coupled transport system whenever the variant is admissible.
double eval_g(const ExactSolutionSpec& spec, const WaveCoefficients& coeffs,
              double tau, double theta, double eta);

struct ConstraintReport {
  bool requires_default_q = false;
  bool requires_zero_beta = false;
  bool q_satisfied = true;
  bool beta_satisfied = true;
  bool admissible = true;
  std::string detail;
};

// Which of {q = gamma_hat0^2/(4 lambda0), beta_hat = 0} the closed form needs
// to solve the evolution equation, and whether coeffs satisfies them.
ConstraintReport admissibility(const ExactSolutionSpec& spec,
                               const WaveCoefficients& coeffs);

struct SamplePoint {
  double tau;
  double theta;
  double eta;
};

struct ResidualPair {
  double lab;        // combined lab-frame equation
  double traveling;  // traveling-frame equation
};

// Central finite-difference residuals of the combined evolution equation in
// both frames, evaluated on the analytic closed form. Throws
// SingularPointError if pt is within 10*step of the singular set.
ResidualPair pde_residual_fd(const ExactSolutionSpec& spec,
                             const WaveCoefficients& coeffs,
                             const SamplePoint& pt, double step);

}  // namespace vdw

#endif
