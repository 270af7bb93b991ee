#ifndef VDW_ERRORS_HPP
#define VDW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vdw {

// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A parameter or evaluation point lies outside the validated domain.
struct DomainError : Error {
  using Error::Error;
};

// Non-finite data supplied where finite samples are required.
struct NonFiniteInputError : Error {
  using Error::Error;
};

// Array shapes or sample layouts are inconsistent.
struct ShapeError : Error {
  using Error::Error;
};

// Time integration produced a non-finite sample.
struct StabilityError : Error {
  StabilityError(const std::string& msg, double tau_at)
      : Error(msg), tau(tau_at) {}
  double tau;
};

// Evaluation requested on (or too close to) a singular set of a closed form.
struct SingularPointError : Error {
  using Error::Error;
};

// ODE integration hit a vanishing leading coefficient.
struct SingularityError : Error {
  using Error::Error;
};

// Jump states yield a negative speed-squared bracket.
struct ComplexSpeedError : Error {
  using Error::Error;
};

// Root search found no sign change on the bracket.
struct NotFoundError : Error {
  using Error::Error;
};

}  // namespace vdw

#endif
