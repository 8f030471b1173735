#pragma once

#include <stdexcept>
#include <string>

namespace dicke {

/// Argument outside the mathematical domain of a special function.
class EllipticDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// epsilon = 0 removes the TLS-TLS interaction channel; the superradiant
/// structure (critical coupling, condensate fixed points) does not exist.
class DegenerateModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The beat-frequency equation has no real root (coupling at or below
/// critical).
class NoRealSolutionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The requested modulus leads to a spin amplitude exceeding the total spin.
class InfeasibleModulusError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Operation not defined for this parameter regime (e.g. battery formulas
/// with epsilon >= 0, Q-phi system away from epsilon = -1).
class UnsupportedRegimeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Azimuthal angle undefined at a spin pole (sx = sy = 0).
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Adaptive step size underflowed before reaching the requested time.
class StiffnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integration state stopped being finite.
class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dicke
