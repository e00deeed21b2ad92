#ifndef ETASTRIP_ERRORS_HPP
#define ETASTRIP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace etastrip {

// Base class for all library errors; the CLI maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside an operation's domain (precondition violation).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Evaluation at a pole (Gamma at a nonpositive integer, zeta at s = 1).
class PoleError : public Error {
 public:
  using Error::Error;
};

// zeta_from_eta at a zero of the conversion factor 1 - 2^{1-s} (s != 1).
class FactorZeroError : public Error {
 public:
  using Error::Error;
};

// Requested tolerance not reachable within the series term budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// Polar decomposition of the zero complex value.
class UndefinedPolarError : public Error {
 public:
  using Error::Error;
};

// Root refinement called on a bracket without a sign change.
class NoSignChangeError : public Error {
 public:
  using Error::Error;
};

// The rotated Hardy-like function came out with a non-negligible
// imaginary part, so its sign cannot be trusted.
class RealnessViolation : public Error {
 public:
  using Error::Error;
};

// Input magnitude beyond the documented binary64 overflow guard.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace etastrip

#endif
