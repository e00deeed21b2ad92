#ifndef ETASTRIP_ANGLE_HPP
#define ETASTRIP_ANGLE_HPP

#include <cmath>
#include <complex>
#include <numbers>

#include "etastrip/errors.hpp"

namespace etastrip {

using Cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw DomainError(std::string(what) + ": non-finite value");
}

inline void require_finite(const Cplx& z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw OverflowError(std::string(what) + ": non-finite complex value");
}

// A principal angle, always in (-pi, pi].
class Angle {
 public:
  Angle() = default;
  double value() const { return value_; }

 private:
  friend Angle normalize_angle(double);
  friend Angle arctan2(double, double);
  explicit Angle(double v) : value_(v) {}
  double value_ = 0.0;
};

// Reduces x modulo 2*pi into (-pi, pi].  std::remainder is exact and
// returns a value in [-pi, pi]; only the -pi endpoint needs remapping.
inline Angle normalize_angle(double x) {
  require_finite(x, "normalize_angle");
  double r = std::remainder(x, kTwoPi);
  if (r <= -kPi) r = kPi;
  return Angle(r);
}

// Principal argument of a + ib, range (-pi, pi].  Follows the case table
// with the sign of b selecting the branch; (a < 0, b = 0) maps to +pi so
// the range is exactly half-open.  Undefined at the origin.
inline Angle arctan2(double a, double b) {
  require_finite(a, "arctan2");
  require_finite(b, "arctan2");
  if (a == 0.0 && b == 0.0) throw DomainError("arctan2: undefined at a = 0, b = 0");
  if (b == 0.0) return Angle(a > 0.0 ? 0.0 : kPi);
  double r = std::atan2(b, a);
  if (r <= -kPi) r = kPi;  // rounding can land exactly on -pi
  return Angle(r);
}

inline Angle principal_arg(const Cplx& z) { return arctan2(z.real(), z.imag()); }

// min_k |x - y - 2*pi*k|, always in [0, pi].
inline double circular_distance(Angle x, Angle y) {
  double d = std::remainder(x.value() - y.value(), kTwoPi);
  return std::abs(d);
}

inline double circular_distance(double x, double y) {
  return std::abs(std::remainder(x - y, kTwoPi));
}

}  // namespace etastrip

#endif
