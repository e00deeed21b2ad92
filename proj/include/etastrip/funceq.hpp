#ifndef ETASTRIP_FUNCEQ_HPP
#define ETASTRIP_FUNCEQ_HPP

#include <utility>

#include "etastrip/angle.hpp"
#include "etastrip/series.hpp"

namespace etastrip {

// Routes holding cosh(pi*beta)-scale factors switch to log-space pairing
// above this ordinate and refuse input beyond the guard.
inline constexpr double kBetaOverflowGuard = 700.0;
inline constexpr double kBetaLogSpaceSwitch = 200.0;

// Default tolerance for the "theta != 0 (mod 2*pi)" predicate.
inline constexpr double kThetaNonzeroTol = 1e-6;

struct PolarForm {
  double modulus = 0.0;  // rho > 0 on the strip
  Angle arg;             // theta, principal value
};

// Row-major 2x2 matrix; the functional-equation rotations are built here.
struct Rotation2 {
  double m00 = 1.0, m01 = 0.0, m10 = 0.0, m11 = 1.0;
  std::pair<double, double> apply(double u, double v) const {
    return {m00 * u + m01 * v, m10 * u + m11 * v};
  }
  double det() const { return m00 * m11 - m01 * m10; }
};

struct RotationBundle {
  Rotation2 a;             // rho * rotation, entries from phi components
  Rotation2 b;             // pure rotation by theta
  double rho = 0.0;
  double fixed_point_det = 0.0;  // det(I - B) = -2(cos theta - 1)
};

// Argument decomposition of phi on the critical line.
struct ArgBreakdown {
  Angle varpi;       // arg of the two-power ratio (quadrant-correct)
  Angle phi_arg;     // arctan(tanh(pi beta / 2))
  double psi = 0.0;  // continuous arg of Gamma(1/2 - i beta), unreduced
  double g = 0.0;    // (varpi - beta ln 2)/2, unreduced
  double theta_rs = 0.0;  // Riemann-Siegel theta, unreduced
  Angle theta_sum;   // principal value of beta ln pi + varpi + phi_arg + psi
};

struct OmegaResidual {
  SeriesValue series;  // single accelerated pass over the combined terms
  Cplx closed_form;    // conj(eta(s)) - rho^2 * eta(1-s), separate routes
  double rho_sq = 0.0;
};

struct OmegaMembership {
  double r1 = 0.0;  // |x - u|
  double r2 = 0.0;  // |y + v|
  bool member = false;
};

/// Functional-equation factor with eta(s) = phi(s) eta(1-s) on the strip.
Cplx phi(const StripPoint& s);

/// Polar decomposition of phi(s); UndefinedPolarError if |phi| = 0.
PolarForm polar(const StripPoint& s);

/// phi(1/2 + i beta) assembled factor-by-factor from the closed-form
/// decompositions (independent of the direct phi route).
Cplx phi_critical(double beta);

/// Closed form of Gamma(1/2 - i beta) from the Riemann-Siegel theta.
Cplx gamma_half_line(double beta);

/// All critical-line argument components plus their principal-value sum.
ArgBreakdown arg_breakdown(double beta);

/// Principal value of 2*(g(beta) - theta_rs(beta)).
Angle theta_from_g(double beta);

/// g with the quadrant-correct (arctan2) branch of varpi.
double g_of(double beta);

/// g with the scalar principal arctan in place of the quadrant-correct
/// varpi; its branch differs from g_of where cos(beta ln 2) < (2/3) sqrt 2.
double g_arctan_form(double beta);

/// The two-power ratio (1 - 2^{i beta - 1/2}) / (2^{i beta + 1/2} - 1),
/// by direct complex arithmetic and by the componentwise closed form.
Cplx two_power_ratio(double beta);
Cplx two_power_ratio_closed(double beta);

/// Scalar-arctan form of arg(two_power_ratio); loses the quadrant where
/// cos(beta ln 2) < (2/3) sqrt 2.
double varpi_arctan_form(double beta);

/// The combined residual series and its closed-form reduction.
OmegaResidual omega_residual(const StripPoint& s, double tol = kDefaultTol);

/// Component-series membership test: x = u and y = -v within tol.
OmegaMembership omega_membership(const StripPoint& s, double tol = kDefaultTol);

/// A = rho*B and B = rotation by theta, with det(I - B).
RotationBundle build_rotation(const StripPoint& s);

/// (x, y) = (u phi1 - v phi2, u phi2 + v phi1).
std::pair<double, double> apply_functional_rotation(const Cplx& phi_value, double u, double v);

/// Inverse transform: recovers (u, v) from (x, y).
std::pair<double, double> invert_functional_rotation(const Cplx& phi_value, double x, double y);

}  // namespace etastrip

#endif
