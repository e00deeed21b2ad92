#include "etastrip/funceq.hpp"

#include <cmath>

#include "etastrip/gamma.hpp"
#include "etastrip/kernel.hpp"

namespace etastrip {
namespace {

constexpr double kLn2 = 0.6931471805599453;
constexpr double kLnPi = 1.1447298858494002;
constexpr double kLn2Pi = 1.8378770664093453;
constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kSqrtPi = 1.7724538509055160;
constexpr double kTwoThirdsSqrt2 = 0.9428090415820634;   // (2/3) sqrt 2
constexpr double kThreeQuartersSqrt2 = 1.0606601717798212;  // (3/4) sqrt 2

Cplx pow2(const Cplx& z) { return std::exp(z * kLn2); }

Cplx cis(double t) { return {std::cos(t), std::sin(t)}; }

void check_guard(double beta, const char* what) {
  require_finite(beta, what);
  if (std::abs(beta) > kBetaOverflowGuard)
    throw OverflowError(std::string(what) + ": |beta| beyond the overflow guard");
}

// log(sin(pi s / 2)) up to a multiple of 2*pi*i, stable for large |Im s|.
Cplx log_sin_half_pi(const Cplx& s) {
  const Cplx z = 0.5 * kPi * s;
  const double y = z.imag();
  if (y >= 0.0) {
    // sin z = (i/2) e^{-iz} (1 - e^{2iz}),  |e^{2iz}| = e^{-2y}
    const Cplx log_pref(-kLn2, 0.5 * kPi);
    return log_pref + Cplx(0.0, -1.0) * z + std::log(1.0 - std::exp(Cplx(0.0, 2.0) * z));
  }
  const Cplx log_pref(-kLn2, -0.5 * kPi);
  return log_pref + Cplx(0.0, 1.0) * z + std::log(1.0 - std::exp(Cplx(0.0, -2.0) * z));
}

// Continuous argument of Gamma(1/2 - i beta).
double psi_of(double beta) {
  return -(2.0 * riemann_siegel_theta(beta) + beta * kLn2Pi +
           std::atan(std::tanh(0.5 * kPi * beta)));
}

}  // namespace

Cplx phi(const StripPoint& sp) {
  check_guard(sp.beta(), "phi");
  const Cplx s = sp.value();
  const Cplx prefactor =
      2.0 * (pow2(s - 1.0) - 1.0) / (1.0 - pow2(s)) * std::exp((s - 1.0) * kLnPi);
  Cplx value;
  if (std::abs(sp.beta()) <= kBetaLogSpaceSwitch) {
    value = prefactor * std::sin(0.5 * kPi * s) * gamma(1.0 - s);
  } else {
    // sin and Gamma separately over/underflow here; their product does not.
    value = prefactor * std::exp(log_sin_half_pi(s) + log_gamma(1.0 - s));
  }
  require_finite(value, "phi");
  return value;
}

PolarForm polar(const StripPoint& sp) {
  const Cplx p = phi(sp);
  const double modulus = std::abs(p);
  if (modulus == 0.0)
    throw UndefinedPolarError("polar: phi(s) = 0 has no polar form");
  return {modulus, principal_arg(p)};
}

Cplx two_power_ratio(double beta) {
  require_finite(beta, "two_power_ratio");
  return (1.0 - pow2(Cplx(-0.5, beta))) / (pow2(Cplx(0.5, beta)) - 1.0);
}

Cplx two_power_ratio_closed(double beta) {
  require_finite(beta, "two_power_ratio_closed");
  const double c = std::cos(beta * kLn2);
  const double s = std::sin(beta * kLn2);
  const double den = c - kThreeQuartersSqrt2;  // always <= 1 - (3/4)sqrt2 < 0
  return {-0.75 * (c - kTwoThirdsSqrt2) / den, 0.25 * s / den};
}

Cplx gamma_half_line(double beta) {
  check_guard(beta, "gamma_half_line");
  const double modulus = kSqrtPi * std::exp(-0.5 * log_cosh(kPi * beta));
  return modulus * cis(psi_of(beta));
}

Cplx phi_critical(double beta) {
  check_guard(beta, "phi_critical");
  const Cplx pi_power = cis(beta * kLnPi) / kSqrtPi;
  const Cplx ratio = two_power_ratio_closed(beta);
  const double a = 0.5 * kPi * beta;
  Cplx value;
  if (std::abs(beta) <= kBetaLogSpaceSwitch) {
    const Cplx hyperbolic(std::cosh(a), std::sinh(a));
    value = kSqrt2 * pi_power * ratio * hyperbolic * gamma_half_line(beta);
  } else {
    // |cosh + i sinh| * |Gamma(1/2 - i beta)| = sqrt(pi) exactly; combine
    // the two exponential-scale factors in log space.
    const double arg_pair = std::atan(std::tanh(a)) + psi_of(beta);
    value = kSqrt2 * pi_power * ratio * (kSqrtPi * cis(arg_pair));
  }
  require_finite(value, "phi_critical");
  return value;
}

ArgBreakdown arg_breakdown(double beta) {
  check_guard(beta, "arg_breakdown");
  ArgBreakdown out;
  out.varpi = principal_arg(two_power_ratio(beta));
  const double phi_arg_raw = std::atan(std::tanh(0.5 * kPi * beta));
  out.phi_arg = normalize_angle(phi_arg_raw);
  out.psi = psi_of(beta);
  out.g = 0.5 * (out.varpi.value() - beta * kLn2);
  out.theta_rs = riemann_siegel_theta(beta);
  out.theta_sum =
      normalize_angle(beta * kLnPi + out.varpi.value() + phi_arg_raw + out.psi);
  return out;
}

double g_of(double beta) {
  require_finite(beta, "g_of");
  const double varpi = principal_arg(two_power_ratio(beta)).value();
  return 0.5 * (varpi - beta * kLn2);
}

double g_arctan_form(double beta) {
  require_finite(beta, "g_arctan_form");
  const double c = std::cos(beta * kLn2);
  const double s = std::sin(beta * kLn2);
  return -0.5 * (beta * kLn2 + std::atan(s / (3.0 * (c - kTwoThirdsSqrt2))));
}

double varpi_arctan_form(double beta) {
  require_finite(beta, "varpi_arctan_form");
  const double c = std::cos(beta * kLn2);
  const double s = std::sin(beta * kLn2);
  return -std::atan(s / (3.0 * (c - kTwoThirdsSqrt2)));
}

Angle theta_from_g(double beta) {
  return normalize_angle(2.0 * (g_of(beta) - riemann_siegel_theta(beta)));
}

OmegaResidual omega_residual(const StripPoint& sp, double tol) {
  if (!(tol > 0.0)) throw DomainError("omega_residual: requires tol > 0");
  const PolarForm p = polar(sp);
  const double rho_sq = p.modulus * p.modulus;
  const Cplx sv = sp.value();
  const Cplx one_minus_s(1.0 - sp.alpha(), -sp.beta());
  const double tol_part = tol / (1.0 + rho_sq);
  const auto plan_s = detail::plan_terms(sv, tol_part);
  const auto plan_1ms = detail::plan_terms(one_minus_s, tol_part);
  const int n = std::max(plan_s.terms, plan_1ms.terms);
  const auto w = detail::acceleration_coefficients(n);
  const auto ln = kernels::log_table(w.size());
  const auto sums = kernels::active().dirichlet_diff(w, ln, sp.alpha(),
                                                     1.0 - sp.alpha(), rho_sq,
                                                     sp.beta());
  const Cplx series_value(sums.cos_sum, sums.sin_sum);
  const double bound =
      detail::scheme_bound(sv, n) + rho_sq * detail::scheme_bound(one_minus_s, n);
  const Cplx closed = std::conj(eta(sv, tol_part).value) -
                      rho_sq * eta(one_minus_s, tol_part).value;
  return {{series_value, bound, n}, closed, rho_sq};
}

OmegaMembership omega_membership(const StripPoint& sp, double tol) {
  const EtaComponents c = eta_components(sp, tol);
  OmegaMembership out;
  out.r1 = std::abs(c.x - c.u);
  out.r2 = std::abs(c.y + c.v);
  out.member = out.r1 < tol && out.r2 < tol;
  return out;
}

RotationBundle build_rotation(const StripPoint& sp) {
  const Cplx p = phi(sp);
  const PolarForm pol = polar(sp);
  RotationBundle out;
  out.a = {p.real(), -p.imag(), p.imag(), p.real()};
  const double ct = std::cos(pol.arg.value());
  const double st = std::sin(pol.arg.value());
  out.b = {ct, -st, st, ct};
  out.rho = pol.modulus;
  out.fixed_point_det = -2.0 * (ct - 1.0);
  return out;
}

std::pair<double, double> apply_functional_rotation(const Cplx& phi_value,
                                                    double u, double v) {
  return {u * phi_value.real() - v * phi_value.imag(),
          u * phi_value.imag() + v * phi_value.real()};
}

std::pair<double, double> invert_functional_rotation(const Cplx& phi_value,
                                                     double x, double y) {
  const double rho_sq = std::norm(phi_value);
  if (rho_sq == 0.0)
    throw UndefinedPolarError("invert_functional_rotation: phi = 0");
  return {(x * phi_value.real() + y * phi_value.imag()) / rho_sq,
          (-x * phi_value.imag() + y * phi_value.real()) / rho_sq};
}

}  // namespace etastrip
