#ifndef ETASTRIP_SERIES_HPP
#define ETASTRIP_SERIES_HPP

#include <span>

#include "etastrip/angle.hpp"

namespace etastrip {

inline constexpr double kDefaultTol = 1e-10;

// A validated point of the open critical strip 0 < Re s < 1.
class StripPoint {
 public:
  StripPoint(double alpha, double beta);
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  Cplx value() const { return {alpha_, beta_}; }

 private:
  double alpha_;
  double beta_;
};

// A truncated-series result with its a-posteriori error bound.
struct SeriesValue {
  Cplx value;
  double error_bound = 0.0;
  int terms_used = 0;
};

// The four real component series: eta(s) = x + iy, eta(1-s) = u + iv.
struct EtaComponents {
  double x = 0.0, y = 0.0, u = 0.0, v = 0.0;
  double err_x = 0.0, err_y = 0.0, err_u = 0.0, err_v = 0.0;
  int terms_used = 0;
};

/// Dirichlet eta via Chebyshev-accelerated alternating summation.
/// Valid for Re s > 0; error_bound <= tol on success.
SeriesValue eta(const Cplx& s, double tol = kDefaultTol);

/// The component series of eta(s) and eta(1-s) at a strip point, all four
/// accelerated with a shared term count.
EtaComponents eta_components(const StripPoint& s, double tol = kDefaultTol);

/// zeta(s) = eta(s) / (1 - 2^{1-s}) with the propagated error bound.
/// PoleError at s = 1; FactorZeroError where the conversion factor
/// vanishes (s = 1 + 2*pi*i*k/ln 2, k != 0).
SeriesValue zeta_from_eta(const Cplx& s, double tol = kDefaultTol);

namespace detail {

// Normalized signed acceleration coefficients w_k = (-1)^k c_k / d for the
// Chebyshev scheme at order n, zero-padded to a kernel-friendly length.
// Cached per n; the returned span stays valid for the process lifetime.
std::span<const double> acceleration_coefficients(int n);

// Smallest term count whose a-priori bound meets tol at s, and that bound.
// Throws ConvergenceError when the budget cannot reach tol.
struct TermPlan {
  int terms;
  double bound;
};
TermPlan plan_terms(const Cplx& s, double tol);

// The a-priori scheme bound at a given order (used by the omega series,
// which combines two exponents).
double scheme_bound(const Cplx& s, int terms);

}  // namespace detail

}  // namespace etastrip

#endif
