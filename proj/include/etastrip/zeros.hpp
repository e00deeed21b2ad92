#ifndef ETASTRIP_ZEROS_HPP
#define ETASTRIP_ZEROS_HPP

#include <functional>
#include <utility>
#include <vector>

#include "etastrip/funceq.hpp"

namespace etastrip {

struct ScanConfig {
  double t_lo = 0.0;
  double t_hi = 0.0;
  double step = 0.02;
  double refine_tol = 1e-9;
  double series_tol = 1e-10;
  void validate() const;
};

using Bracket = std::pair<double, double>;

// A refined critical-line zero with its membership and argument diagnostics.
struct ZeroRecord {
  double beta = 0.0;
  double eta_abs = 0.0;
  double omega_r1 = 0.0;
  double omega_r2 = 0.0;
  Angle theta;
  bool theta_nonzero = false;
  double eq8_abs = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
};

/// Re(e^{i theta_rs(t)} zeta(1/2 + it)); real up to series error, so its
/// sign changes bracket the critical-line zeros.  Throws RealnessViolation
/// if the imaginary part of the rotated value exceeds 10*tol.
double hardy_like(double t, double tol = kDefaultTol);

/// All sign-change brackets of hardy_like on the configured grid,
/// ascending; grid evaluation may be split over `jobs` threads without
/// changing the result.
std::vector<Bracket> scan(const ScanConfig& config, int jobs = 1);

/// Safeguarded bisection/secant refinement of a bracketed root of f.
/// Throws NoSignChangeError unless f changes sign over [lo, hi].
double refine_root(const std::function<double(double)>& f, double lo, double hi,
                   double xtol);

/// Refinement of a scan bracket on hardy_like.
double refine(const Bracket& bracket, double refine_tol,
              double series_tol = kDefaultTol);

/// Diagnostics for one refined ordinate.
ZeroRecord analyze_zero(double beta, double series_tol = kDefaultTol,
                        double theta_tol = kThetaNonzeroTol);

/// scan + refine + analyze, records in ascending beta.
std::vector<ZeroRecord> find_zeros(const ScanConfig& config, int jobs = 1);

}  // namespace etastrip

#endif
