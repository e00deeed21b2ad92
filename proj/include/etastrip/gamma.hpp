#ifndef ETASTRIP_GAMMA_HPP
#define ETASTRIP_GAMMA_HPP

#include "etastrip/angle.hpp"

namespace etastrip {

/// Principal branch of log Gamma(z), continuous on Re z > 0.
/// exp(log_gamma(z)) == gamma(z) to ~1e-13 relative.
/// Throws DomainError for Re z <= 0 (callers reflect via gamma()).
Cplx log_gamma(const Cplx& z);

/// Gamma(z) on the plane; reflection formula for Re z < 1/2.
/// Throws PoleError at z in {0, -1, -2, ...}.
Cplx gamma(const Cplx& z);

/// Riemann-Siegel theta: Im log Gamma(1/4 + it/2) - (t/2) ln pi.
/// Continuous (not reduced mod 2*pi), odd, theta(0) = 0.
double riemann_siegel_theta(double t);

/// sin(pi*z) with the integer part of Re z reduced before multiplying by
/// pi, so accuracy does not degrade for large real parts.
Cplx sin_pi(const Cplx& z);

/// log(cosh x) without overflow: |x| + log1p(exp(-2|x|)) - ln 2.
double log_cosh(double x);

}  // namespace etastrip

#endif
