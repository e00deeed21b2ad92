#include <cmath>

#include "etastrip/kernel.hpp"

namespace etastrip::kernels {

// Reference kernel.  Term formula is exp(-a*l), cos(b*l), sin(b*l) with
// plain (non-fused) products for the arguments; the SIMD kernels compute
// the arguments the same way so per-term differences come only from the
// transcendental approximations.
PairSums dirichlet_scalar(std::span<const double> w, std::span<const double> log_n,
                          double a, double b) {
  double sc = 0.0, cc = 0.0, ss = 0.0, cs = 0.0;
  const std::size_t n = w.size();
  for (std::size_t k = 0; k < n; ++k) {
    const double l = log_n[k];
    const double p = w[k] * std::exp(-a * l);
    neumaier_add(sc, cc, p * std::cos(b * l));
    neumaier_add(ss, cs, p * std::sin(b * l));
  }
  return {sc + cc, ss + cs};
}

PairSums dirichlet_diff_scalar(std::span<const double> w, std::span<const double> log_n,
                               double a1, double a2, double q, double b) {
  double sc = 0.0, cc = 0.0, ss = 0.0, cs = 0.0;
  const std::size_t n = w.size();
  for (std::size_t k = 0; k < n; ++k) {
    const double l = log_n[k];
    const double p = w[k] * (std::exp(-a1 * l) - q * std::exp(-a2 * l));
    neumaier_add(sc, cc, p * std::cos(b * l));
    neumaier_add(ss, cs, p * std::sin(b * l));
  }
  return {sc + cc, ss + cs};
}

extern const Backend kScalarBackend;
const Backend kScalarBackend = {"scalar", dirichlet_scalar, dirichlet_diff_scalar};

}  // namespace etastrip::kernels
