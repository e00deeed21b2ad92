#ifndef ETASTRIP_KERNEL_HPP
#define ETASTRIP_KERNEL_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace etastrip::kernels {

// Weighted Dirichlet-type sums shared by every series in the library:
//
//   cos_sum = sum_k w[k] * exp(-a * log_n[k]) * cos(b * log_n[k])
//   sin_sum = sum_k w[k] * exp(-a * log_n[k]) * sin(b * log_n[k])
//
// and the "diff" variant with exp(-a1*l) - q*exp(-a2*l) in place of the
// power factor.  Both use compensated (Neumaier) accumulation.  The scalar
// kernel is the reference semantics; SIMD variants must match it to a few
// ulp per term and are equivalence-tested against it.
struct PairSums {
  double cos_sum = 0.0;
  double sin_sum = 0.0;
};

struct Backend {
  const char* name;
  PairSums (*dirichlet)(std::span<const double> w, std::span<const double> log_n,
                        double a, double b);
  PairSums (*dirichlet_diff)(std::span<const double> w, std::span<const double> log_n,
                             double a1, double a2, double q, double b);
};

// The kernel selected at startup: the widest available SIMD variant, or
// the one named by ETASTRIP_KERNEL ("scalar", "avx2", "auto").  An
// unavailable request falls back to scalar with a note on stderr.
const Backend& active();

// Lookup by name ("scalar", "avx2"); nullptr when not compiled in or not
// supported by this CPU.  Used by the equivalence tests.
const Backend* find(std::string_view name);

// All backends usable on this machine, scalar first.
std::vector<const Backend*> available();

// Shared ln(k+1) table, k = 0 .. capacity-1; sized for the full term
// budget once at first use, so spans into it stay valid forever.
std::span<const double> log_table(std::size_t n);

// Largest term count the table (and hence any series) supports.
inline constexpr std::size_t kTermBudget = 2000;
// Coefficient arrays are zero-padded to this multiple so the SIMD kernels
// stay on their vector path; unpadded sizes still work via a scalar tail.
inline constexpr std::size_t kPad = 8;

inline std::size_t padded(std::size_t n) { return (n + kPad - 1) / kPad * kPad; }

inline void neumaier_add(double& sum, double& comp, double v) {
  const double t = sum + v;
  if (std::abs(sum) >= std::abs(v))
    comp += (sum - t) + v;
  else
    comp += (v - t) + sum;
  sum = t;
}

}  // namespace etastrip::kernels

#endif
