#include "etastrip/series.hpp"

#include <cfloat>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "etastrip/gamma.hpp"
#include "etastrip/kernel.hpp"

namespace etastrip {
namespace {

constexpr double kLn2 = 0.6931471805599453;
// ln(3 + sqrt 8), the geometric decay rate of the Chebyshev scheme.
constexpr double kLnQ = 1.762747174039086;

Cplx pow2(const Cplx& z) { return std::exp(z * kLn2); }

}  // namespace

StripPoint::StripPoint(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  require_finite(alpha, "StripPoint");
  require_finite(beta, "StripPoint");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw DomainError("StripPoint: requires 0 < alpha < 1");
}

namespace detail {

std::span<const double> acceleration_coefficients(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<std::vector<double>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    if (n < 1 || static_cast<std::size_t>(n) > kernels::kTermBudget)
      throw ConvergenceError("acceleration order outside the term budget");
    // d = T_n(3) ~ (3+sqrt8)^n overflows binary64 near n = 400; the
    // recurrence runs in long double (15-bit exponent on x86-64), which
    // holds it up to the full budget.
    if (n > 300 && LDBL_MAX_EXP < 16384)
      throw ConvergenceError("acceleration order needs extended-precision exponent range");
    auto w = std::make_unique<std::vector<double>>(kernels::padded(n), 0.0);
    long double d = std::pow(3.0L + std::sqrt(8.0L), static_cast<long double>(n));
    d = (d + 1.0L / d) / 2.0L;
    long double b = -1.0L;
    long double c = -d;
    for (int k = 0; k < n; ++k) {
      c = b - c;
      (*w)[static_cast<std::size_t>(k)] = static_cast<double>(c / d);
      b = (k + n) * (k - n) * b / ((k + 0.5L) * (k + 1.0L));
    }
    it = cache.emplace(n, std::move(w)).first;
  }
  return {it->second->data(), it->second->size()};
}

double scheme_bound(const Cplx& s, int terms) {
  // CVZ measure bound 2*(3+sqrt8)^{-n} * Gamma(alpha)/|Gamma(s)|, times the
  // (1 + |beta|/10) oscillation safety factor; validated against the
  // high-tolerance oracle in the tests.
  const double alpha = s.real();
  const double log_ratio = std::lgamma(alpha) - log_gamma(s).real();
  const double safety = 1.0 + std::abs(s.imag()) / 10.0;
  return 2.0 * safety * std::exp(log_ratio - terms * kLnQ);
}

TermPlan plan_terms(const Cplx& s, double tol) {
  const double alpha = s.real();
  const double log_ratio = std::lgamma(alpha) - log_gamma(s).real();
  const double safety = 1.0 + std::abs(s.imag()) / 10.0;
  const double need = (std::log(2.0 * safety / tol) + log_ratio) / kLnQ;
  int n = std::max(8, static_cast<int>(std::ceil(need))) + 6;
  if (static_cast<std::size_t>(n) > kernels::kTermBudget)
    throw ConvergenceError("eta: tolerance unreachable within the term budget");
  return {n, scheme_bound(s, n)};
}

}  // namespace detail

SeriesValue eta(const Cplx& s, double tol) {
  require_finite(s, "eta");
  if (!(s.real() > 0.0)) throw DomainError("eta: requires Re s > 0");
  if (!(tol > 0.0)) throw DomainError("eta: requires tol > 0");
  const auto plan = detail::plan_terms(s, tol);
  const auto w = detail::acceleration_coefficients(plan.terms);
  const auto ln = kernels::log_table(w.size());
  const auto sums = kernels::active().dirichlet(w, ln, s.real(), s.imag());
  // n^{-s} = n^{-alpha} (cos(beta ln n) - i sin(beta ln n))
  const Cplx value(sums.cos_sum, -sums.sin_sum);
  require_finite(value, "eta");
  return {value, plan.bound, plan.terms};
}

EtaComponents eta_components(const StripPoint& s, double tol) {
  if (!(tol > 0.0)) throw DomainError("eta_components: requires tol > 0");
  const Cplx sv = s.value();
  const Cplx sv1(1.0 - s.alpha(), s.beta());
  const auto plan_s = detail::plan_terms(sv, tol);
  const auto plan_1ms = detail::plan_terms(sv1, tol);
  const int n = std::max(plan_s.terms, plan_1ms.terms);
  const auto w = detail::acceleration_coefficients(n);
  const auto ln = kernels::log_table(w.size());
  const auto& backend = kernels::active();
  const auto sums_s = backend.dirichlet(w, ln, s.alpha(), s.beta());
  const auto sums_1ms = backend.dirichlet(w, ln, 1.0 - s.alpha(), s.beta());
  EtaComponents out;
  out.x = sums_s.cos_sum;
  out.y = -sums_s.sin_sum;
  out.u = sums_1ms.cos_sum;
  out.v = sums_1ms.sin_sum;
  out.err_x = out.err_y = detail::scheme_bound(sv, n);
  out.err_u = out.err_v = detail::scheme_bound(sv1, n);
  out.terms_used = n;
  return out;
}

SeriesValue zeta_from_eta(const Cplx& s, double tol) {
  require_finite(s, "zeta_from_eta");
  if (!(s.real() > 0.0)) throw DomainError("zeta_from_eta: requires Re s > 0");
  if (s == Cplx(1.0, 0.0)) throw PoleError("zeta_from_eta: pole at s = 1");
  const Cplx factor = 1.0 - pow2(1.0 - s);
  const double fabs_ = std::abs(factor);
  if (fabs_ < 1e-8) {
    if (std::abs(s - Cplx(1.0, 0.0)) < 1e-6)
      throw PoleError("zeta_from_eta: pole at s = 1");
    throw FactorZeroError("zeta_from_eta: 1 - 2^{1-s} vanishes at this point");
  }
  const SeriesValue e = eta(s, tol);
  const Cplx value = e.value / factor;
  require_finite(value, "zeta_from_eta");
  // factor is accurate to ~machine epsilon; fold its rounding into the bound.
  const double bound = (e.error_bound + 4.0 * DBL_EPSILON * std::abs(e.value)) / fabs_;
  return {value, bound, e.terms_used};
}

}  // namespace etastrip
