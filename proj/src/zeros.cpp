#include "etastrip/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "etastrip/gamma.hpp"

namespace etastrip {
namespace {

// Grid cells where |f| dips below this without a sign change get locally
// subdivided so near-tangent zero pairs are not skipped.
constexpr double kNearTangency = 1e-3;
constexpr int kSubdivideDepth = 8;

// Runs body(begin, end) over [0, n) split across jobs threads; the first
// exception thrown by any worker is re-thrown on the calling thread.
void run_partitioned(std::size_t n, int jobs,
                     const std::function<void(std::size_t, std::size_t)>& body) {
  const int n_jobs = std::max(1, jobs);
  if (n_jobs == 1 || n < 4) {
    body(0, n);
    return;
  }
  std::mutex mu;
  std::exception_ptr first_error;
  std::vector<std::thread> threads;
  const std::size_t chunk = (n + n_jobs - 1) / n_jobs;
  for (int j = 0; j < n_jobs; ++j) {
    const std::size_t b = std::min(n, static_cast<std::size_t>(j) * chunk);
    const std::size_t e = std::min(n, b + chunk);
    if (b >= e) continue;
    threads.emplace_back([&, b, e] {
      try {
        body(b, e);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& th : threads) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

void collect_brackets(const std::function<double(double)>& f, double lo, double flo,
                      double hi, double fhi, int depth, std::vector<Bracket>& out) {
  if (flo * fhi < 0.0) {
    out.emplace_back(lo, hi);
    return;
  }
  if (depth <= 0 || std::min(std::abs(flo), std::abs(fhi)) >= kNearTangency) return;
  const double mid = 0.5 * (lo + hi);
  if (mid <= lo || mid >= hi) return;
  const double fmid = f(mid);
  collect_brackets(f, lo, flo, mid, fmid, depth - 1, out);
  collect_brackets(f, mid, fmid, hi, fhi, depth - 1, out);
}

}  // namespace

void ScanConfig::validate() const {
  require_finite(t_lo, "ScanConfig");
  require_finite(t_hi, "ScanConfig");
  if (!(t_lo < t_hi)) throw DomainError("ScanConfig: requires t_lo < t_hi");
  if (!(step > 0.0)) throw DomainError("ScanConfig: requires step > 0");
  if (!(refine_tol > 0.0 && series_tol > 0.0))
    throw DomainError("ScanConfig: requires positive tolerances");
}

double hardy_like(double t, double tol) {
  require_finite(t, "hardy_like");
  const SeriesValue z = zeta_from_eta(Cplx(0.5, t), tol);
  const double theta = riemann_siegel_theta(t);
  const Cplx rotated = Cplx(std::cos(theta), std::sin(theta)) * z.value;
  if (std::abs(rotated.imag()) > 10.0 * tol)
    throw RealnessViolation("hardy_like: rotated value has imaginary part " +
                            std::to_string(rotated.imag()));
  return rotated.real();
}

std::vector<Bracket> scan(const ScanConfig& config, int jobs) {
  config.validate();
  std::vector<double> grid;
  for (std::size_t i = 0;; ++i) {
    const double t = config.t_lo + static_cast<double>(i) * config.step;
    if (t >= config.t_hi) break;
    grid.push_back(t);
  }
  grid.push_back(config.t_hi);

  std::vector<double> values(grid.size());
  run_partitioned(grid.size(), jobs, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      values[i] = hardy_like(grid[i], config.series_tol);
  });

  const auto f = [&](double t) { return hardy_like(t, config.series_tol); };
  // An exact zero on a grid point would confuse sign-change detection;
  // nudge such points off the node.
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (values[i] == 0.0) {
      grid[i] += config.step * 1e-6;
      values[i] = f(grid[i]);
    }
  }
  std::vector<Bracket> out;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i)
    collect_brackets(f, grid[i], values[i], grid[i + 1], values[i + 1],
                     kSubdivideDepth, out);
  return out;
}

double refine_root(const std::function<double(double)>& f, double lo, double hi,
                   double xtol) {
  double a = lo, b = hi;
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (fa * fb > 0.0)
    throw NoSignChangeError("refine: no sign change over the bracket");
  // Bisection with secant acceleration.  At most two consecutive secant
  // steps before a forced bisection, so the bracket width is guaranteed to
  // at least halve every third iteration.
  int secant_streak = 0;
  for (int iter = 0; iter < 200 && (b - a) > xtol; ++iter) {
    double m = 0.5 * (a + b);
    const double denom = fb - fa;
    if (secant_streak < 2 && denom != 0.0) {
      const double sec = a - fa * (b - a) / denom;
      const double margin = 0.01 * (b - a);
      if (sec > a + margin && sec < b - margin) {
        m = sec;
        ++secant_streak;
      } else {
        secant_streak = 0;
      }
    } else {
      secant_streak = 0;
    }
    const double fm = f(m);
    if (fm == 0.0) return m;
    if (fa * fm < 0.0) {
      b = m;
      fb = fm;
    } else {
      a = m;
      fa = fm;
    }
  }
  return 0.5 * (a + b);
}

double refine(const Bracket& bracket, double refine_tol, double series_tol) {
  if (!(refine_tol > 0.0)) throw DomainError("refine: requires refine_tol > 0");
  return refine_root([&](double t) { return hardy_like(t, series_tol); },
                     bracket.first, bracket.second, refine_tol);
}

ZeroRecord analyze_zero(double beta, double series_tol, double theta_tol) {
  const StripPoint sp(0.5, beta);
  ZeroRecord rec;
  rec.beta = beta;
  rec.eta_abs = std::abs(eta(sp.value(), series_tol).value);
  const OmegaMembership m = omega_membership(sp, series_tol);
  rec.omega_r1 = m.r1;
  rec.omega_r2 = m.r2;
  rec.theta = polar(sp).arg;
  rec.theta_nonzero = circular_distance(rec.theta, normalize_angle(0.0)) > theta_tol;
  rec.eq8_abs = std::abs(omega_residual(sp, series_tol).series.value);
  return rec;
}

std::vector<ZeroRecord> find_zeros(const ScanConfig& config, int jobs) {
  const auto brackets = scan(config, jobs);
  std::vector<ZeroRecord> records(brackets.size());
  run_partitioned(records.size(), jobs, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const double beta = refine(brackets[i], config.refine_tol, config.series_tol);
      records[i] = analyze_zero(beta, config.series_tol);
      records[i].bracket_lo = brackets[i].first;
      records[i].bracket_hi = brackets[i].second;
    }
  });
  std::sort(records.begin(), records.end(),
            [](const ZeroRecord& x, const ZeroRecord& y) { return x.beta < y.beta; });
  return records;
}

}  // namespace etastrip
