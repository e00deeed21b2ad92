#include "etastrip/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <limits>
#include <mutex>
#include <random>
#include <thread>

#include "json.hpp"

#include "etastrip/gamma.hpp"
#include "etastrip/kernel.hpp"
#include "etastrip/version.hpp"
#include "etastrip/zeros.hpp"

namespace etastrip {
namespace {

using ojson = nlohmann::ordered_json;

constexpr double kLn2 = 0.6931471805599453;
constexpr double kLnPi = 1.1447298858494002;
constexpr double kSqrtPi = 1.7724538509055160;
// Sentinel for "structurally failed" (e.g. wrong root count); JSON cannot
// carry infinities.
constexpr double kStructuralFailure = 9.9e99;

Cplx cis(double t) { return {std::cos(t), std::sin(t)}; }

double scaled_diff(const Cplx& lhs, const Cplx& rhs) {
  return std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
}

double relative_diff(const Cplx& lhs, const Cplx& rhs) {
  const double denom = std::abs(lhs);
  return denom > 0.0 ? std::abs(lhs - rhs) / denom : std::abs(lhs - rhs);
}

void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& body) {
  const int n_jobs = std::max(1, jobs);
  if (n_jobs == 1 || n < 16) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::mutex mu;
  std::exception_ptr first_error;
  std::vector<std::thread> threads;
  const std::size_t chunk = (n + n_jobs - 1) / n_jobs;
  for (int j = 0; j < n_jobs; ++j) {
    const std::size_t b = std::min(n, static_cast<std::size_t>(j) * chunk);
    const std::size_t e = std::min(n, b + chunk);
    if (b < e)
      threads.emplace_back([&, b, e] {
        try {
          for (std::size_t i = b; i < e; ++i) body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!first_error) first_error = std::current_exception();
        }
      });
  }
  for (auto& th : threads) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

struct PointOutcome {
  double residual = 0.0;
  bool ok = true;
  std::string error;
};

// Assembles an IdentityResult from per-point residuals computed in index
// order, so the outcome is independent of the thread count.
template <typename PointT, typename Fn>
IdentityResult evaluate_pointwise(IdentityId id, const std::vector<PointT>& grid,
                                  double threshold, int jobs, bool report_only,
                                  const Fn& residual_at,
                                  std::map<std::string, std::vector<double>>* extras = nullptr) {
  const IdentityInfo& info = identity_info(id);
  IdentityResult out;
  out.id = id;
  out.domain = info.grid == GridKind::BetaLine   ? "beta_line"
               : info.grid == GridKind::Strip    ? "strip"
               : info.grid == GridKind::XiStrip  ? "xi_strip"
                                                 : "interval";
  out.grid_size = grid.size();
  out.threshold = threshold;
  out.report_only = report_only;

  std::vector<PointOutcome> outcomes(grid.size());
  parallel_for(grid.size(), jobs, [&](std::size_t i) {
    try {
      outcomes[i].residual = residual_at(grid[i], i);
    } catch (const Error& e) {
      outcomes[i].ok = false;
      outcomes[i].error = e.what();
    }
  });

  for (std::size_t i = 0; i < grid.size(); ++i) {
    Cplx point;
    if constexpr (std::is_same_v<PointT, double>)
      point = Cplx(grid[i], 0.0);
    else
      point = grid[i].value();
    if (!outcomes[i].ok) {
      out.errors.push_back(out.domain + " point " + std::to_string(i) + ": " +
                           outcomes[i].error);
      if (report_only) out.point_residuals.push_back(kStructuralFailure);
      continue;
    }
    const double r = outcomes[i].residual;
    if (report_only) out.point_residuals.push_back(r);
    if (r > out.max_residual) {
      out.max_residual = r;
      out.worst_point = point;
    }
    if (r > threshold) out.failures.push_back({point, r});
  }
  if (extras) out.extras = std::move(*extras);
  return out;
}

IdentityResult run_theta_roots(const std::vector<double>& grid, double threshold) {
  IdentityResult out;
  out.id = IdentityId::THETA_ROOTS;
  out.domain = "interval";
  out.grid_size = grid.size();
  out.threshold = threshold;
  out.report_only = false;

  std::vector<double> found;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const double flo = riemann_siegel_theta(grid[i]);
    const double fhi = riemann_siegel_theta(grid[i + 1]);
    if (flo == 0.0) {
      found.push_back(grid[i]);
      continue;
    }
    if (flo * fhi < 0.0)
      found.push_back(refine_root(
          [](double t) { return riemann_siegel_theta(t); }, grid[i], grid[i + 1],
          1e-12));
  }
  std::sort(found.begin(), found.end());

  const double quoted = 17.8455995405;
  std::vector<double> expected;
  for (double r : {-quoted, 0.0, quoted})
    if (r >= grid.front() && r <= grid.back()) expected.push_back(r);

  if (found.size() != expected.size()) {
    out.max_residual = kStructuralFailure;
    out.errors.push_back("expected " + std::to_string(expected.size()) +
                         " roots, found " + std::to_string(found.size()));
    for (double r : found) out.failures.push_back({Cplx(r, 0.0), kStructuralFailure});
    return out;
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    const double r = std::abs(found[i] - expected[i]);
    if (r > out.max_residual) {
      out.max_residual = r;
      out.worst_point = Cplx(found[i], 0.0);
    }
    if (r > threshold) out.failures.push_back({Cplx(found[i], 0.0), r});
  }
  return out;
}

}  // namespace

const std::array<IdentityInfo, kIdentityCount>& identity_catalog() {
  static const std::array<IdentityInfo, kIdentityCount> table = {{
      {IdentityId::FUNC_EQ, "FUNC_EQ", GridKind::Strip, false, false},
      {IdentityId::PHI_CRIT, "PHI_CRIT", GridKind::BetaLine, false, false},
      {IdentityId::PI_POWER, "PI_POWER", GridKind::BetaLine, false, false},
      {IdentityId::TWO_RATIO, "TWO_RATIO", GridKind::BetaLine, false, false},
      {IdentityId::GAMMA_HALF, "GAMMA_HALF", GridKind::BetaLine, false, false},
      {IdentityId::GAMMA_AUX_COS, "GAMMA_AUX_COS", GridKind::BetaLine, false, false},
      {IdentityId::GAMMA_AUX_POLAR, "GAMMA_AUX_POLAR", GridKind::BetaLine, false, false},
      {IdentityId::GAMMA_AUX_DUP, "GAMMA_AUX_DUP", GridKind::XiStrip, false, false},
      {IdentityId::GAMMA_AUX_REFL, "GAMMA_AUX_REFL", GridKind::XiStrip, false, false},
      {IdentityId::ARG_SUM, "ARG_SUM", GridKind::BetaLine, true, true},
      {IdentityId::THETA_G, "THETA_G", GridKind::BetaLine, true, true},
      {IdentityId::THETA_INV, "THETA_INV", GridKind::BetaLine, false, true},
      {IdentityId::RHO_ONE, "RHO_ONE", GridKind::BetaLine, false, false},
      {IdentityId::OMEGA_CLOSED, "OMEGA_CLOSED", GridKind::Strip, false, false},
      {IdentityId::ODD_G, "ODD_G", GridKind::BetaLine, false, false},
      {IdentityId::ODD_THETA_RS, "ODD_THETA_RS", GridKind::BetaLine, false, false},
      {IdentityId::THETA_ROOTS, "THETA_ROOTS", GridKind::Interval, false, false},
  }};
  return table;
}

const IdentityInfo& identity_info(IdentityId id) {
  for (const auto& info : identity_catalog())
    if (info.id == id) return info;
  throw DomainError("unknown identity id");
}

IdentityId identity_from_name(std::string_view name) {
  for (const auto& info : identity_catalog())
    if (name == info.name) return info.id;
  throw DomainError("unknown identity name: " + std::string(name));
}

double Thresholds::for_identity(IdentityId id) const {
  switch (id) {
    case IdentityId::RHO_ONE:
      return rho_one;
    case IdentityId::ODD_G:
    case IdentityId::ODD_THETA_RS:
      return oddness;
    case IdentityId::THETA_ROOTS:
      return theta_roots;
    case IdentityId::ARG_SUM:
    case IdentityId::THETA_G:
    case IdentityId::THETA_INV:
      return angle_identity;
    default:
      return complex_identity;
  }
}

GridSpec default_grid_spec() {
  GridSpec spec;
  if (const char* env = std::getenv("ETASTRIP_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') spec.seed = static_cast<std::uint64_t>(v);
  }
  return spec;
}

std::vector<double> make_beta_grid(const GridSpec& spec) {
  std::vector<double> grid(spec.beta_points);
  const double span = spec.beta_hi - spec.beta_lo;
  for (std::size_t i = 0; i < spec.beta_points; ++i)
    grid[i] = spec.beta_lo +
              span * static_cast<double>(i) /
                  static_cast<double>(std::max<std::size_t>(1, spec.beta_points - 1));
  return grid;
}

std::vector<StripPoint> make_strip_grid(const GridSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> alpha_dist(0.05, 0.95);
  std::uniform_real_distribution<double> beta_dist(-60.0, 60.0);
  std::vector<StripPoint> grid;
  grid.reserve(spec.strip_points);
  for (std::size_t i = 0; i < spec.strip_points; ++i) {
    const double a = alpha_dist(rng);
    const double b = beta_dist(rng);
    grid.emplace_back(a, b);
  }
  return grid;
}

std::vector<StripPoint> make_xi_grid(const GridSpec& spec) {
  // Seed offset keeps the xi grid distinct from the strip grid while
  // remaining a pure function of the configured seed.
  std::mt19937_64 rng(spec.seed + 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> alpha_dist(0.05, 0.95);
  std::uniform_real_distribution<double> beta_dist(-30.0, 30.0);
  std::vector<StripPoint> grid;
  grid.reserve(spec.xi_points);
  for (std::size_t i = 0; i < spec.xi_points; ++i) {
    const double a = alpha_dist(rng);
    const double b = beta_dist(rng);
    grid.emplace_back(a, b);
  }
  return grid;
}

Cplx eta_euler_transform(const Cplx& s, int levels) {
  require_finite(s, "eta_euler_transform");
  if (!(s.real() > 0.0))
    throw DomainError("eta_euler_transform: requires Re s > 0");
  // Repeated averaging of partial sums (Euler transform in van
  // Wijngaarden form): numerically stable, geometric convergence.
  std::vector<Cplx> row(static_cast<std::size_t>(levels) + 1);
  Cplx partial(0.0, 0.0);
  for (int j = 0; j <= levels; ++j) {
    const Cplx term = std::pow(Cplx(static_cast<double>(j + 1), 0.0), -s);
    partial += (j % 2 == 0) ? term : -term;
    row[static_cast<std::size_t>(j)] = partial;
  }
  for (int k = levels; k >= 1; --k)
    for (int i = 0; i < k; ++i) row[i] = 0.5 * (row[i] + row[i + 1]);
  return row[0];
}

IdentityResult run_identity(IdentityId id, const std::vector<double>& grid,
                            double threshold, double series_tol, int jobs) {
  (void)series_tol;  // the beta-line identities are Gamma-backed, not series-backed
  const IdentityInfo& info = identity_info(id);
  if (info.grid == GridKind::Strip || info.grid == GridKind::XiStrip)
    throw DomainError(std::string(info.name) + ": needs a strip-point grid");
  if (id == IdentityId::THETA_ROOTS) return run_theta_roots(grid, threshold);

  switch (id) {
    case IdentityId::PHI_CRIT:
      return evaluate_pointwise(id, grid, threshold, jobs, false,
                                [](double b, std::size_t) {
                                  const StripPoint sp(0.5, b);
                                  return relative_diff(phi(sp), phi_critical(b));
                                });
    case IdentityId::PI_POWER:
      return evaluate_pointwise(id, grid, threshold, jobs, false,
                                [](double b, std::size_t) {
                                  const Cplx lhs = std::exp(Cplx(-0.5, b) * kLnPi);
                                  const Cplx rhs = cis(b * kLnPi) / kSqrtPi;
                                  return scaled_diff(lhs, rhs);
                                });
    case IdentityId::TWO_RATIO:
      return evaluate_pointwise(id, grid, threshold, jobs, false,
                                [](double b, std::size_t) {
                                  return scaled_diff(two_power_ratio(b),
                                                     two_power_ratio_closed(b));
                                });
    case IdentityId::GAMMA_HALF:
      return evaluate_pointwise(id, grid, threshold, jobs, false,
                                [](double b, std::size_t) {
                                  const Cplx direct = gamma(Cplx(0.5, -b));
                                  return relative_diff(direct, gamma_half_line(b));
                                });
    case IdentityId::GAMMA_AUX_COS:
      return evaluate_pointwise(
          id, grid, threshold, jobs, false, [](double t, std::size_t) {
            const Cplx lhs = std::cos(Cplx(0.25 * kPi, 0.5 * kPi * t));
            const double mod = std::exp(0.5 * log_cosh(kPi * t)) / std::sqrt(2.0);
            const Cplx rhs = mod * cis(-std::atan(std::tanh(0.5 * kPi * t)));
            return scaled_diff(lhs, rhs);
          });
    case IdentityId::GAMMA_AUX_POLAR:
      return evaluate_pointwise(
          id, grid, threshold, jobs, false, [](double t, std::size_t) {
            const Cplx lhs = gamma(Cplx(0.25, 0.5 * t));
            const Cplx rhs = std::abs(lhs) *
                             cis(riemann_siegel_theta(t) + 0.5 * t * kLnPi);
            return scaled_diff(lhs, rhs);
          });
    case IdentityId::ARG_SUM: {
      std::map<std::string, std::vector<double>> extras;
      extras["varpi_arctan2"].resize(grid.size());
      extras["varpi_arctan"].resize(grid.size());
      auto& v2 = extras["varpi_arctan2"];
      auto& v1 = extras["varpi_arctan"];
      return evaluate_pointwise(
          id, grid, threshold, jobs, true,
          [&](double b, std::size_t i) {
            const ArgBreakdown bd = arg_breakdown(b);
            v2[i] = bd.varpi.value();
            v1[i] = varpi_arctan_form(b);
            return circular_distance(bd.theta_sum, polar(StripPoint(0.5, b)).arg);
          },
          &extras);
    }
    case IdentityId::THETA_G: {
      std::map<std::string, std::vector<double>> extras;
      extras["varpi_arctan2"].resize(grid.size());
      extras["varpi_arctan"].resize(grid.size());
      extras["scalar_branch_residual"].resize(grid.size());
      auto& v2 = extras["varpi_arctan2"];
      auto& v1 = extras["varpi_arctan"];
      auto& pb = extras["scalar_branch_residual"];
      return evaluate_pointwise(
          id, grid, threshold, jobs, true,
          [&](double b, std::size_t i) {
            const Angle theta = polar(StripPoint(0.5, b)).arg;
            v2[i] = principal_arg(two_power_ratio(b)).value();
            v1[i] = varpi_arctan_form(b);
            const double scalar_branch_theta =
                2.0 * (g_arctan_form(b) - riemann_siegel_theta(b));
            pb[i] = circular_distance(normalize_angle(scalar_branch_theta), theta);
            return circular_distance(theta_from_g(b), theta);
          },
          &extras);
    }
    case IdentityId::THETA_INV:
      // The halved form "g - theta/2 = theta_rs" is only defined mod pi
      // once theta is reduced; comparing it doubled keeps the congruence
      // in the mod-2pi class the angle metric expects.
      return evaluate_pointwise(
          id, grid, threshold, jobs, false, [](double b, std::size_t) {
            const double lhs = 2.0 * g_of(b) - theta_from_g(b).value();
            return circular_distance(lhs, 2.0 * riemann_siegel_theta(b));
          });
    case IdentityId::RHO_ONE:
      return evaluate_pointwise(id, grid, threshold, jobs, false,
                                [](double b, std::size_t) {
                                  const StripPoint sp(0.5, b);
                                  return std::abs(std::abs(phi(sp)) - 1.0);
                                });
    case IdentityId::ODD_G:
      return evaluate_pointwise(id, grid, threshold, jobs, false,
                                [](double b, std::size_t) {
                                  return std::abs(g_of(b) + g_of(-b));
                                });
    case IdentityId::ODD_THETA_RS:
      return evaluate_pointwise(id, grid, threshold, jobs, false,
                                [](double b, std::size_t) {
                                  return std::abs(riemann_siegel_theta(b) +
                                                  riemann_siegel_theta(-b));
                                });
    default:
      throw DomainError(std::string(info.name) + ": unsupported grid kind");
  }
}

IdentityResult run_identity(IdentityId id, const std::vector<StripPoint>& grid,
                            double threshold, double series_tol, int jobs) {
  const IdentityInfo& info = identity_info(id);
  switch (id) {
    case IdentityId::FUNC_EQ:
      return evaluate_pointwise(
          id, grid, threshold, jobs, false, [&](const StripPoint& sp, std::size_t) {
            const Cplx lhs = eta(sp.value(), series_tol).value;
            const Cplx one_minus_s(1.0 - sp.alpha(), -sp.beta());
            const Cplx rhs = phi(sp) * eta(one_minus_s, series_tol).value;
            return scaled_diff(lhs, rhs);
          });
    case IdentityId::GAMMA_AUX_DUP:
      return evaluate_pointwise(
          id, grid, threshold, jobs, false, [](const StripPoint& sp, std::size_t) {
            const Cplx xi = sp.value();
            const Cplx lhs = gamma(xi) * gamma(xi + 0.5);
            const Cplx rhs =
                std::exp((1.0 - 2.0 * xi) * kLn2) * kSqrtPi * gamma(2.0 * xi);
            return scaled_diff(lhs, rhs);
          });
    case IdentityId::GAMMA_AUX_REFL:
      return evaluate_pointwise(
          id, grid, threshold, jobs, false, [](const StripPoint& sp, std::size_t) {
            const Cplx xi = sp.value();
            const Cplx product = gamma(xi) * gamma(1.0 - xi) * sin_pi(xi) / kPi;
            return std::abs(product - 1.0);
          });
    case IdentityId::OMEGA_CLOSED:
      return evaluate_pointwise(
          id, grid, threshold, jobs, false, [&](const StripPoint& sp, std::size_t) {
            const OmegaResidual r = omega_residual(sp, series_tol);
            return std::abs(r.series.value - r.closed_form);
          });
    default:
      throw DomainError(std::string(info.name) + ": needs a real grid");
  }
}

VerificationReport run_all(const GridSpec& spec, const Thresholds& thresholds,
                           const std::vector<IdentityId>& which, int jobs) {
  VerificationReport report;
  report.version = kVersion;
  report.kernel = kernels::active().name;
  report.seed = spec.seed;
  report.config = spec;
  report.thresholds = thresholds;
  {
    std::time_t now = std::time(nullptr);
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    char buffer[32];
    std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    report.timestamp = buffer;
  }

  const auto beta_grid = make_beta_grid(spec);
  const auto strip_grid = make_strip_grid(spec);
  const auto xi_grid = make_xi_grid(spec);
  std::vector<double> roots_grid;
  for (std::size_t i = 0;; ++i) {
    const double t = spec.roots_lo + static_cast<double>(i) * spec.roots_step;
    if (t >= spec.roots_hi) break;
    roots_grid.push_back(t);
  }
  roots_grid.push_back(spec.roots_hi);

  std::vector<StripPoint> omega_grid(
      strip_grid.begin(),
      strip_grid.begin() +
          static_cast<std::ptrdiff_t>(std::min(spec.omega_points, strip_grid.size())));

  const bool run_everything = which.empty();
  const auto wanted = [&](IdentityId id) {
    return run_everything ||
           std::find(which.begin(), which.end(), id) != which.end();
  };

  for (const auto& info : identity_catalog()) {
    if (!wanted(info.id)) continue;
    const double threshold = thresholds.for_identity(info.id);
    IdentityResult result;
    switch (info.grid) {
      case GridKind::BetaLine:
        result = run_identity(info.id, beta_grid, threshold, spec.series_tol, jobs);
        break;
      case GridKind::Interval:
        result = run_identity(info.id, roots_grid, threshold, spec.series_tol, jobs);
        break;
      case GridKind::Strip:
        result = run_identity(
            info.id, info.id == IdentityId::OMEGA_CLOSED ? omega_grid : strip_grid,
            threshold, spec.series_tol, jobs);
        break;
      case GridKind::XiStrip:
        result = run_identity(info.id, xi_grid, threshold, spec.series_tol, jobs);
        break;
    }
    report.results.push_back(std::move(result));
  }

  // Quoted figures, re-measured (never pass/fail; see THETA_G notes).
  report.figures.eta_half_computed = eta(Cplx(0.5, 0.0), 1e-12).value.real();
  report.figures.eta_half_independent = eta_euler_transform(Cplx(0.5, 0.0)).real();
  report.figures.g_arctan2_branch = g_of(report.figures.g_argument);
  report.figures.g_scalar_arctan = g_arctan_form(report.figures.g_argument);
  report.figures.theta_root_computed = refine_root(
      [](double t) { return riemann_siegel_theta(t); }, 17.8, 17.9, 1e-12);

  report.overall_pass = true;
  for (const auto& r : report.results)
    if (!r.passed()) report.overall_pass = false;
  return report;
}

namespace {

ojson cplx_to_json(const Cplx& z) {
  return ojson{{"re", z.real()}, {"im", z.imag()}};
}

Cplx cplx_from_json(const ojson& j) {
  return {j.at("re").get<double>(), j.at("im").get<double>()};
}

const char* id_name(IdentityId id) { return identity_info(id).name; }

}  // namespace

std::string report_to_json(const VerificationReport& report) {
  ojson j;
  j["tool"] = report.tool;
  j["version"] = report.version;
  j["timestamp"] = report.timestamp;
  j["kernel"] = report.kernel;
  j["seed"] = report.seed;
  j["config"] = ojson{{"beta_points", report.config.beta_points},
                      {"beta_lo", report.config.beta_lo},
                      {"beta_hi", report.config.beta_hi},
                      {"strip_points", report.config.strip_points},
                      {"xi_points", report.config.xi_points},
                      {"omega_points", report.config.omega_points},
                      {"roots_lo", report.config.roots_lo},
                      {"roots_hi", report.config.roots_hi},
                      {"roots_step", report.config.roots_step},
                      {"seed", report.config.seed},
                      {"series_tol", report.config.series_tol}};
  j["thresholds"] = ojson{{"complex_identity", report.thresholds.complex_identity},
                          {"angle_identity", report.thresholds.angle_identity},
                          {"rho_one", report.thresholds.rho_one},
                          {"oddness", report.thresholds.oddness},
                          {"theta_roots", report.thresholds.theta_roots}};
  j["identities"] = ojson::array();
  for (const auto& r : report.results) {
    ojson jr;
    jr["id"] = id_name(r.id);
    jr["domain"] = r.domain;
    jr["grid_size"] = r.grid_size;
    jr["threshold"] = r.threshold;
    jr["report_only"] = r.report_only;
    jr["max_residual"] = r.max_residual;
    jr["worst_point"] = cplx_to_json(r.worst_point);
    jr["pass"] = r.passed();
    jr["failures"] = ojson::array();
    for (const auto& f : r.failures)
      jr["failures"].push_back(
          ojson{{"point", cplx_to_json(f.point)}, {"residual", f.residual}});
    jr["point_residuals"] = r.point_residuals;
    jr["extras"] = ojson::object();
    for (const auto& [key, values] : r.extras) jr["extras"][key] = values;
    jr["errors"] = r.errors;
    j["identities"].push_back(std::move(jr));
  }
  j["quoted_figures"] =
      ojson{{"eta_half_computed", report.figures.eta_half_computed},
            {"eta_half_quoted", report.figures.eta_half_quoted},
            {"eta_half_independent", report.figures.eta_half_independent},
            {"eta_half_delta_quoted",
             report.figures.eta_half_computed - report.figures.eta_half_quoted},
            {"g_argument", report.figures.g_argument},
            {"g_arctan2_branch", report.figures.g_arctan2_branch},
            {"g_scalar_arctan", report.figures.g_scalar_arctan},
            {"g_quoted", report.figures.g_quoted},
            {"g_delta_quoted",
             report.figures.g_scalar_arctan - report.figures.g_quoted},
            {"theta_root_computed", report.figures.theta_root_computed},
            {"theta_root_quoted", report.figures.theta_root_quoted}};
  j["overall"] = report.overall_pass ? "pass" : "fail";
  return j.dump(2) + "\n";
}

VerificationReport report_from_json(const std::string& text) {
  const ojson j = ojson::parse(text);
  VerificationReport report;
  report.tool = j.at("tool").get<std::string>();
  report.version = j.at("version").get<std::string>();
  report.timestamp = j.at("timestamp").get<std::string>();
  report.kernel = j.at("kernel").get<std::string>();
  report.seed = j.at("seed").get<std::uint64_t>();
  const auto& jc = j.at("config");
  report.config.beta_points = jc.at("beta_points").get<std::size_t>();
  report.config.beta_lo = jc.at("beta_lo").get<double>();
  report.config.beta_hi = jc.at("beta_hi").get<double>();
  report.config.strip_points = jc.at("strip_points").get<std::size_t>();
  report.config.xi_points = jc.at("xi_points").get<std::size_t>();
  report.config.omega_points = jc.at("omega_points").get<std::size_t>();
  report.config.roots_lo = jc.at("roots_lo").get<double>();
  report.config.roots_hi = jc.at("roots_hi").get<double>();
  report.config.roots_step = jc.at("roots_step").get<double>();
  report.config.seed = jc.at("seed").get<std::uint64_t>();
  report.config.series_tol = jc.at("series_tol").get<double>();
  const auto& jt = j.at("thresholds");
  report.thresholds.complex_identity = jt.at("complex_identity").get<double>();
  report.thresholds.angle_identity = jt.at("angle_identity").get<double>();
  report.thresholds.rho_one = jt.at("rho_one").get<double>();
  report.thresholds.oddness = jt.at("oddness").get<double>();
  report.thresholds.theta_roots = jt.at("theta_roots").get<double>();
  for (const auto& jr : j.at("identities")) {
    IdentityResult r;
    r.id = identity_from_name(jr.at("id").get<std::string>());
    r.domain = jr.at("domain").get<std::string>();
    r.grid_size = jr.at("grid_size").get<std::size_t>();
    r.threshold = jr.at("threshold").get<double>();
    r.report_only = jr.at("report_only").get<bool>();
    r.max_residual = jr.at("max_residual").get<double>();
    r.worst_point = cplx_from_json(jr.at("worst_point"));
    for (const auto& jf : jr.at("failures"))
      r.failures.push_back(
          {cplx_from_json(jf.at("point")), jf.at("residual").get<double>()});
    r.point_residuals = jr.at("point_residuals").get<std::vector<double>>();
    for (const auto& [key, values] : jr.at("extras").items())
      r.extras[key] = values.get<std::vector<double>>();
    r.errors = jr.at("errors").get<std::vector<std::string>>();
    report.results.push_back(std::move(r));
  }
  const auto& jf = j.at("quoted_figures");
  report.figures.eta_half_computed = jf.at("eta_half_computed").get<double>();
  report.figures.eta_half_quoted = jf.at("eta_half_quoted").get<double>();
  report.figures.eta_half_independent = jf.at("eta_half_independent").get<double>();
  report.figures.g_argument = jf.at("g_argument").get<double>();
  report.figures.g_arctan2_branch = jf.at("g_arctan2_branch").get<double>();
  report.figures.g_scalar_arctan = jf.at("g_scalar_arctan").get<double>();
  report.figures.g_quoted = jf.at("g_quoted").get<double>();
  report.figures.theta_root_computed = jf.at("theta_root_computed").get<double>();
  report.figures.theta_root_quoted = jf.at("theta_root_quoted").get<double>();
  report.overall_pass = j.at("overall").get<std::string>() == "pass";
  return report;
}

}  // namespace etastrip
