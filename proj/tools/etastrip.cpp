// etastrip command-line front end: eval / scan / verify.

#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "etastrip/gamma.hpp"
#include "etastrip/kernel.hpp"
#include "etastrip/verify.hpp"
#include "etastrip/version.hpp"
#include "etastrip/zeros.hpp"

namespace {

using etastrip::Cplx;
using ojson = nlohmann::ordered_json;

// Complex literal grammar: [-]?digits[.digits]?[+-]digits[.digits]?i
Cplx parse_complex(const std::string& text) {
  static const std::regex grammar(R"(^(-?\d+(?:\.\d+)?)([+-]\d+(?:\.\d+)?)i$)");
  std::smatch m;
  if (!std::regex_match(text, m, grammar))
    throw etastrip::DomainError("complex literal must match a+bi, got '" + text + "'");
  return {std::stod(m[1].str()), std::stod(m[2].str())};
}

std::string format_angle(double radians) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.12g", radians);
  return buffer;
}

std::string format_real(double x) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", x);
  return buffer;
}

void atomic_write(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw etastrip::Error("cannot open temporary file " + tmp);
    out << content;
    out.flush();
    if (!out) throw etastrip::Error("write failed for " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw etastrip::Error("atomic rename failed for " + path);
  }
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
  } else {
    atomic_write(out_path, content);
    std::cerr << "wrote " << out_path << "\n";
  }
}

int default_jobs() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// ---------------------------------------------------------------- eval --

int run_eval(const std::string& s_text, const std::string& what, double tol,
             const std::string& format, const std::string& out_path) {
  const Cplx s = parse_complex(s_text);
  std::ostringstream os;

  if (what == "eta" || what == "zeta") {
    const etastrip::SeriesValue v =
        what == "eta" ? etastrip::eta(s, tol) : etastrip::zeta_from_eta(s, tol);
    if (format == "json") {
      ojson j{{"what", what},
              {"s", {{"re", s.real()}, {"im", s.imag()}}},
              {"value", {{"re", v.value.real()}, {"im", v.value.imag()}}},
              {"error_bound", v.error_bound},
              {"terms_used", v.terms_used}};
      os << j.dump(2) << "\n";
    } else if (format == "csv") {
      os << "re,im,error_bound,terms_used\n"
         << format_real(v.value.real()) << "," << format_real(v.value.imag()) << ","
         << format_real(v.error_bound) << "," << v.terms_used << "\n";
    } else {
      os << what << "(" << s_text << ") = " << format_real(v.value.real())
         << (v.value.imag() < 0 ? " - " : " + ")
         << format_real(std::abs(v.value.imag())) << "i\n"
         << "error_bound = " << format_real(v.error_bound)
         << ", terms_used = " << v.terms_used << "\n";
    }
  } else if (what == "phi") {
    const etastrip::StripPoint sp(s.real(), s.imag());
    const Cplx p = etastrip::phi(sp);
    if (format == "json") {
      ojson j{{"what", "phi"},
              {"s", {{"re", s.real()}, {"im", s.imag()}}},
              {"value", {{"re", p.real()}, {"im", p.imag()}}}};
      os << j.dump(2) << "\n";
    } else if (format == "csv") {
      os << "re,im\n" << format_real(p.real()) << "," << format_real(p.imag()) << "\n";
    } else {
      os << "phi(" << s_text << ") = " << format_real(p.real())
         << (p.imag() < 0 ? " - " : " + ") << format_real(std::abs(p.imag())) << "i\n";
    }
  } else if (what == "polar") {
    const etastrip::StripPoint sp(s.real(), s.imag());
    const etastrip::PolarForm p = etastrip::polar(sp);
    if (format == "json") {
      ojson j{{"what", "polar"},
              {"s", {{"re", s.real()}, {"im", s.imag()}}},
              {"rho", p.modulus},
              {"theta", p.arg.value()}};
      os << j.dump(2) << "\n";
    } else if (format == "csv") {
      os << "rho,theta\n"
         << format_real(p.modulus) << "," << format_angle(p.arg.value()) << "\n";
    } else {
      os << "rho = " << format_real(p.modulus)
         << ", theta = " << format_angle(p.arg.value()) << "\n";
    }
  } else if (what == "omega") {
    const etastrip::StripPoint sp(s.real(), s.imag());
    const etastrip::OmegaMembership m = etastrip::omega_membership(sp, tol);
    const etastrip::OmegaResidual r = etastrip::omega_residual(sp, tol);
    if (format == "json") {
      ojson j{{"what", "omega"},
              {"s", {{"re", s.real()}, {"im", s.imag()}}},
              {"r1", m.r1},
              {"r2", m.r2},
              {"member", m.member},
              {"series", {{"re", r.series.value.real()}, {"im", r.series.value.imag()}}},
              {"closed_form", {{"re", r.closed_form.real()}, {"im", r.closed_form.imag()}}},
              {"eq8_abs", std::abs(r.series.value)},
              {"rho_sq", r.rho_sq},
              {"error_bound", r.series.error_bound}};
      os << j.dump(2) << "\n";
    } else if (format == "csv") {
      os << "r1,r2,member,series_re,series_im,closed_re,closed_im,eq8_abs\n"
         << format_real(m.r1) << "," << format_real(m.r2) << ","
         << (m.member ? "true" : "false") << "," << format_real(r.series.value.real())
         << "," << format_real(r.series.value.imag()) << ","
         << format_real(r.closed_form.real()) << ","
         << format_real(r.closed_form.imag()) << ","
         << format_real(std::abs(r.series.value)) << "\n";
    } else {
      os << "omega membership: r1 = " << format_real(m.r1)
         << ", r2 = " << format_real(m.r2) << ", member = "
         << (m.member ? "true" : "false") << "\n"
         << "residual series = " << format_real(r.series.value.real())
         << (r.series.value.imag() < 0 ? " - " : " + ")
         << format_real(std::abs(r.series.value.imag())) << "i (|.| = "
         << format_real(std::abs(r.series.value)) << ")\n"
         << "closed form    = " << format_real(r.closed_form.real())
         << (r.closed_form.imag() < 0 ? " - " : " + ")
         << format_real(std::abs(r.closed_form.imag())) << "i\n";
    }
  } else if (what == "breakdown") {
    const double beta = s.imag();
    const etastrip::ArgBreakdown bd = etastrip::arg_breakdown(beta);
    const double tg = etastrip::theta_from_g(beta).value();
    const double gp = etastrip::g_arctan_form(beta);
    if (format == "json") {
      ojson j{{"what", "breakdown"},
              {"beta", beta},
              {"varpi", bd.varpi.value()},
              {"phi_arg", bd.phi_arg.value()},
              {"psi", bd.psi},
              {"g", bd.g},
              {"theta_rs", bd.theta_rs},
              {"theta_sum", bd.theta_sum.value()},
              {"theta_from_g", tg},
              {"g_arctan_form", gp}};
      os << j.dump(2) << "\n";
    } else if (format == "csv") {
      os << "varpi,phi_arg,psi,g,theta_rs,theta_sum,theta_from_g,g_arctan_form\n"
         << format_angle(bd.varpi.value()) << "," << format_angle(bd.phi_arg.value())
         << "," << format_real(bd.psi) << "," << format_real(bd.g) << ","
         << format_real(bd.theta_rs) << "," << format_angle(bd.theta_sum.value())
         << "," << format_angle(tg) << "," << format_real(gp) << "\n";
    } else {
      os << "beta = " << format_real(beta) << "\n"
         << "varpi = " << format_angle(bd.varpi.value()) << "\n"
         << "phi_arg = " << format_angle(bd.phi_arg.value()) << "\n"
         << "psi = " << format_real(bd.psi) << "\n"
         << "g = " << format_real(bd.g) << " (scalar arctan branch "
         << format_real(gp) << ")\n"
         << "theta_rs = " << format_real(bd.theta_rs) << "\n"
         << "theta_sum = " << format_angle(bd.theta_sum.value()) << "\n"
         << "theta_from_g = " << format_angle(tg) << "\n";
    }
  } else {
    throw etastrip::DomainError("unknown eval target '" + what + "'");
  }

  emit(out_path, os.str());
  return 0;
}

// ---------------------------------------------------------------- scan --

std::string zero_record_csv(const std::vector<etastrip::ZeroRecord>& records) {
  std::ostringstream os;
  os << "beta,eta_abs,omega_r1,omega_r2,theta,theta_nonzero,eq8_abs,bracket_lo,bracket_hi\n";
  for (const auto& z : records) {
    os << format_real(z.beta) << "," << format_real(z.eta_abs) << ","
       << format_real(z.omega_r1) << "," << format_real(z.omega_r2) << ","
       << format_angle(z.theta.value()) << "," << (z.theta_nonzero ? "true" : "false")
       << "," << format_real(z.eq8_abs) << "," << format_real(z.bracket_lo) << ","
       << format_real(z.bracket_hi) << "\n";
  }
  return os.str();
}

int run_scan(const etastrip::ScanConfig& config, const std::string& format,
             const std::string& out_path, int jobs) {
  const auto records = etastrip::find_zeros(config, jobs);
  std::ostringstream os;
  if (format == "json") {
    ojson j{{"t_lo", config.t_lo},        {"t_hi", config.t_hi},
            {"step", config.step},        {"refine_tol", config.refine_tol},
            {"series_tol", config.series_tol}, {"count", records.size()}};
    j["zeros"] = ojson::array();
    for (const auto& z : records) {
      j["zeros"].push_back(ojson{{"beta", z.beta},
                                 {"eta_abs", z.eta_abs},
                                 {"omega_r1", z.omega_r1},
                                 {"omega_r2", z.omega_r2},
                                 {"theta", z.theta.value()},
                                 {"theta_nonzero", z.theta_nonzero},
                                 {"eq8_abs", z.eq8_abs},
                                 {"bracket_lo", z.bracket_lo},
                                 {"bracket_hi", z.bracket_hi}});
    }
    os << j.dump(2) << "\n";
  } else if (format == "csv") {
    os << zero_record_csv(records);
    std::cerr << "scan [" << config.t_lo << ", " << config.t_hi << "]: "
              << records.size() << " zeros\n";
  } else {
    for (const auto& z : records) {
      os << "beta = " << format_real(z.beta) << "  |eta| = " << format_real(z.eta_abs)
         << "  r1 = " << format_real(z.omega_r1) << "  r2 = " << format_real(z.omega_r2)
         << "  theta = " << format_angle(z.theta.value())
         << "  theta_nonzero = " << (z.theta_nonzero ? "true" : "false")
         << "  |eq8| = " << format_real(z.eq8_abs) << "  bracket = ["
         << format_real(z.bracket_lo) << ", " << format_real(z.bracket_hi) << "]\n";
    }
    os << "scan [" << config.t_lo << ", " << config.t_hi << "]: found "
       << records.size() << " zeros\n";
  }
  emit(out_path, os.str());
  return 0;
}

// -------------------------------------------------------------- verify --

int run_verify(const std::vector<std::string>& identity_names,
               const etastrip::GridSpec& spec, const std::string& format,
               const std::string& out_path, int jobs) {
  std::vector<etastrip::IdentityId> which;
  bool all = identity_names.empty();
  for (const auto& name : identity_names) {
    if (name == "all") {
      all = true;
      continue;
    }
    which.push_back(etastrip::identity_from_name(name));
  }
  if (all) which.clear();

  const etastrip::VerificationReport report =
      etastrip::run_all(spec, etastrip::Thresholds{}, which, jobs);

  std::ostringstream os;
  if (format == "json") {
    os << etastrip::report_to_json(report);
  } else if (format == "csv") {
    os << "id,domain,grid_size,threshold,report_only,max_residual,worst_re,worst_im,"
          "failures,pass\n";
    for (const auto& r : report.results) {
      os << etastrip::identity_info(r.id).name << "," << r.domain << ","
         << r.grid_size << "," << format_real(r.threshold) << ","
         << (r.report_only ? "true" : "false") << "," << format_real(r.max_residual)
         << "," << format_real(r.worst_point.real()) << ","
         << format_real(r.worst_point.imag()) << "," << r.failures.size() << ","
         << (r.passed() ? "true" : "false") << "\n";
    }
  } else {
    for (const auto& r : report.results) {
      os << etastrip::identity_info(r.id).name;
      if (r.report_only) os << " (report-only)";
      os << ": max_residual = " << format_real(r.max_residual) << " over "
         << r.grid_size << " points, threshold " << format_real(r.threshold) << " -> "
         << (r.passed() ? "pass" : "FAIL") << "\n";
      for (const auto& e : r.errors) os << "    error: " << e << "\n";
    }
    os << "quoted figures: eta(1/2) computed " << format_real(report.figures.eta_half_computed)
       << " vs quoted " << format_real(report.figures.eta_half_quoted)
       << " (independent route " << format_real(report.figures.eta_half_independent)
       << ")\n"
       << "                g(" << format_real(report.figures.g_argument) << ") = "
       << format_real(report.figures.g_scalar_arctan) << " (arctan2 branch "
       << format_real(report.figures.g_arctan2_branch) << ") vs quoted "
       << format_real(report.figures.g_quoted) << "\n"
       << "                theta root " << format_real(report.figures.theta_root_computed)
       << " vs quoted " << format_real(report.figures.theta_root_quoted) << "\n";
    os << "overall: " << (report.overall_pass ? "pass" : "FAIL") << "\n";
  }
  emit(out_path, os.str());
  return report.overall_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dirichlet eta / functional-equation verification toolkit"};
  app.set_version_flag("--version", std::string("etastrip ") + etastrip::kVersion);
  app.require_subcommand(1);

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "evaluate one quantity at a point");
  std::string eval_s;
  std::string eval_what = "eta";
  double eval_tol = etastrip::kDefaultTol;
  std::string eval_format = "human";
  std::string eval_out;
  eval_cmd->add_option("--s", eval_s, "complex point, literal a+bi")->required();
  eval_cmd->add_option("--what", eval_what,
                       "one of eta|zeta|phi|polar|omega|breakdown");
  eval_cmd->add_option("--tol", eval_tol, "series tolerance");
  eval_cmd->add_option("--format", eval_format, "human|json|csv");
  eval_cmd->add_option("--out", eval_out, "write output atomically to FILE");

  // scan
  auto* scan_cmd = app.add_subcommand("scan", "scan the critical line for zeros");
  etastrip::ScanConfig scan_config;
  std::string scan_format = "human";
  std::string scan_out;
  int scan_jobs = default_jobs();
  scan_cmd->add_option("t_lo", scan_config.t_lo, "lower ordinate")->required();
  scan_cmd->add_option("t_hi", scan_config.t_hi, "upper ordinate")->required();
  scan_cmd->add_option("--step", scan_config.step, "grid step");
  scan_cmd->add_option("--refine-tol", scan_config.refine_tol, "bracket width target");
  scan_cmd->add_option("--series-tol", scan_config.series_tol, "series tolerance");
  scan_cmd->add_option("--format", scan_format, "human|json|csv");
  scan_cmd->add_option("--out", scan_out, "write output atomically to FILE");
  scan_cmd->add_option("--jobs", scan_jobs, "worker threads");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run the identity catalog");
  std::vector<std::string> verify_ids;
  etastrip::GridSpec grid_spec = etastrip::default_grid_spec();
  std::string verify_format = "human";
  std::string verify_out;
  int verify_jobs = default_jobs();
  verify_cmd->add_option("--identities", verify_ids,
                         "identity names, or 'all'")->delimiter(',');
  verify_cmd->add_option("--beta-points", grid_spec.beta_points, "beta grid size");
  verify_cmd->add_option("--beta-lo", grid_spec.beta_lo, "beta grid start");
  verify_cmd->add_option("--beta-hi", grid_spec.beta_hi, "beta grid end");
  verify_cmd->add_option("--strip-points", grid_spec.strip_points,
                         "random strip points");
  verify_cmd->add_option("--series-tol", grid_spec.series_tol, "series tolerance");
  verify_cmd->add_option("--format", verify_format, "human|json|csv");
  verify_cmd->add_option("--out", verify_out, "write output atomically to FILE");
  verify_cmd->add_option("--jobs", verify_jobs, "worker threads");

  try {
    app.parse(argc, argv);
    if (eval_cmd->parsed())
      return run_eval(eval_s, eval_what, eval_tol, eval_format, eval_out);
    if (scan_cmd->parsed())
      return run_scan(scan_config, scan_format, scan_out, scan_jobs);
    if (verify_cmd->parsed())
      return run_verify(verify_ids, grid_spec, verify_format, verify_out, verify_jobs);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    std::cerr << "etastrip: " << e.what() << "\n";
    return 2;
  } catch (const etastrip::Error& e) {
    std::cerr << "etastrip: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "etastrip: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
