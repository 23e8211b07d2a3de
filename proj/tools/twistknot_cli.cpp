// Command-line surface: batch computation of exact values, critical-point
// constants, volume-channel cross-checks, asymptotic verification tables,
// Fourier coefficients and certificate suites, emitted as JSON (source of
// truth) or CSV (projection).

#include "twistknot/asympt.hpp"
#include "twistknot/fourier.hpp"
#include "twistknot/geometry.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace twistknot;

namespace {

// ---------------------------------------------------------------------------
// Shared run configuration
// ---------------------------------------------------------------------------

struct RunConfig {
  std::string format = "json";  // json | csv
  std::string output;           // empty = stdout
  std::string precision;        // machine | extended (default from env)
  NumericsConfig numerics;
};

NumericsConfig resolve_numerics(RunConfig& rc) {
  if (rc.precision.empty()) {
    const char* env = std::getenv("TWISTKNOT_PRECISION");
    rc.precision = env ? env : "machine";
  }
  if (rc.precision == "extended")
    rc.numerics.precision_mode = PrecisionMode::Extended;
  else if (rc.precision == "machine")
    rc.numerics.precision_mode = PrecisionMode::MachineDouble;
  else
    throw DomainError("precision must be 'machine' or 'extended'");
  rc.numerics.validate();
  return rc.numerics;
}

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json meta_for(const RunConfig& rc, double tol) {
  return json{{"precision", rc.precision},
              {"tolerances",
               {{"abs", tol},
                {"quad_abs", rc.numerics.quad_abs_tol},
                {"quad_rel", rc.numerics.quad_rel_tol},
                {"newton", rc.numerics.newton_tol}}},
              {"paper_refs", json::array()}};
}

// One numeric record of the output document.
json record(const RunConfig& rc, const std::string& quantity, int p, int N,
            Complex value, double tol, json extra_meta = json::object()) {
  json meta = meta_for(rc, tol);
  for (auto& [k, v] : extra_meta.items()) meta[k] = v;
  return json{{"quantity", quantity},
              {"p", p},
              {"N", N},
              {"value", {{"re", value.real()}, {"im", value.imag()}}},
              {"meta", meta}};
}

void emit(const RunConfig& rc, const json& doc,
          const std::vector<std::string>& csv_lines) {
  std::string text;
  if (rc.format == "json") {
    text = doc.dump(2);
    text.push_back('\n');
  } else if (rc.format == "csv") {
    for (const auto& line : csv_lines) {
      text += line;
      text.push_back('\n');
    }
  } else {
    throw DomainError("format must be 'json' or 'csv'");
  }
  if (rc.output.empty()) {
    std::fputs(text.c_str(), stdout);
  } else {
    std::ofstream out(rc.output, std::ios::binary);
    if (!out) throw DomainError("output path not writable: " + rc.output);
    out << text;
  }
}

std::string csv_row(const json& rec) {
  return rec["quantity"].get<std::string>() + "," +
         std::to_string(rec["p"].get<int>()) + "," +
         std::to_string(rec["N"].get<int>()) + "," +
         fmt17(rec["value"]["re"].get<double>()) + "," +
         fmt17(rec["value"]["im"].get<double>());
}

void emit_records(const RunConfig& rc, const std::string& command,
                  const std::vector<json>& records) {
  json doc{{"command", command}, {"records", records}};
  std::vector<std::string> csv{"quantity,p,N,re,im"};
  for (const auto& r : records) csv.push_back(csv_row(r));
  emit(rc, doc, csv);
}

std::vector<int> parse_n_values(int N, const std::string& range,
                                const std::string& list) {
  std::vector<int> out;
  if (!range.empty()) {
    const auto colon = range.find(':');
    if (colon == std::string::npos)
      throw DomainError("--N-range expects 'lo:hi'");
    const int lo = std::stoi(range.substr(0, colon));
    const int hi = std::stoi(range.substr(colon + 1));
    if (lo < 1 || hi < lo) throw DomainError("--N-range must satisfy 1 <= lo <= hi");
    for (int n = lo; n <= hi; ++n) out.push_back(n);
  } else if (!list.empty()) {
    size_t pos = 0;
    while (pos < list.size()) {
      size_t comma = list.find(',', pos);
      if (comma == std::string::npos) comma = list.size();
      out.push_back(std::stoi(list.substr(pos, comma - pos)));
      pos = comma + 1;
    }
  } else {
    out.push_back(N);
  }
  if (out.empty()) throw DomainError("empty N selection");
  return out;
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

void cmd_jones(RunConfig& rc, int p, int N, const std::string& range) {
  const NumericsConfig cfg = resolve_numerics(rc);
  std::vector<json> records;
  for (int n : parse_n_values(N, range, "")) {
    const JonesValue j = jones_exact(KnotSpec{p, n}, cfg);
    records.push_back(record(rc, "jones", p, n, j.value, 1e-12,
                             {{"log_abs", j.log_abs},
                              {"term_count", j.term_count}}));
  }
  emit_records(rc, "jones", records);
}

void cmd_critical(RunConfig& rc, int p) {
  const NumericsConfig cfg = resolve_numerics(rc);
  const CriticalData cd = solve_critical(p, cfg);
  std::vector<json> records;
  const double tol = cfg.newton_tol;
  records.push_back(record(rc, "t0", p, 0, cd.t0, tol));
  records.push_back(record(rc, "s0", p, 0, cd.s0, tol));
  records.push_back(record(rc, "x0", p, 0, cd.x0, tol));
  records.push_back(record(rc, "y0", p, 0, cd.y0, tol));
  records.push_back(record(rc, "zeta", p, 0, cd.zeta, tol));
  records.push_back(record(rc, "two_pi_zeta", p, 0, 2.0 * kPi * cd.zeta, tol));
  records.push_back(record(rc, "omega", p, 0, cd.omega, tol));
  records.push_back(record(rc, "H", p, 0, cd.H, tol,
                           {{"residual", cd.residual}}));
  emit_records(rc, "critical", records);
}

void cmd_constants(RunConfig& rc, int p) {
  const NumericsConfig cfg = resolve_numerics(rc);
  const CriticalData cd = solve_critical(p, cfg);
  std::vector<json> records;
  records.push_back(
      record(rc, "two_pi_zeta", p, 0, 2.0 * kPi * cd.zeta, cfg.newton_tol));
  records.push_back(record(rc, "two_pi_zeta_R", p, 0,
                           Complex(2.0 * kPi * cd.zeta_R, 0.0), cfg.newton_tol));
  records.push_back(record(rc, "two_pi_zeta_R_series", p, 0,
                           Complex(zeta_R_series(p), 0.0), 1e-10));
  records.push_back(record(rc, "c_upper", p, 0,
                           Complex(c_upper(p, cd.zeta_R), 0.0), 1e-12));
  records.push_back(record(rc, "v8", p, 0,
                           Complex(8.0 * kPi * lobachevsky(0.25), 0.0), 1e-15));
  emit_records(rc, "constants", records);
}

void cmd_volume(RunConfig& rc, int p) {
  const NumericsConfig cfg = resolve_numerics(rc);
  const CriticalData cd = solve_critical(p, cfg);
  const GluingSolution gs = solve_gluing(p, cfg);
  const double mismatch = 2.0 * kPi * cd.zeta_R - gs.volcs.real();
  std::vector<json> records;
  records.push_back(record(rc, "w0", p, 0, gs.w0, cfg.newton_tol));
  records.push_back(record(rc, "vol_plus_i_cs", p, 0, gs.volcs, 1e-12));
  records.push_back(record(rc, "two_pi_zeta_R", p, 0,
                           Complex(2.0 * kPi * cd.zeta_R, 0.0), cfg.newton_tol));
  records.push_back(record(rc, "channel_mismatch", p, 0,
                           Complex(mismatch, 0.0), 1e-8));
  emit_records(rc, "volume", records);
}

void cmd_verify_asymptotics(RunConfig& rc, int p, const std::string& n_list,
                            int fit_d, const std::string& fit_list) {
  const NumericsConfig cfg = resolve_numerics(rc);
  const std::vector<int> Ns = parse_n_values(0, "", n_list);
  const auto rows = convergence_experiment(p, Ns, cfg);

  std::vector<json> records;
  std::vector<std::string> csv{"N,re_logJ_scaled,target,gap"};
  for (const auto& row : rows) {
    records.push_back(record(rc, "convergence", p, row.N,
                             Complex(row.logJ_scaled, 0.0), 1e-10,
                             {{"target", row.target}, {"gap", row.gap}}));
    csv.push_back(std::to_string(row.N) + "," + fmt17(row.logJ_scaled) + "," +
                  fmt17(row.target) + "," + fmt17(row.gap));
  }
  if (fit_d > 0) {
    const std::vector<int> fit_Ns = parse_n_values(0, "", fit_list);
    const AsymptoticModel model = fit_kappas(p, fit_Ns, fit_d, cfg);
    for (size_t i = 0; i < model.kappas.size(); ++i)
      records.push_back(record(rc, "kappa_" + std::to_string(i + 1), p, 0,
                               model.kappas[i], model.fit_residual));
  }
  json doc{{"command", "verify-asymptotics"}, {"records", records}};
  emit(rc, doc, csv);
}

void cmd_fourier(RunConfig& rc, int p, int N, int m, int n, double eps) {
  const NumericsConfig cfg = resolve_numerics(rc);
  const FourierCoefficient c = hhat(KnotSpec{p, N}, FourierIndex{m, n}, eps, cfg);
  std::vector<json> records;
  records.push_back(record(rc, "hhat", p, N, c.value, c.quad_error,
                           {{"m", m}, {"n", n}, {"eps", eps},
                            {"quad_error", c.quad_error}}));
  emit_records(rc, "fourier", records);
}

// --------------------------- certificate suites ---------------------------

json check_entry(const std::string& name, bool pass, double worst) {
  return json{{"name", name}, {"pass", pass}, {"worst", worst}};
}

// Growth-bound certificate: on a 2000^2 grid over the box of the full
// domain, every point with v(t,s) > 3.509/(2 pi) lies in the distinguished
// subregion; plus the vertex/line and inclusion certificates.
json suite_region() {
  json checks = json::array();
  {
    const double threshold = 3.509 / (2.0 * kPi);
    const int G = 2000;
    long violations = 0;
    double worst = 0.0;
    for (int i = 0; i < G; ++i) {
      const double t = 0.5 + (0.5 * (i + 0.5)) / G;
      for (int j = 0; j < G; ++j) {
        const double s = (1.0 * (j + 0.5)) / G;
        if (!region_contains(RegionSpec::region_D(), t, s)) continue;
        const double v = v_function(t, s);
        if (v > threshold && !region_contains(RegionSpec::dprime0(), t, s)) {
          ++violations;
          worst = std::max(worst, v - threshold);
        }
      }
    }
    checks.push_back(check_entry("growth_bound_implies_subregion",
                                 violations == 0, worst));
  }
  {
    // Each quadrilateral vertex lies on its two defining lines: the top
    // vertex on s = (p+n+t)/(2p-1) and s = (p+2+n-t)/(2p), the bottom on
    // s = (p+n+1-t)/(2p-1) and s = (p+n+t)/(2p).
    double worst = 0.0;
    for (int p = 6; p <= 20; ++p) {
      for (int n = -2; n <= 2; ++n) {
        const auto [top, bot] = u_vertices(p, n);
        worst = std::max(worst,
                         std::abs(top.s - (p + n + top.t) / (2.0 * p - 1.0)));
        worst = std::max(worst,
                         std::abs(top.s - (p + 2.0 + n - top.t) / (2.0 * p)));
        worst = std::max(worst,
                         std::abs(bot.s - (p + n + 1.0 - bot.t) / (2.0 * p - 1.0)));
        worst = std::max(worst,
                         std::abs(bot.s - (p + n + bot.t) / (2.0 * p)));
      }
    }
    checks.push_back(check_entry("u_vertex_line_pairs", worst <= 1e-15, worst));
  }
  {
    // U_0 inside D''_0 inside D_H, sampled on a fine grid.
    bool ok = true;
    for (int p = 6; p <= 20 && ok; ++p) {
      const int G = 400;
      for (int i = 0; i < G && ok; ++i) {
        const double t = 0.5 + (0.5 * (i + 0.5)) / G;
        for (int j = 0; j < G && ok; ++j) {
          const double s = (1.0 * (j + 0.5)) / G;
          if (region_contains(RegionSpec::u(0, p), t, s) &&
              !region_contains(RegionSpec::ddoubleprime0(p), t, s))
            ok = false;
          if (region_contains(RegionSpec::ddoubleprime0(p), t, s) &&
              !region_contains(RegionSpec::d_H(), t, s))
            ok = false;
        }
      }
    }
    checks.push_back(check_entry("region_inclusions", ok, ok ? 0.0 : 1.0));
  }
  return checks;
}

json suite_phi(const NumericsConfig& cfg) {
  json checks = json::array();
  {
    double worst = 0.0;
    for (int N = 1; N <= 20; ++N) {
      const RootOfUnity ru = RootOfUnity::make(N);
      for (int n = 0; n <= 2 * N; ++n)
        worst = std::max(worst, std::abs(q_pochhammer(ru, n) -
                                          q_pochhammer_via_phi(ru, n, cfg)));
    }
    checks.push_back(check_entry("pochhammer_bridge", worst <= 1e-8, worst));
  }
  {
    const RootOfUnity ru = RootOfUnity::make(9);
    double worst = 0.0;
    // Deterministic low-discrepancy sample of the strip 0 < Re t < 1.
    for (int k = 0; k < 50; ++k) {
      const double tr = 0.02 + 0.96 * std::fmod(0.6180339887498949 * (k + 1), 1.0);
      const double ti = 0.3 * std::fmod(0.4142135623730951 * (k + 1), 1.0) - 0.15;
      const Complex t(tr, ti);
      const Complex lhs = phi_N(ru, t, cfg) + phi_N(ru, 1.0 - t, cfg);
      worst = std::max(worst, std::abs(lhs - phi_reflection_rhs(ru, t)));
    }
    checks.push_back(check_entry("reflection_identity", worst <= 1e-10, worst));
  }
  return checks;
}

json suite_hessian(const NumericsConfig& cfg) {
  json checks = json::array();
  {
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      const double t = 0.55 + 0.4 * std::fmod(0.6180339887498949 * (k + 1), 1.0);
      const double s = 0.25 + 0.5 * std::fmod(0.4142135623730951 * (k + 1), 1.0);
      if (!region_contains(RegionSpec::region_D(), t, s)) continue;
      const PotentialPoint pt{Complex(t, 0.03), Complex(s, -0.02)};
      const Complex lhs = hess_V(7, pt).det();
      const Complex rhs = kTwoPiI * kTwoPiI *
                          H_of(7, std::exp(kTwoPiI * pt.t), std::exp(kTwoPiI * pt.s));
      worst = std::max(worst, std::abs(lhs - rhs));
    }
    checks.push_back(check_entry("det_hessian_identity", worst <= 1e-10, worst));
  }
  {
    // f-Hessian positive definite on a grid over the admissible region.
    bool ok = true;
    double worst = 0.0;
    const int G = 60;
    for (int i = 0; i < G; ++i) {
      const double t = 0.5 + (0.5 * (i + 0.5)) / G;
      for (int j = 0; j < G; ++j) {
        const double s = (1.0 * (j + 0.5)) / G;
        if (!region_contains(RegionSpec::d_H(), t, s)) continue;
        const auto h = f_hessian_XY(t, 0.0, s, 0.0);
        const double tr = h[0] + h[2];
        const double det = h[0] * h[2] - h[1] * h[1];
        if (!(tr > 0.0 && det > 0.0)) {
          ok = false;
          worst = std::min(std::min(tr, det), worst);
        }
      }
    }
    checks.push_back(check_entry("f_hessian_positive_definite", ok, worst));
  }
  (void)cfg;
  return checks;
}

void cmd_lemmas(RunConfig& rc, const std::string& suite) {
  const NumericsConfig cfg = resolve_numerics(rc);
  json checks;
  if (suite == "region")
    checks = suite_region();
  else if (suite == "phi")
    checks = suite_phi(cfg);
  else if (suite == "hessian")
    checks = suite_hessian(cfg);
  else
    throw DomainError("unknown suite: " + suite +
                      " (expected region|phi|hessian)");
  bool all = true;
  for (const auto& c : checks) all = all && c["pass"].get<bool>();
  json doc{{"command", "lemmas"},
           {"suite", suite},
           {"pass", all},
           {"meta", meta_for(rc, cfg.quad_abs_tol)},
           {"checks", checks}};
  std::vector<std::string> csv{"name,pass,worst"};
  for (const auto& c : checks)
    csv.push_back(c["name"].get<std::string>() + "," +
                  (c["pass"].get<bool>() ? "1" : "0") + "," +
                  fmt17(c["worst"].get<double>()));
  emit(rc, doc, csv);
  if (!all) std::exit(2);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"twist-knot quantum invariant toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  RunConfig rc;
  app.add_option("--format", rc.format, "json | csv")->capture_default_str();
  app.add_option("--output", rc.output, "output file (default stdout)");
  app.add_option("--precision", rc.precision,
                 "machine | extended (default: $TWISTKNOT_PRECISION or machine)");
  app.add_option("--quad-abs-tol", rc.numerics.quad_abs_tol)->capture_default_str();
  app.add_option("--quad-rel-tol", rc.numerics.quad_rel_tol)->capture_default_str();
  app.add_option("--newton-tol", rc.numerics.newton_tol)->capture_default_str();

  int p = 6, N = 1, m = 0, n = 0, fit_d = 0;
  double eps = 0.05;
  std::string n_range, n_list = "50,100,200", fit_list = "40,55,75,100,135";
  std::string suite = "region";

  auto* c_jones = app.add_subcommand("jones", "exact value at the root of unity");
  c_jones->add_option("--p", p, "twist parameter")->required();
  c_jones->add_option("--N", N, "color");
  c_jones->add_option("--N-range", n_range, "inclusive range lo:hi");

  auto* c_crit = app.add_subcommand("critical", "critical-point data");
  c_crit->add_option("--p", p)->required();

  auto* c_const = app.add_subcommand("constants", "growth constants");
  c_const->add_option("--p", p)->required();

  auto* c_vol = app.add_subcommand("volume", "volume-channel cross-check");
  c_vol->add_option("--p", p)->required();

  auto* c_ver = app.add_subcommand("verify-asymptotics",
                                   "growth-rate table and optional coefficient fit");
  c_ver->add_option("--p", p)->required();
  c_ver->add_option("--N-list", n_list, "comma-separated colors")
      ->capture_default_str();
  c_ver->add_option("--fit-d", fit_d, "number of correction coefficients");
  c_ver->add_option("--fit-list", fit_list, "fit sample colors")
      ->capture_default_str();

  auto* c_fourier = app.add_subcommand("fourier", "smoothed-sum Fourier coefficient");
  c_fourier->add_option("--p", p)->required();
  c_fourier->add_option("--N", N)->required();
  c_fourier->add_option("--m", m)->capture_default_str();
  c_fourier->add_option("--n", n)->capture_default_str();
  c_fourier->add_option("--eps", eps, "bump transition width")->capture_default_str();

  auto* c_lemmas = app.add_subcommand("lemmas", "certificate suites");
  c_lemmas->add_option("--suite", suite, "region | phi | hessian")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*c_jones) cmd_jones(rc, p, N, n_range);
    else if (*c_crit) cmd_critical(rc, p);
    else if (*c_const) cmd_constants(rc, p);
    else if (*c_vol) cmd_volume(rc, p);
    else if (*c_ver) cmd_verify_asymptotics(rc, p, n_list, fit_d, fit_list);
    else if (*c_fourier) cmd_fourier(rc, p, N, m, n, eps);
    else if (*c_lemmas) cmd_lemmas(rc, suite);
  } catch (const std::exception& e) {
    const char* type = "Error";
    if (dynamic_cast<const DomainError*>(&e)) type = "DomainError";
    else if (dynamic_cast<const BranchError*>(&e)) type = "BranchError";
    else if (dynamic_cast<const QuadratureError*>(&e)) type = "QuadratureError";
    else if (dynamic_cast<const SolverError*>(&e)) type = "SolverError";
    else if (dynamic_cast<const EscalationError*>(&e)) type = "EscalationError";
    else if (dynamic_cast<const FitError*>(&e)) type = "FitError";
    json err{{"error", {{"type", type}, {"message", e.what()}}}};
    std::fputs((err.dump(2) + "\n").c_str(), stdout);
    return 1;
  }
  return 0;
}
