#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mdrk/harness.hpp"
#include "mdrk/order_conditions.hpp"
#include "mdrk/stability.hpp"

using namespace mdrk;

namespace {

std::vector<int> parse_meshes(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stoi(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError("bad mesh list '" + s + "'");
    }
  }
  return out;
}

RunConfig build_config(const std::string& case_id, const std::string& file, const std::vector<std::string>& overrides) {
  RunConfig cfg;
  if (!file.empty()) cfg = load_config(file);
  if (!case_id.empty()) set_option(cfg, "run.case", case_id);
  for (const auto& o : overrides) apply_override(cfg, o);
  return cfg;
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

int cmd_run(const RunConfig& cfg, const std::string& diagnostics, const std::string& reference) {
  const std::string meta = meta_line(cfg);
  std::ofstream diag;
  RunHooks hooks;
  if (!diagnostics.empty()) {
    diag.open(diagnostics);
    if (!diag) throw ConfigError("cannot write " + diagnostics);
    diag << meta << '\n';
    hooks.diagnostics = &diag;
  } else if (cfg.diagnostics) {
    hooks.diagnostics = &std::cerr;
  }
  const CaseSpec& cs = find_case(cfg.case_id);
  if (cs.needs_limiter && cfg.scheme.limiter == Limiter::None)
    std::cerr << "warning: " << cfg.case_id << " develops shocks; limiter=none is expected to fail\n";
  hooks.snapshot = [&](long step, const Snapshot& s) {
    if (cfg.output.empty()) {
      if (cfg.output_every == 0) write_snapshot(std::cout, s, meta);
      return;
    }
    char name[32];
    std::snprintf(name, sizeof name, "_%06ld.csv", step);
    std::ofstream os(cfg.output + name);
    if (!os) throw ConfigError("cannot write " + cfg.output + name);
    write_snapshot(os, s, meta + " t=" + fmt("%.17g", s.t));
  };
  const ReferenceProfile ref = reference.empty() ? ReferenceProfile{} : ingest_reference_file(reference);
  const RunResult r = run_case(cfg, hooks);
  if (!reference.empty()) {
    Snapshot s = r.solution;
    to_display(s, cs.model);
    if (ref.names != s.names) throw ConfigError("reference columns do not match " + cfg.case_id);
    const ErrorNorms e = error_norms(s, [&](double x) {
      std::vector<double> v(ref.names.size());
      for (std::size_t k = 0; k < v.size(); ++k) v[k] = ref.at(x, static_cast<int>(k)).value;
      return v;
    });
    for (std::size_t k = 0; k < e.l2.size(); ++k)
      std::cerr << "reference " << s.names[k] << ": L2 " << e.l2[k] << ", Linf " << e.linf[k] << '\n';
  }
  if (cfg.output.empty() && cfg.output_every > 0) {
    Snapshot s = r.solution;
    to_display(s, cs.model);
    write_snapshot(std::cout, s, meta);
  }
  std::cerr << "case " << r.case_id << ": " << r.steps << " steps to t = " << r.t << " (cfl " << r.cfl << ", "
            << r.retries << " retried), " << fmt("%.2f", r.wall) << " s\n";
  if (!std::isnan(r.min_density))
    std::cerr << "min density " << r.min_density << ", min pressure " << r.min_pressure << '\n';
  std::cerr << "mass drift " << r.mass_drift << ", mean identity " << r.mean_identity << '\n';
  if (r.errors)
    for (std::size_t v = 0; v < r.errors->l2.size(); ++v)
      std::cerr << "var " << v << ": L2 " << r.errors->l2[v] << ", Linf " << r.errors->linf[v] << '\n';
  return 0;
}

int cmd_stability(const std::string& corr, const std::string& diss, const std::string& points, int degree,
                  int samples, bool system) {
  const CorrectionKind c = parse_correction_kind(corr);
  const Dissipation d = parse_dissipation(diss);
  const PointKind p = points.empty() ? (c == CorrectionKind::Radau ? PointKind::GL : PointKind::GLL)
                                     : parse_point_kind(points);
  const auto ops = reference_operators(degree, p, c);
  const CflSearch s = find_cfl(*ops, d, samples);
  std::cout << "degree " << degree << ", " << to_string(p) << " points, " << to_string(c) << " correction, "
            << to_string(d) << '\n';
  std::cout << "cfl " << fmt("%.3f", s.rounded) << " (bisection " << fmt("%.5f", s.sigma) << ", bracket ["
            << fmt("%.5f", s.lo) << ", " << fmt("%.5f", s.hi) << "], " << s.evaluations << " evaluations)\n";
  std::cout << "max |lambda| at cfl: " << fmt("%.12f", max_amplification(*ops, d, s.sigma, samples)) << '\n';
  if (system) {
    const CflSearch y = find_system_cfl(*ops, d, samples);
    std::cout << "system cfl (a/lambda in [0,1]) " << fmt("%.3f", y.rounded) << " (bisection " << fmt("%.5f", y.sigma)
              << ")\n";
  }
  return 0;
}

int cmd_order_check() {
  const auto& names = order_condition_names();
  auto show = [&](const char* title, const MdrkCoefficients& c) {
    std::cout << title << '\n';
    const auto r = order_residuals(c);
    for (std::size_t i = 0; i < r.size(); ++i)
      std::cout << "  " << names[i] << ": " << r[i].numerator() << '/' << r[i].denominator() << '\n';
  };
  show("production coefficients", MdrkCoefficients::production());
  MdrkCoefficients b = MdrkCoefficients::production();
  b.b2 = Rational(1, 10);
  show("b2 = 1/10", b);
  MdrkCoefficients a = MdrkCoefficients::production();
  a.a21 = 0;
  show("a21 = 0", a);
  const std::vector<int> meshes{10, 20, 40, 80, 160};
  for (auto [label, data] : {std::pair{"eigenmode data", ScanData::PhysicalMode},
                             std::pair{"interpolated sine", ScanData::Interpolated}}) {
    const OrderScan s = one_step_order_scan(meshes, 0.1, data);
    std::cout << "one-step error, " << label << ", sigma 0.1\n";
    for (std::size_t i = 0; i < s.meshes.size(); ++i) {
      std::cout << "  n " << s.meshes[i] << "  dt " << fmt("%.4e", s.dt[i]) << "  error " << fmt("%.4e", s.error[i]);
      if (i > 0) std::cout << "  order " << fmt("%.3f", s.pairwise[i - 1]);
      std::cout << '\n';
    }
    std::cout << "  fitted slope " << fmt("%.3f", s.slope) << '\n';
  }
  return 0;
}

int cmd_convergence(const RunConfig& cfg, const std::string& meshes) {
  const ConvergenceReport r = convergence_suite(cfg.case_id, parse_meshes(meshes), cfg);
  write_convergence(std::cout, r, meta_line(cfg));
  return 0;
}

int cmd_compare(RunConfig cfg, const std::string& baseline, const std::string& meshes) {
  if (baseline != "rkfr") throw ConfigError("only the rkfr baseline is available");
  const auto m = parse_meshes(meshes);
  std::cout << meta_line(cfg) << '\n';
  cfg.integrator = "mdrk";
  const ConvergenceReport a = convergence_suite(cfg.case_id, m, cfg);
  cfg.integrator = "rkfr";
  const ConvergenceReport b = convergence_suite(cfg.case_id, m, cfg);
  std::cout << "elements,l2_mdrk,l2_rkfr,ratio,order_mdrk,order_rkfr,wall_mdrk,wall_rkfr\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::cout << m[i] << ',' << fmt("%.6e", a.l2[i][0]) << ',' << fmt("%.6e", b.l2[i][0]) << ','
              << fmt("%.3f", a.l2[i][0] / b.l2[i][0]) << ',';
    if (i > 0) std::cout << fmt("%.3f", a.l2_order[i - 1][0]) << ',' << fmt("%.3f", b.l2_order[i - 1][0]);
    else std::cout << ',';
    std::cout << ',' << fmt("%.3f", a.wall[i]) << ',' << fmt("%.3f", b.wall[i]) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MDRK flux reconstruction solver"};
  app.require_subcommand(1);

  std::string case_id, config_file, diagnostics, reference, meshes = "20,40,80,160", baseline = "rkfr";
  std::vector<std::string> overrides;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_file, "INI file with [run], [scheme], [blend] sections");
    sub->add_option("--override", overrides, "key=value, e.g. scheme.face=ea")->expected(1, -1);
  };

  auto* run = app.add_subcommand("run", "run one catalog case");
  run->add_option("--case", case_id, "case id")->required();
  run->add_option("--diagnostics", diagnostics, "write limiter diagnostics CSV to this file");
  run->add_option("--reference", reference, "CSV profile to compare the final solution against");
  add_common(run);

  auto* conv = app.add_subcommand("convergence", "error norms and observed orders on a mesh sequence");
  conv->add_option("--case", case_id, "case id")->required();
  conv->add_option("--meshes", meshes, "comma separated element counts");
  add_common(conv);

  std::string corr = "radau", diss = "d2", points;
  int degree = 3, samples = 1024;
  bool system = false;
  auto* stab = app.add_subcommand("stability", "Fourier CFL limit");
  stab->add_option("--correction", corr, "radau|g2");
  stab->add_option("--dissipation", diss, "d1|d2");
  stab->add_option("--points", points, "gl|gll (default gl for radau, gll for g2)");
  stab->add_option("--degree", degree, "polynomial degree")->check(CLI::Range(1, 6));
  stab->add_option("--samples", samples, "wavenumbers sampled")->check(CLI::Range(512, 1 << 16));
  stab->add_flag("--system", system, "also report the limit for waves slower than the dissipation speed");

  auto* order = app.add_subcommand("order-check", "order-condition residuals and one-step order");

  auto* cmp = app.add_subcommand("compare", "MDRK against the RKFR baseline");
  cmp->add_option("--baseline", baseline, "rkfr");
  cmp->add_option("--case", case_id, "case id");
  cmp->add_option("--meshes", meshes, "comma separated element counts");
  add_common(cmp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*run) return cmd_run(build_config(case_id, config_file, overrides), diagnostics, reference);
    if (*conv) return cmd_convergence(build_config(case_id, config_file, overrides), meshes);
    if (*stab) return cmd_stability(corr, diss, points, degree, samples, system);
    if (*order) return cmd_order_check();
    if (*cmp) return cmd_compare(build_config(case_id, config_file, overrides), baseline, meshes);
  } catch (const AdmissibilityError& e) {
    std::cerr << "admissibility abort: " << e.what() << " [element " << e.element() << ", node " << e.node()
              << ", " << e.constraint() << " = " << e.value() << "]\n";
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
