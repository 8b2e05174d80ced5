#include <cmath>
#include <cstdio>
#include <ostream>

#include "mdrk/harness.hpp"

namespace mdrk {

ConvergenceReport convergence_suite(const std::string& case_id, const std::vector<int>& meshes, RunConfig cfg) {
  const CaseSpec& cs = find_case(case_id);
  if (!cs.analytic) throw ConfigError("case " + case_id + " has no exact solution for a convergence study");
  if (meshes.size() < 3) throw ConfigError("a convergence study needs at least three meshes");
  for (std::size_t i = 0; i < meshes.size(); ++i)
    if (meshes[i] < 1 || (i > 0 && meshes[i] <= meshes[i - 1]))
      throw ConfigError("meshes must be positive and increasing");
  cfg.case_id = case_id;
  cfg.output_every = 0;

  ConvergenceReport r;
  r.case_id = case_id;
  r.meshes = meshes;
  for (int v = 0; v < variable_count(cs.model); ++v) r.names.push_back("u" + std::to_string(v));
  for (int n : meshes) {
    cfg.elements = n;
    const RunResult run = run_case(cfg);
    r.l2.push_back(run.errors->l2);
    r.linf.push_back(run.errors->linf);
    r.wall.push_back(run.wall);
  }
  auto order = [&](const std::vector<std::vector<double>>& e, std::size_t i, std::size_t v) {
    return std::log(e[i][v] / e[i + 1][v]) / std::log(static_cast<double>(meshes[i + 1]) / meshes[i]);
  };
  for (std::size_t i = 0; i + 1 < meshes.size(); ++i) {
    std::vector<double> a, b;
    for (std::size_t v = 0; v < r.names.size(); ++v) {
      a.push_back(order(r.l2, i, v));
      b.push_back(order(r.linf, i, v));
      if (!(r.l2[i + 1][v] < r.l2[i][v])) r.monotone = false;
    }
    r.l2_order.push_back(a);
    r.linf_order.push_back(b);
  }
  return r;
}

void write_convergence(std::ostream& os, const ConvergenceReport& r, const std::string& meta) {
  if (!meta.empty()) os << meta << '\n';
  os << "elements";
  for (const auto& n : r.names) os << ",l2_" << n << ",linf_" << n << ",order_l2_" << n << ",order_linf_" << n;
  os << ",wall\n";
  char buf[40];
  for (std::size_t i = 0; i < r.meshes.size(); ++i) {
    os << r.meshes[i];
    for (std::size_t v = 0; v < r.names.size(); ++v) {
      std::snprintf(buf, sizeof buf, ",%.6e,%.6e", r.l2[i][v], r.linf[i][v]);
      os << buf;
      if (i == 0) {
        os << ",,";
      } else {
        std::snprintf(buf, sizeof buf, ",%.3f,%.3f", r.l2_order[i - 1][v], r.linf_order[i - 1][v]);
        os << buf;
      }
    }
    std::snprintf(buf, sizeof buf, ",%.3f", r.wall[i]);
    os << buf << '\n';
  }
  if (!r.monotone) os << "# warning: error does not decrease monotonically\n";
}

}  // namespace mdrk
