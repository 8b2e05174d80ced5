#include <cmath>
#include <numbers>

#include "mdrk/harness.hpp"

namespace mdrk {

namespace {

std::vector<double> euler_state(double rho, double v, double p, double gamma = 1.4) {
  const auto u = Euler{gamma}.from_primitive(rho, v, p);
  return {u[0], u[1], u[2]};
}

std::vector<CaseSpec> build_catalog() {
  using B = BoundaryKind;
  using MK = ModelKind;
  std::vector<CaseSpec> c;
  c.push_back({"linadv_sine", MK::LinearAdvection, 0.0, 1.0, B::Periodic, B::Periodic, 2.0, 40, true, false,
               [](double x, double) { return std::vector<double>{linadv_sine_exact(x, 0.0)}; }});
  c.push_back({"varadv_x2", MK::VariableAdvection, 0.1, 1.0, B::Dirichlet, B::Transmissive, 1.0, 40, true, false,
               [](double x, double) { return std::vector<double>{varadv_exact(x, 0.0)}; }});
  c.push_back({"burgers_sine", MK::Burgers, 0.0, 2.0 * std::numbers::pi, B::Periodic, B::Periodic, 2.0, 40, true,
               false, [](double x, double) { return std::vector<double>{0.2 * std::sin(x)}; }});
  c.push_back({"blast", MK::Euler, 0.0, 1.0, B::Reflective, B::Reflective, 0.038, 400, false, true,
               [](double x, double) {
                 const double p = x < 0.1 ? 1000.0 : x < 0.9 ? 0.01 : 100.0;
                 return euler_state(1.0, 0.0, p);
               }});
  c.push_back({"titarev_toro", MK::Euler, -5.0, 5.0, B::Dirichlet, B::Transmissive, 5.0, 800, false, true,
               [](double x, double) {
                 if (x <= -4.5) return euler_state(1.515695, 0.523346, 1.805);
                 return euler_state(1.0 + 0.1 * std::sin(20.0 * std::numbers::pi * x), 0.0, 1.0);
               }});
  c.back().inflow_from_initial = true;
  c.push_back({"density_ratio", MK::Euler, 0.0, 1.0, B::Transmissive, B::Transmissive, 0.15, 500, false, true,
               [](double x, double) {
                 return x < 0.3 ? euler_state(1000.0, 0.0, 1000.0) : euler_state(1.0, 0.0, 1.0);
               }});
  c.push_back({"sedov", MK::Euler, -1.0, 1.0, B::Reflective, B::Reflective, 0.001, 201, false, true,
               [](double x, double dx) {
                 const double E = std::abs(x) <= 0.5 * dx ? 3.2e6 / dx : 1e-12;
                 return std::vector<double>{1.0, 0.0, E};
               }});
  c.push_back({"source_manufactured", MK::EulerManufactured, 0.0, 1.0, B::Periodic, B::Periodic, 0.5, 20, true,
               false, [](double x, double) {
                 const auto u = EulerManufactured{}.exact(x, 0.0);
                 return std::vector<double>{u[0], u[1], u[2]};
               }});
  c.back().system_cfl = true;
  return c;
}

}  // namespace

const std::vector<CaseSpec>& case_catalog() {
  static const std::vector<CaseSpec> catalog = build_catalog();
  return catalog;
}

const CaseSpec& find_case(const std::string& id) {
  for (const auto& c : case_catalog())
    if (c.id == id) return c;
  std::string known;
  for (const auto& c : case_catalog()) known += (known.empty() ? "" : ", ") + c.id;
  throw ConfigError("unknown case '" + id + "' (known: " + known + ")");
}

int variable_count(ModelKind m) { return m == ModelKind::Euler || m == ModelKind::EulerManufactured ? 3 : 1; }

std::vector<std::string> display_names(ModelKind m) {
  if (variable_count(m) == 3) return {"rho", "v", "p"};
  return {"u"};
}

}  // namespace mdrk
