#include "mdrk/models.hpp"

#include <cmath>
#include <numbers>

namespace mdrk {

double linadv_sine_exact(double x, double t, double speed) {
  return std::sin(2.0 * std::numbers::pi * (x - speed * t));
}

double varadv_exact(double x, double t) {
  const double s = 1.0 + t * x;
  return std::cos(0.5 * std::numbers::pi * x / s) / (s * s);
}

// Characteristic relation u = 0.2 sin(x - u t), valid before the shock at t = 5.
double burgers_sine_exact(double x, double t) {
  double u = 0.2 * std::sin(x);
  for (int it = 0; it < 100; ++it) {
    const double phase = x - u * t;
    const double g = u - 0.2 * std::sin(phase);
    const double dg = 1.0 + 0.2 * t * std::cos(phase);
    const double du = g / dg;
    u -= du;
    if (std::abs(du) < 1e-15) break;
  }
  return u;
}

bool has_exact_solution(const std::string& case_id) {
  return case_id == "linadv_sine" || case_id == "varadv_x2" || case_id == "burgers_sine" ||
         case_id == "source_manufactured";
}

std::vector<double> exact_solution(const std::string& case_id, double x, double t) {
  if (case_id == "linadv_sine") return {linadv_sine_exact(x, t)};
  if (case_id == "varadv_x2") return {varadv_exact(x, t)};
  if (case_id == "burgers_sine") return {burgers_sine_exact(x, t)};
  if (case_id == "source_manufactured") {
    const auto u = EulerManufactured{}.exact(x, t);
    return {u[0], u[1], u[2]};
  }
  throw ConfigError("no exact solution available for case '" + case_id + "'");
}

}  // namespace mdrk
