#pragma once

#include <array>
#include <cmath>
#include <concepts>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "mdrk/errors.hpp"

namespace mdrk {

template <int NV>
using State = Eigen::Matrix<double, NV, 1>;

/// Interface every conservation law u_t + f(u, x)_x = s(u, x, t) provides.
///
/// constraints(u) returns the K admissibility functions p_k in the order in
/// which they must be enforced (p_k is concave once p_j > 0 for j < k).
template <class M>
concept ConservationLaw = requires(const M& m, const typename M::state_type& u, double x) {
  { M::nvar } -> std::convertible_to<int>;
  { M::nconstraints } -> std::convertible_to<int>;
  { M::has_source } -> std::convertible_to<bool>;
  { m.flux(u, x) } -> std::convertible_to<typename M::state_type>;
  { m.speed_bound(u, x) } -> std::convertible_to<double>;
  { m.constraints(u) } -> std::convertible_to<std::array<double, M::nconstraints>>;
  { m.indicator(u) } -> std::convertible_to<double>;
};

struct LinearAdvection {
  static constexpr int nvar = 1;
  static constexpr int nconstraints = 0;
  static constexpr bool has_source = false;
  using state_type = State<1>;

  double speed = 1.0;

  state_type flux(const state_type& u, double /*x*/) const { return speed * u; }
  double speed_bound(const state_type&, double) const { return std::abs(speed); }
  std::array<double, 0> constraints(const state_type&) const { return {}; }
  double indicator(const state_type& u) const { return u[0]; }
  static std::array<const char*, 0> constraint_names() { return {}; }
};

/// f(x, u) = a(x) u with a(x) = x^2.
struct VariableAdvection {
  static constexpr int nvar = 1;
  static constexpr int nconstraints = 0;
  static constexpr bool has_source = false;
  using state_type = State<1>;

  static double velocity(double x) { return x * x; }

  state_type flux(const state_type& u, double x) const { return velocity(x) * u; }
  double speed_bound(const state_type&, double x) const { return std::abs(velocity(x)); }
  std::array<double, 0> constraints(const state_type&) const { return {}; }
  double indicator(const state_type& u) const { return u[0]; }
  static std::array<const char*, 0> constraint_names() { return {}; }
};

struct Burgers {
  static constexpr int nvar = 1;
  static constexpr int nconstraints = 0;
  static constexpr bool has_source = false;
  using state_type = State<1>;

  state_type flux(const state_type& u, double) const { return state_type(0.5 * u[0] * u[0]); }
  double speed_bound(const state_type& u, double) const { return std::abs(u[0]); }
  std::array<double, 0> constraints(const state_type&) const { return {}; }
  double indicator(const state_type& u) const { return u[0]; }
  static std::array<const char*, 0> constraint_names() { return {}; }
};

/// 1-D Euler equations in conserved variables (rho, rho v, E).
struct Euler {
  static constexpr int nvar = 3;
  static constexpr int nconstraints = 2;
  static constexpr bool has_source = false;
  using state_type = State<3>;

  double gamma = 1.4;

  double pressure(const state_type& u) const { return (gamma - 1.0) * (u[2] - 0.5 * u[1] * u[1] / u[0]); }
  double sound_speed(const state_type& u) const { return std::sqrt(gamma * pressure(u) / u[0]); }

  state_type from_primitive(double rho, double v, double p) const {
    return state_type(rho, rho * v, p / (gamma - 1.0) + 0.5 * rho * v * v);
  }
  /// (rho, v, p)
  state_type to_primitive(const state_type& u) const { return state_type(u[0], u[1] / u[0], pressure(u)); }

  // Algebraic; callers that need an admissibility guarantee use checked_flux.
  state_type flux(const state_type& u, double) const {
    const double v = u[1] / u[0];
    const double p = pressure(u);
    return state_type(u[1], u[1] * v + p, (u[2] + p) * v);
  }
  double speed_bound(const state_type& u, double) const {
    const double p = pressure(u);
    return std::abs(u[1] / u[0]) + std::sqrt(std::max(gamma * p / u[0], 0.0));
  }
  std::array<double, 2> constraints(const state_type& u) const { return {u[0], pressure(u)}; }
  double indicator(const state_type& u) const { return u[0] * pressure(u); }
  static std::array<const char*, 2> constraint_names() { return {"density", "pressure"}; }

  // Mirror image across a wall.
  state_type reflect(const state_type& u) const { return state_type(u[0], -u[1], u[2]); }
  state_type reflect_flux(const state_type& f) const { return state_type(-f[0], f[1], -f[2]); }
};

/// Euler with a manufactured source so that rho = 2 + 0.2 sin(2 pi (x - t)),
/// v = 1, E = rho^2 is an exact solution.
struct EulerManufactured : Euler {
  static constexpr bool has_source = true;

  static double density(double x, double t) { return 2.0 + 0.2 * std::sin(2.0 * std::numbers::pi * (x - t)); }

  state_type exact(double x, double t) const {
    const double rho = density(x, t);
    return state_type(rho, rho, rho * rho);
  }

  state_type source(const state_type&, double x, double t) const {
    const double rho = density(x, t);
    const double rho_x = 0.4 * std::numbers::pi * std::cos(2.0 * std::numbers::pi * (x - t));
    const double p_x = (gamma - 1.0) * (2.0 * rho - 0.5) * rho_x;
    return state_type(0.0, p_x, p_x);
  }
};

template <ConservationLaw M>
std::array<double, M::nconstraints> admissibility_values(const M& model, const typename M::state_type& u) {
  return model.constraints(u);
}

/// Index of the first violated constraint p_k <= 0, M::nconstraints for a
/// non-finite state, or -1 when admissible.
template <ConservationLaw M>
int first_violation(const M& model, const typename M::state_type& u) {
  if (!u.allFinite()) return M::nconstraints;
  const auto p = model.constraints(u);
  for (int k = 0; k < M::nconstraints; ++k)
    if (!(p[k] > 0.0)) return k;
  return -1;
}

template <ConservationLaw M>
std::string constraint_name(int k) {
  if (k >= 0 && k < M::nconstraints) return M::constraint_names()[k];
  return "finite";
}

template <ConservationLaw M>
double constraint_value(const M& model, const typename M::state_type& u, int k) {
  if (k >= 0 && k < M::nconstraints) return model.constraints(u)[k];
  return NAN;
}

template <ConservationLaw M>
typename M::state_type checked_flux(const M& model, const typename M::state_type& u, double x) {
  if (const int k = first_violation(model, u); k >= 0) {
    const double value = constraint_value(model, u, k);
    throw AdmissibilityError("flux evaluated at inadmissible state: " + constraint_name<M>(k) + " = " +
                                 std::to_string(value),
                             -1, -1, constraint_name<M>(k), value);
  }
  return model.flux(u, x);
}

/// Rusanov (local Lax-Friedrichs) flux with lambda = max of the two speed bounds.
template <ConservationLaw M>
typename M::state_type rusanov_flux(const M& model, const typename M::state_type& ul,
                                    const typename M::state_type& ur, double x) {
  const double lambda = std::max(model.speed_bound(ul, x), model.speed_bound(ur, x));
  return 0.5 * (model.flux(ul, x) + model.flux(ur, x)) - 0.5 * lambda * (ur - ul);
}

// Exact solutions used for error norms and Dirichlet data.
double linadv_sine_exact(double x, double t, double speed = 1.0);
double varadv_exact(double x, double t);
double burgers_sine_exact(double x, double t);

/// Exact solution for catalog cases that have one; ConfigError otherwise.
std::vector<double> exact_solution(const std::string& case_id, double x, double t);
bool has_exact_solution(const std::string& case_id);

}  // namespace mdrk
