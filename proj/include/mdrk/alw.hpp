#pragma once

#include <span>

#include "mdrk/models.hpp"
#include "mdrk/operators.hpp"

namespace mdrk {

/// (-g(2) + 8 g(1) - 8 g(-1) + g(-2)) / 12; g(k) evaluates along u + k u1.
template <class S, class G>
S four_point_derivative(G&& g) {
  const S a = g(2.0);
  const S b = g(1.0);
  const S c = g(-1.0);
  const S d = g(-2.0);
  return (-a + 8.0 * b - 8.0 * c + d) / 12.0;
}

template <class S>
S stage1_average(const S& a, const S& a1) {
  return a + 0.25 * a1;
}

template <class S>
S stage2_average(const S& a, const S& a1, const S& as1) {
  return a + (a1 + 2.0 * as1) / 6.0;
}

/// u1 = -(dt/dx) D f
template <class S>
void local_solution_derivative(const Eigen::MatrixXd& D, std::span<const S> f, double dt_dx, std::span<S> u1) {
  const int n = static_cast<int>(f.size());
  for (int p = 0; p < n; ++p) {
    S acc = S::Zero();
    for (int q = 0; q < n; ++q) acc += D(p, q) * f[q];
    u1[p] = -dt_dx * acc;
  }
}

template <class S>
void add_source_increment(std::span<const S> s, double dt, std::span<S> u1) {
  for (std::size_t p = 0; p < s.size(); ++p) u1[p] += dt * s[p];
}

/// V^T v
template <class S>
S extrapolate(const Eigen::VectorXd& V, std::span<const S> v) {
  S acc = S::Zero();
  for (std::size_t p = 0; p < v.size(); ++p) acc += V[p] * v[p];
  return acc;
}

/// Flux evaluation that optionally rejects inadmissible states.
template <ConservationLaw M>
typename M::state_type stencil_flux(const M& model, const typename M::state_type& u, double x, bool strict) {
  if (strict) {
    if (const int k = first_violation(model, u); k >= 0)
      throw StencilError("inadmissible state in time-derivative stencil: " + constraint_name<M>(k), -1, -1,
                         constraint_name<M>(k), constraint_value(model, u, k));
  }
  return model.flux(u, x);
}

/// f1 = four-point difference of f along u + k u1.
template <ConservationLaw M>
typename M::state_type flux_time_derivative(const M& model, const typename M::state_type& u,
                                            const typename M::state_type& u1, double x, bool strict = false) {
  using S = typename M::state_type;
  return four_point_derivative<S>([&](double k) { return stencil_flux(model, S(u + k * u1), x, strict); });
}

/// s1 = four-point difference of s along (u + k u1, t + k dt).
template <ConservationLaw M>
typename M::state_type source_time_derivative(const M& model, const typename M::state_type& u,
                                              const typename M::state_type& u1, double x, double t, double dt) {
  using S = typename M::state_type;
  return four_point_derivative<S>([&](double k) { return S(model.source(S(u + k * u1), x, t + k * dt)); });
}

/// 1/2 (Fl + Fr) - 1/2 lambda (Dr - Dl)
template <class S>
S numerical_flux(const S& Fl, const S& Fr, const S& Dl, const S& Dr, double lambda) {
  return 0.5 * (Fl + Fr) - 0.5 * lambda * (Dr - Dl);
}

/// d/dxi of the continuous flux at the nodes: Fl bL + D1 F + Fr bR.
template <class S>
void fr_flux_derivative(const ReferenceOperators& ops, std::span<const S> F, const S& Fl, const S& Fr,
                        std::span<S> out) {
  const int n = ops.size();
  for (int p = 0; p < n; ++p) {
    S acc = ops.bL[p] * Fl + ops.bR[p] * Fr;
    for (int q = 0; q < n; ++q) acc += ops.D1(p, q) * F[q];
    out[p] = acc;
  }
}

}  // namespace mdrk
