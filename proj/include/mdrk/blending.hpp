#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <span>
#include <vector>

#include "mdrk/errors.hpp"
#include "mdrk/models.hpp"
#include "mdrk/operators.hpp"

namespace mdrk {

/// Subfaces x_{p+1/2}, p = -1..N, on one element; subcell p has width w_p dx.
inline std::vector<double> subfaces(double left, double dx, const Eigen::VectorXd& weights) {
  const int n = static_cast<int>(weights.size());
  std::vector<double> xs(n + 1);
  xs[0] = left;
  double acc = 0.0;
  for (int p = 0; p < n; ++p) {
    acc += weights[p];
    xs[p + 1] = left + acc * dx;
  }
  xs[n] = left + dx;
  return xs;
}

inline double minmod(double a, double b, double c) {
  if (a > 0.0 && b > 0.0 && c > 0.0) return std::min({a, b, c});
  if (a < 0.0 && b < 0.0 && c < 0.0) return std::max({a, b, c});
  return 0.0;
}

/// MUSCL-Hancock predictor on the subcells of one element, writing the
/// states seen at the left and right edge of every subcell.
///
/// u: nodal values, xs: node coordinates, faces: subfaces (n+1 entries),
/// ul/xl and ur/xr: neighbouring nodal values across the element faces.
/// Slopes are minmod of the one-sided and centred differences, reconstructed
/// about the solution point. If any reconstructed or predicted state is
/// inadmissible the slope is halved, and set to zero after a few attempts.
/// slope_scale, when given, forces a fixed multiplier on every slope.
template <ConservationLaw M>
void muscl_hancock_traces(const M& model, std::span<const typename M::state_type> u, std::span<const double> xs,
                          std::span<const double> faces, const typename M::state_type& ul, double xl,
                          const typename M::state_type& ur, double xr, double tau,
                          std::span<typename M::state_type> left, std::span<typename M::state_type> right,
                          double slope_scale = 1.0) {
  using S = typename M::state_type;
  const int n = static_cast<int>(u.size());
  for (int p = 0; p < n; ++p) {
    const S& um = p == 0 ? ul : u[p - 1];
    const S& up = p == n - 1 ? ur : u[p + 1];
    const double xm = p == 0 ? xl : xs[p - 1];
    const double xp = p == n - 1 ? xr : xs[p + 1];
    S slope;
    for (int v = 0; v < M::nvar; ++v) {
      const double back = (u[p][v] - um[v]) / (xs[p] - xm);
      const double fwd = (up[v] - u[p][v]) / (xp - xs[p]);
      const double ctr = (up[v] - um[v]) / (xp - xm);
      slope[v] = minmod(back, ctr, fwd);
    }
    const double hl = faces[p] - xs[p];
    const double hr = faces[p + 1] - xs[p];
    const double width = faces[p + 1] - faces[p];
    double scale = slope_scale;
    for (int attempt = 0;; ++attempt) {
      const S a = u[p] + scale * hl * slope;
      const S b = u[p] + scale * hr * slope;
      const S df = model.flux(b, xs[p]) - model.flux(a, xs[p]);
      left[p] = a - 0.5 * tau / width * df;
      right[p] = b - 0.5 * tau / width * df;
      const bool ok = first_violation(model, a) < 0 && first_violation(model, b) < 0 &&
                      first_violation(model, left[p]) < 0 && first_violation(model, right[p]) < 0;
      if (ok || scale == 0.0) break;
      scale = attempt < 8 ? 0.5 * scale : 0.0;
    }
  }
}

/// Interior subcell fluxes f_{p+1/2}, p = 0..N-1.
template <ConservationLaw M>
void subcell_fluxes(const M& model, std::span<const typename M::state_type> left,
                    std::span<const typename M::state_type> right, std::span<const double> faces,
                    std::span<typename M::state_type> out) {
  const int n = static_cast<int>(left.size());
  for (int p = 0; p + 1 < n; ++p) out[p] = rusanov_flux(model, right[p], left[p + 1], faces[p + 1]);
}

/// Finite-volume update on the subcells of one element over time tau, with
/// element-face fluxes Fl, Fr shared with the high-order scheme.
template <ConservationLaw M>
void low_order_update(std::span<const typename M::state_type> u, std::span<const typename M::state_type> fsub,
                      const typename M::state_type& Fl, const typename M::state_type& Fr,
                      const Eigen::VectorXd& weights, double dx, double tau,
                      std::span<typename M::state_type> out) {
  const int n = static_cast<int>(u.size());
  for (int p = 0; p < n; ++p) {
    const auto& fl = p == 0 ? Fl : fsub[p - 1];
    const auto& fr = p == n - 1 ? Fr : fsub[p];
    out[p] = u[p] - tau / (weights[p] * dx) * (fr - fl);
  }
}

template <ConservationLaw M>
void blend_update(std::span<const typename M::state_type> high, std::span<const typename M::state_type> low,
                  double alpha, std::span<typename M::state_type> out) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::logic_error("blending coefficient outside [0,1]");
  for (std::size_t p = 0; p < high.size(); ++p) out[p] = (1.0 - alpha) * high[p] + alpha * low[p];
}

/// theta in [0,1] so that p(low + theta (cand - low)) >= eps, given p(low) >= eps.
inline double limiter_theta(double eps, double p_low, double p_cand) {
  if (p_cand >= eps) return 1.0;
  return std::min(std::abs((eps - p_low) / (p_cand - p_low)), 1.0);
}

/// Tentative low-order state next to a face as an affine function of the
/// face flux: u~ = base + coef * F.
template <ConservationLaw M>
struct FaceNeighbour {
  typename M::state_type base;
  double coef = 0.0;
  bool active = true;

  typename M::state_type operator()(const typename M::state_type& F) const { return base + coef * F; }
};

/// Node N of the element left of the face: u - c (F - f_{N-1/2}).
template <ConservationLaw M>
FaceNeighbour<M> left_neighbour(const typename M::state_type& u, const typename M::state_type& f_inner, double c) {
  return {u + c * f_inner, -c, true};
}

/// Node 0 of the element right of the face: u - c (f_{1/2} - F).
template <ConservationLaw M>
FaceNeighbour<M> right_neighbour(const typename M::state_type& u, const typename M::state_type& f_inner, double c) {
  return {u - c * f_inner, c, true};
}

/// Shifts the candidate face flux towards the low-order flux one constraint
/// at a time until both neighbouring low-order updates keep a fraction of
/// their low-order admissibility margin. Returns the limited flux; theta_out
/// receives the factor applied for each constraint.
template <ConservationLaw M>
typename M::state_type limit_face_flux(const M& model, const typename M::state_type& candidate,
                                       const typename M::state_type& low, const FaceNeighbour<M>& left,
                                       const FaceNeighbour<M>& right, double fraction,
                                       std::array<double, M::nconstraints>* theta_out = nullptr) {
  using S = typename M::state_type;
  S F = candidate;
  const std::array<const FaceNeighbour<M>*, 2> sides{&left, &right};
  std::array<S, 2> lowu;
  for (int j = 0; j < 2; ++j) {
    if (!sides[j]->active) continue;
    lowu[j] = (*sides[j])(low);
    if (const int k = first_violation(model, lowu[j]); k >= 0)
      throw AdmissibilityError("low-order update inadmissible next to a face: " + constraint_name<M>(k), -1,
                               j == 0 ? -1 : 0, constraint_name<M>(k), constraint_value(model, lowu[j], k));
  }
  for (int k = 0; k < M::nconstraints; ++k) {
    double theta = 1.0;
    for (int j = 0; j < 2; ++j) {
      if (!sides[j]->active) continue;
      const double p_low = model.constraints(lowu[j])[k];
      const double eps = fraction * p_low;
      const S cand = (*sides[j])(F);
      const double p_cand = cand.allFinite() ? model.constraints(cand)[k] : -INFINITY;
      theta = std::min(theta, std::isfinite(p_cand) ? limiter_theta(eps, p_low, p_cand) : 0.0);
    }
    if (theta <= 0.0) F = low;
    else if (theta < 1.0) F = theta * F + (1.0 - theta) * low;
    if (theta_out) (*theta_out)[k] = theta;
  }
  return F;
}

/// Squeezes nodal values towards the element mean, one constraint at a time,
/// so that every node keeps a fraction of the mean's margin. Returns the
/// overall factor (1 = untouched).
template <ConservationLaw M>
double scaling_limiter(const M& model, std::span<typename M::state_type> u, const Eigen::VectorXd& weights,
                       double fraction = 0.1, int element = -1) {
  using S = typename M::state_type;
  S mean = S::Zero();
  for (std::size_t p = 0; p < u.size(); ++p) mean += weights[p] * u[p];
  if (const int k = first_violation(model, mean); k >= 0)
    throw AdmissibilityError("element mean inadmissible: " + constraint_name<M>(k), element, -1,
                             constraint_name<M>(k), constraint_value(model, mean, k));
  double total = 1.0;
  for (int k = 0; k < M::nconstraints; ++k) {
    const double p_mean = model.constraints(mean)[k];
    const double eps = fraction * p_mean;
    double theta = 1.0;
    for (const S& v : u) {
      const double pv = v.allFinite() ? model.constraints(v)[k] : -INFINITY;
      theta = std::min(theta, std::isfinite(pv) ? limiter_theta(eps, p_mean, pv) : 0.0);
    }
    if (theta < 1.0) {
      for (S& v : u) v = theta > 0.0 ? S(mean + theta * (v - mean)) : mean;
      total *= theta;
    }
  }
  return total;
}

}  // namespace mdrk
