#pragma once

#include <array>
#include <memory>
#include <vector>

#include "mdrk/alw.hpp"
#include "mdrk/solver.hpp"
#include "mdrk/stability.hpp"

namespace mdrk {

/// Flux reconstruction semi-discretisation advanced by the five-stage,
/// fourth-order SSPRK scheme of Spiteri and Ruuth (Shu-Osher form).
template <ConservationLaw M>
class RkfrSolver {
 public:
  using S = typename M::state_type;

  /// cfl <= 0 selects cs times the Fourier limit of the scheme.
  RkfrSolver(M model, std::shared_ptr<const ReferenceOperators> ops, BoundarySpec<M> bc, Grid grid,
             double cfl = 0.0, double cs = 0.98)
      : model_(std::move(model)), ops_(std::move(ops)), bc_(std::move(bc)), grid_(std::move(grid)) {
    if ((bc_.left == BoundaryKind::Periodic) != (bc_.right == BoundaryKind::Periodic))
      throw ConfigError("periodic boundaries must be periodic on both sides");
    cfl_ = cs * (cfl > 0.0 ? cfl : find_rkfr_cfl(*ops_).sigma);
    nel_ = grid_.size();
    n_ = ops_->size();
    x_.resize(static_cast<std::size_t>(nel_) * n_);
    for (int e = 0; e < nel_; ++e)
      for (int p = 0; p < n_; ++p) x_[e * n_ + p] = node_coordinate(grid_, *ops_, e, p);
  }

  double cfl() const { return cfl_; }
  const Grid& grid() const { return grid_; }

  double compute_dt(const SolutionField<M>& field, double t_final) const {
    double dt = std::numeric_limits<double>::infinity();
    for (int e = 0; e < nel_; ++e) {
      const S mean = element_mean(field, *ops_, e);
      double a = std::max(model_.speed_bound(mean, grid_.left(e)), model_.speed_bound(mean, grid_.right(e)));
      for (int p = 0; p < n_; ++p) a = std::max(a, model_.speed_bound(mean, x_[e * n_ + p]));
      if (a > 0.0) dt = std::min(dt, grid_.dx(e) / a);
    }
    return std::min(cfl_ * dt, t_final - field.t);
  }

  void step(SolutionField<M>& field, double dt) {
    const double t = field.t;
    const std::vector<S>& u0 = field.u;
    std::vector<S> L(u0.size());

    residual(u0, t, L);
    const auto u1 = combine({{1.0, &u0}}, 0.391752226571890 * dt, L);
    const double c1 = 0.391752226571890;
    residual(u1, t + c1 * dt, L);
    const auto u2 = combine({{0.444370493651235, &u0}, {0.555629506348765, &u1}}, 0.368410593050371 * dt, L);
    const double c2 = 0.555629506348765 * c1 + 0.368410593050371;
    residual(u2, t + c2 * dt, L);
    const auto u3 = combine({{0.620101851488403, &u0}, {0.379898148511597, &u2}}, 0.251891774271694 * dt, L);
    const double c3 = 0.379898148511597 * c2 + 0.251891774271694;
    std::vector<S> L3 = L;
    residual(u3, t + c3 * dt, L3);
    const auto u4 = combine({{0.178079954393132, &u0}, {0.821920045606868, &u3}}, 0.544974750228521 * dt, L3);
    const double c4 = 0.821920045606868 * c3 + 0.544974750228521;
    residual(u4, t + c4 * dt, L);
    std::vector<S> un(u0.size());
    for (std::size_t i = 0; i < un.size(); ++i)
      un[i] = 0.517231671970585 * u2[i] + 0.096059710526147 * u3[i] + 0.063692468666290 * dt * L3[i] +
              0.386708617503269 * u4[i] + 0.226007483236906 * dt * L[i];
    for (std::size_t i = 0; i < un.size(); ++i) {
      if (const int k = first_violation(model_, un[i]); k >= 0) {
        const int e = static_cast<int>(i) / n_;
        throw AdmissibilityError("inadmissible state in RK step: " + constraint_name<M>(k), e,
                                 static_cast<int>(i) % n_, constraint_name<M>(k), constraint_value(model_, un[i], k));
      }
    }
    field.u = std::move(un);
    field.t = t + dt;
  }

 private:
  std::vector<S> combine(std::initializer_list<std::pair<double, const std::vector<S>*>> terms, double c,
                         const std::vector<S>& L) const {
    std::vector<S> out(L.size());
    for (std::size_t i = 0; i < L.size(); ++i) {
      S acc = c * L[i];
      for (const auto& [w, v] : terms) acc += w * (*v)[i];
      out[i] = acc;
    }
    return out;
  }

  S ghost_trace(BoundaryKind kind, const S& in, double xb, double t) const {
    switch (kind) {
      case BoundaryKind::Transmissive:
        return in;
      case BoundaryKind::Reflective:
        if constexpr (requires(const M& m, const S& u) { m.reflect(u); }) return model_.reflect(in);
        break;
      case BoundaryKind::Dirichlet:
        return bc_.exact(xb, t);
      case BoundaryKind::Periodic:
        break;
    }
    throw ConfigError("unsupported boundary for the RK baseline");
  }

  void residual(const std::vector<S>& u, double t, std::vector<S>& L) const {
    std::vector<S> f(u.size());
    std::vector<S> ul(nel_), ur(nel_);
    for (int e = 0; e < nel_; ++e) {
      const std::span<const S> ue(u.data() + e * n_, n_);
      for (int p = 0; p < n_; ++p) f[e * n_ + p] = model_.flux(ue[p], x_[e * n_ + p]);
      ul[e] = extrapolate<S>(ops_->VL, ue);
      ur[e] = extrapolate<S>(ops_->VR, ue);
    }
    std::vector<S> Fn(nel_ + 1);
    for (int i = 1; i < nel_; ++i) Fn[i] = rusanov_flux(model_, ur[i - 1], ul[i], grid_.faces[i]);
    if (bc_.periodic()) {
      Fn[0] = rusanov_flux(model_, ur[nel_ - 1], ul[0], grid_.lo());
      Fn[nel_] = Fn[0];
    } else {
      Fn[0] = rusanov_flux(model_, ghost_trace(bc_.left, ul[0], grid_.lo(), t), ul[0], grid_.lo());
      Fn[nel_] = rusanov_flux(model_, ur[nel_ - 1], ghost_trace(bc_.right, ur[nel_ - 1], grid_.hi(), t), grid_.hi());
    }
    std::array<S, MdrkSolver<M>::kMaxNodes> r;
    for (int e = 0; e < nel_; ++e) {
      fr_flux_derivative<S>(*ops_, std::span<const S>(f.data() + e * n_, n_), Fn[e], Fn[e + 1],
                            std::span<S>(r.data(), n_));
      for (int p = 0; p < n_; ++p) {
        L[e * n_ + p] = -r[p] / grid_.dx(e);
        if constexpr (M::has_source) L[e * n_ + p] += model_.source(u[e * n_ + p], x_[e * n_ + p], t);
      }
    }
  }

  M model_;
  std::shared_ptr<const ReferenceOperators> ops_;
  BoundarySpec<M> bc_;
  Grid grid_;
  double cfl_ = 0.0;
  int nel_ = 0;
  int n_ = 0;
  std::vector<double> x_;
};

}  // namespace mdrk
