#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <span>
#include <vector>

#include "mdrk/alw.hpp"
#include "mdrk/blending.hpp"
#include "mdrk/field.hpp"
#include "mdrk/scheme.hpp"
#include "mdrk/smoothness.hpp"

namespace mdrk {

template <ConservationLaw M>
struct BoundarySpec {
  using state_type = typename M::state_type;

  BoundaryKind left = BoundaryKind::Periodic;
  BoundaryKind right = BoundaryKind::Periodic;
  // boundary data for Dirichlet sides
  std::function<state_type(double x, double t)> exact;

  bool periodic() const { return left == BoundaryKind::Periodic; }
};

template <ConservationLaw M>
struct StageDiagnostics {
  std::vector<typename M::state_type> face_flux;  // nel+1
  std::vector<double> alpha;                      // per element, empty without blending
  std::vector<std::array<double, M::nconstraints>> theta;  // per face
  std::vector<double> scaling;                    // per element
};

template <ConservationLaw M>
struct StepReport {
  double dt = 0.0;
  bool retried = false;
  std::array<StageDiagnostics<M>, 2> stage;
};

/// Two-stage MDRK flux reconstruction solver on a fixed grid.
template <ConservationLaw M>
class MdrkSolver {
 public:
  using S = typename M::state_type;
  static constexpr int K = M::nconstraints;
  static constexpr int kMaxNodes = 16;

  MdrkSolver(M model, std::shared_ptr<const ReferenceOperators> ops, SchemeConfig cfg, BoundarySpec<M> bc,
             Grid grid)
      : model_(std::move(model)),
        ops_(std::move(ops)),
        cfg_(cfg),
        bc_(std::move(bc)),
        grid_(std::move(grid)),
        indicator_(ops_->nodeset, cfg_.blend) {
    cfg_.degree = ops_->degree();
    cfg_.points = ops_->nodeset.kind;
    cfg_.correction = ops_->correction;
    if ((bc_.left == BoundaryKind::Periodic) != (bc_.right == BoundaryKind::Periodic))
      throw ConfigError("periodic boundaries must be periodic on both sides");
    if ((bc_.left == BoundaryKind::Dirichlet || bc_.right == BoundaryKind::Dirichlet) && !bc_.exact)
      throw ConfigError("Dirichlet boundary needs boundary data");
    if constexpr (!requires(const M& m, const S& u) { m.reflect(u); }) {
      if (bc_.left == BoundaryKind::Reflective || bc_.right == BoundaryKind::Reflective)
        throw ConfigError("reflective boundaries are only defined for the Euler equations");
    }
    if (ops_->size() > kMaxNodes) throw ConfigError("degree too large");
    if (cfg_.limiter != Limiter::None && ops_->degree() < 1)
      throw ConfigError("blending needs degree >= 1");
    if (!(cfg_.cs > 0.0 && cfg_.cs <= 1.0)) throw ConfigError("safety factor must lie in (0, 1]");
    cfl_ = effective_cfl(cfg_);
    allocate();
  }

  const M& model() const { return model_; }
  const ReferenceOperators& ops() const { return *ops_; }
  const SchemeConfig& config() const { return cfg_; }
  const Grid& grid() const { return grid_; }
  const BoundarySpec<M>& boundary() const { return bc_; }
  /// cs * cfl actually used by compute_dt.
  double cfl() const { return cfl_; }
  bool strict_stencil() const { return cfg_.limiter == Limiter::None && K > 0; }

  SolutionField<M> make_field(const std::function<S(double)>& init, double t0 = 0.0) const {
    return mdrk::make_field<M>(grid_, *ops_, init, t0);
  }

  /// Largest stable step, cs * cfl * min dx / speed.
  double max_dt(const SolutionField<M>& field) const {
    double dt = std::numeric_limits<double>::infinity();
    const int n = ops_->size();
    for (int e = 0; e < nel_; ++e) {
      const S mean = element_mean(field, *ops_, e);
      double a = std::max(model_.speed_bound(mean, grid_.left(e)), model_.speed_bound(mean, grid_.right(e)));
      for (int p = 0; p < n; ++p) a = std::max(a, model_.speed_bound(mean, x_[idx(e, p)]));
      if (a > 0.0) dt = std::min(dt, grid_.dx(e) / a);
    }
    return cfl_ * dt;
  }

  /// max_dt clamped to the remaining time.
  double compute_dt(const SolutionField<M>& field, double t_final) const {
    return std::min(max_dt(field), t_final - field.t);
  }

  /// One step; a stencil failure without limiter is retried once with dt/2.
  StepReport<M> step(SolutionField<M>& field, double dt) {
    try {
      return step_once(field, dt);
    } catch (const StencilError&) {
      if (!strict_stencil()) throw;
    }
    StepReport<M> r = step_once(field, 0.5 * dt);
    r.retried = true;
    return r;
  }

  /// One step of size dt without retry. field is left untouched on failure.
  StepReport<M> step_once(SolutionField<M>& field, double dt) {
    StepReport<M> report;
    report.dt = dt;
    const double t = field.t;
    un_ = field.u;
    for (int e = 0; e < nel_; ++e) mean_[e] = element_mean(field, *ops_, e);

    stage(0, t, dt, un_, report.stage[0]);
    ustar_ = out_;
    stage(1, t, dt, ustar_, report.stage[1]);
    field.u = out_;
    field.t = t + dt;
    return report;
  }

  /// Nodal solution after the first stage of the last step.
  const std::vector<S>& last_stage1() const { return ustar_; }

 private:
  std::size_t idx(int e, int p) const { return static_cast<std::size_t>(e) * n_ + p; }
  std::size_t side(int e, int s) const { return static_cast<std::size_t>(e) * 2 + s; }

  void allocate() {
    nel_ = grid_.size();
    n_ = ops_->size();
    const std::size_t nn = static_cast<std::size_t>(nel_) * n_;
    x_.resize(nn);
    for (int e = 0; e < nel_; ++e)
      for (int p = 0; p < n_; ++p) x_[idx(e, p)] = node_coordinate(grid_, *ops_, e, p);
    for (auto* v : {&f_, &u1_, &f1_, &s_, &s1_, &fs_, &us1_, &fs1_, &ss1_, &F_, &U_, &Src_, &uL_, &out_,
                    &trl_, &trr_})
      v->assign(nn, S::Zero());
    for (auto* v : {&fa_, &f1a_, &recF_, &recD_}) v->assign(static_cast<std::size_t>(nel_) * 2, S::Zero());
    mean_.assign(nel_, S::Zero());
    Fnum_.assign(nel_ + 1, S::Zero());
    flow_.assign(nel_ + 1, S::Zero());
    fsub_.assign(static_cast<std::size_t>(nel_) * std::max(n_ - 1, 1), S::Zero());
    alpha_.assign(nel_, 0.0);
    subfaces_.resize(static_cast<std::size_t>(nel_) * (n_ + 1));
    for (int e = 0; e < nel_; ++e) {
      const auto sf = subfaces(grid_.left(e), grid_.dx(e), ops_->weights());
      std::copy(sf.begin(), sf.end(), subfaces_.begin() + static_cast<std::ptrdiff_t>(e) * (n_ + 1));
    }
    const auto gauss = build_nodeset(3, PointKind::GL);
    gauss_x_ = gauss.nodes;
    gauss_w_ = gauss.weights;
  }

  template <class V>
  std::span<const S> span_of(const V& v, int e) const {
    return {v.data() + idx(e, 0), static_cast<std::size_t>(n_)};
  }
  template <class V>
  std::span<S> span_of(V& v, int e) {
    return {v.data() + idx(e, 0), static_cast<std::size_t>(n_)};
  }

  S source_at(const S& u, double x, double t) const {
    if constexpr (M::has_source) return model_.source(u, x, t);
    else return S::Zero();
  }

  // ---- element phase ----

  void element_stage1(int e, double t, double dt) {
    const bool strict = strict_stencil();
    const double dx = grid_.dx(e);
    const auto u = span_of(un_, e);
    for (int p = 0; p < n_; ++p) {
      const std::size_t i = idx(e, p);
      f_[i] = stencil_flux(model_, u[p], x_[i], strict);
      if constexpr (M::has_source) s_[i] = source_at(u[p], x_[i], t);
    }
    local_solution_derivative<S>(ops_->D, span_of(f_, e), dt / dx, span_of(u1_, e));
    if constexpr (M::has_source) add_source_increment<S>(span_of(s_, e), dt, span_of(u1_, e));
    for (int p = 0; p < n_; ++p) {
      const std::size_t i = idx(e, p);
      f1_[i] = flux_time_derivative(model_, u[p], u1_[i], x_[i], strict);
      F_[i] = stage1_average(f_[i], f1_[i]);
      U_[i] = stage1_average(u[p], u1_[i]);
      if constexpr (M::has_source) {
        s1_[i] = source_time_derivative(model_, u[p], u1_[i], x_[i], t, dt);
        Src_[i] = stage1_average(s_[i], s1_[i]);
      }
    }
    for (int sd = 0; sd < 2; ++sd) {
      const Eigen::VectorXd& V = sd == 0 ? ops_->VL : ops_->VR;
      const double xf = sd == 0 ? grid_.left(e) : grid_.right(e);
      const std::size_t k = side(e, sd);
      if (cfg_.face == FaceScheme::AE) {
        recF_[k] = extrapolate<S>(V, span_of(F_, e));
      } else {
        const S ua = extrapolate<S>(V, u);
        const S u1a = extrapolate<S>(V, span_of(u1_, e));
        fa_[k] = stencil_flux(model_, ua, xf, strict);
        f1a_[k] = flux_time_derivative(model_, ua, u1a, xf, strict);
        recF_[k] = stage1_average(fa_[k], f1a_[k]);
      }
      recD_[k] = cfg_.dissipation == Dissipation::D1 ? extrapolate<S>(V, u) : extrapolate<S>(V, span_of(U_, e));
    }
  }

  void element_stage2(int e, double t, double dt) {
    const bool strict = strict_stencil();
    const double dx = grid_.dx(e);
    const double th = t + 0.5 * dt;
    const auto u = span_of(un_, e);
    const auto us = span_of(ustar_, e);
    for (int p = 0; p < n_; ++p) {
      const std::size_t i = idx(e, p);
      fs_[i] = stencil_flux(model_, us[p], x_[i], strict);
    }
    local_solution_derivative<S>(ops_->D, span_of(fs_, e), dt / dx, span_of(us1_, e));
    if constexpr (M::has_source) {
      for (int p = 0; p < n_; ++p) us1_[idx(e, p)] += dt * source_at(us[p], x_[idx(e, p)], th);
    }
    for (int p = 0; p < n_; ++p) {
      const std::size_t i = idx(e, p);
      fs1_[i] = flux_time_derivative(model_, us[p], us1_[i], x_[i], strict);
      F_[i] = stage2_average(f_[i], f1_[i], fs1_[i]);
      U_[i] = stage2_average(u[p], u1_[i], us1_[i]);
      if constexpr (M::has_source) {
        ss1_[i] = source_time_derivative(model_, us[p], us1_[i], x_[i], th, dt);
        Src_[i] = stage2_average(s_[i], s1_[i], ss1_[i]);
      }
    }
    for (int sd = 0; sd < 2; ++sd) {
      const Eigen::VectorXd& V = sd == 0 ? ops_->VL : ops_->VR;
      const double xf = sd == 0 ? grid_.left(e) : grid_.right(e);
      const std::size_t k = side(e, sd);
      if (cfg_.face == FaceScheme::AE) {
        recF_[k] = extrapolate<S>(V, span_of(F_, e));
      } else {
        const S usa = extrapolate<S>(V, us);
        const S us1a = extrapolate<S>(V, span_of(us1_, e));
        const S fs1a = flux_time_derivative(model_, usa, us1a, xf, strict);
        recF_[k] = stage2_average(fa_[k], f1a_[k], fs1a);
      }
      recD_[k] = cfg_.dissipation == Dissipation::D1 ? extrapolate<S>(V, u) : extrapolate<S>(V, span_of(U_, e));
    }
  }

  // ---- face phase ----

  struct Record {
    S F, D, mean;
  };

  Record interior_record(int e, int sd) const { return {recF_[side(e, sd)], recD_[side(e, sd)], mean_[e]}; }

  Record ghost_record(BoundaryKind kind, const Record& in, double xb, double t, double tau) const {
    switch (kind) {
      case BoundaryKind::Transmissive:
        return in;
      case BoundaryKind::Reflective:
        if constexpr (requires(const M& m, const S& u) { m.reflect(u); })
          return {model_.reflect_flux(in.F), model_.reflect(in.D), model_.reflect(in.mean)};
        break;
      case BoundaryKind::Dirichlet: {
        Record g{S::Zero(), S::Zero(), bc_.exact(xb, t)};
        for (int q = 0; q < gauss_x_.size(); ++q) {
          const S ue = bc_.exact(xb, t + gauss_x_[q] * tau);
          g.F += gauss_w_[q] * model_.flux(ue, xb);
          g.D += gauss_w_[q] * ue;
        }
        if (cfg_.dissipation == Dissipation::D1) g.D = g.mean;
        return g;
      }
      case BoundaryKind::Periodic:
        break;
    }
    throw std::logic_error("ghost record requested for periodic boundary");
  }

  S face_flux(const Record& l, const Record& r, double x) const {
    const double lambda = std::max(model_.speed_bound(l.mean, x), model_.speed_bound(r.mean, x));
    return numerical_flux(l.F, r.F, l.D, r.D, lambda);
  }

  void compute_face_fluxes(double t, double tau) {
    if (bc_.periodic()) {
      for (int i = 0; i < nel_; ++i) {
        const int l = (i - 1 + nel_) % nel_;
        Fnum_[i] = face_flux(interior_record(l, 1), interior_record(i, 0), grid_.faces[i]);
      }
      Fnum_[nel_] = Fnum_[0];
      return;
    }
    for (int i = 1; i < nel_; ++i)
      Fnum_[i] = face_flux(interior_record(i - 1, 1), interior_record(i, 0), grid_.faces[i]);
    const Record in0 = interior_record(0, 0);
    Fnum_[0] = face_flux(ghost_record(bc_.left, in0, grid_.lo(), t, tau), in0, grid_.lo());
    const Record in1 = interior_record(nel_ - 1, 1);
    Fnum_[nel_] = face_flux(in1, ghost_record(bc_.right, in1, grid_.hi(), t, tau), grid_.hi());
  }

  // ---- blending ----

  struct Node {
    S u;
    double x;
  };

  // Nodal value just across the left (sd = 0) or right (sd = 1) domain boundary.
  Node ghost_node(int sd, double t) const {
    const BoundaryKind kind = sd == 0 ? bc_.left : bc_.right;
    const double xb = sd == 0 ? grid_.lo() : grid_.hi();
    const int e = sd == 0 ? 0 : nel_ - 1;
    const int p = sd == 0 ? 0 : n_ - 1;
    const S& u = un_[idx(e, p)];
    const double xm = 2.0 * xb - x_[idx(e, p)];
    switch (kind) {
      case BoundaryKind::Periodic: {
        const int oe = sd == 0 ? nel_ - 1 : 0;
        const int op = sd == 0 ? n_ - 1 : 0;
        const double shift = sd == 0 ? -grid_.length() : grid_.length();
        return {un_[idx(oe, op)], x_[idx(oe, op)] + shift};
      }
      case BoundaryKind::Transmissive:
        return {u, xm};
      case BoundaryKind::Reflective:
        if constexpr (requires(const M& m, const S& v) { m.reflect(v); }) return {model_.reflect(u), xm};
        break;
      case BoundaryKind::Dirichlet:
        return {bc_.exact(xm, t), xm};
    }
    throw std::logic_error("unknown boundary kind");
  }

  // Low-order trace just across a domain boundary.
  S ghost_trace(int sd, double t, double tau) const {
    const BoundaryKind kind = sd == 0 ? bc_.left : bc_.right;
    const S& in = sd == 0 ? trl_[idx(0, 0)] : trr_[idx(nel_ - 1, n_ - 1)];
    switch (kind) {
      case BoundaryKind::Periodic:
        return sd == 0 ? trr_[idx(nel_ - 1, n_ - 1)] : trl_[idx(0, 0)];
      case BoundaryKind::Transmissive:
        return in;
      case BoundaryKind::Reflective:
        if constexpr (requires(const M& m, const S& v) { m.reflect(v); }) return model_.reflect(in);
        break;
      case BoundaryKind::Dirichlet: {
        const double xb = sd == 0 ? grid_.lo() : grid_.hi();
        return bc_.exact(xb, cfg_.limiter == Limiter::BlendMH ? t + 0.5 * tau : t);
      }
    }
    throw std::logic_error("unknown boundary kind");
  }

  void compute_alpha(const std::vector<S>& v) {
    std::array<double, kMaxNodes> q{};
    for (int e = 0; e < nel_; ++e) {
      for (int p = 0; p < n_; ++p) q[p] = model_.indicator(v[idx(e, p)]);
      alpha_[e] = indicator_.alpha(std::span<const double>(q.data(), n_));
    }
    if (cfg_.blend.smooth_neighbors) smooth_alpha(alpha_, bc_.periodic());
  }

  void compute_low_order_fluxes(double t, double tau) {
    const std::size_t nf = static_cast<std::size_t>(std::max(n_ - 1, 1));
    for (int e = 0; e < nel_; ++e) {
      const auto u = span_of(un_, e);
      const std::span<const double> faces(subfaces_.data() + static_cast<std::size_t>(e) * (n_ + 1), n_ + 1);
      if (cfg_.limiter == Limiter::BlendMH) {
        const Node l = e > 0 ? Node{un_[idx(e - 1, n_ - 1)], x_[idx(e - 1, n_ - 1)]} : ghost_node(0, t);
        const Node r = e < nel_ - 1 ? Node{un_[idx(e + 1, 0)], x_[idx(e + 1, 0)]} : ghost_node(1, t);
        muscl_hancock_traces<M>(model_, u, std::span<const double>(x_.data() + idx(e, 0), n_), faces, l.u, l.x,
                                r.u, r.x, tau, span_of(trl_, e), span_of(trr_, e));
      } else {
        for (int p = 0; p < n_; ++p) trl_[idx(e, p)] = trr_[idx(e, p)] = u[p];
      }
      subcell_fluxes<M>(model_, span_of(trl_, e), span_of(trr_, e), faces,
                        std::span<S>(fsub_.data() + e * nf, nf));
    }
    for (int i = 1; i < nel_; ++i)
      flow_[i] = rusanov_flux(model_, trr_[idx(i - 1, n_ - 1)], trl_[idx(i, 0)], grid_.faces[i]);
    flow_[0] = rusanov_flux(model_, ghost_trace(0, t, tau), trl_[idx(0, 0)], grid_.lo());
    flow_[nel_] = rusanov_flux(model_, trr_[idx(nel_ - 1, n_ - 1)], ghost_trace(1, t, tau), grid_.hi());
    if (bc_.periodic()) flow_[nel_] = flow_[0];
  }

  FaceNeighbour<M> neighbour_left_of_face(int e, double tau) const {
    const std::size_t nf = static_cast<std::size_t>(n_ - 1);
    const std::size_t i = idx(e, n_ - 1);
    S u = un_[i];
    if constexpr (M::has_source) u += tau * Src_[i];
    return left_neighbour<M>(u, fsub_[e * nf + nf - 1], tau / (ops_->weights()[n_ - 1] * grid_.dx(e)));
  }

  FaceNeighbour<M> neighbour_right_of_face(int e, double tau) const {
    const std::size_t nf = static_cast<std::size_t>(n_ - 1);
    const std::size_t i = idx(e, 0);
    S u = un_[i];
    if constexpr (M::has_source) u += tau * Src_[i];
    return right_neighbour<M>(u, fsub_[e * nf], tau / (ops_->weights()[0] * grid_.dx(e)));
  }

  void limit_face(int i, int l, int r, double tau, StageDiagnostics<M>& diag) {
    const double a = l < 0 ? alpha_[r] : r < 0 ? alpha_[l] : 0.5 * (alpha_[l] + alpha_[r]);
    const S candidate = (1.0 - a) * Fnum_[i] + a * flow_[i];
    FaceNeighbour<M> left{S::Zero(), 0.0, false};
    FaceNeighbour<M> right{S::Zero(), 0.0, false};
    if (l >= 0) left = neighbour_left_of_face(l, tau);
    if (r >= 0) right = neighbour_right_of_face(r, tau);
    std::array<double, K> theta;
    theta.fill(1.0);
    try {
      Fnum_[i] = limit_face_flux<M>(model_, candidate, flow_[i], left, right, cfg_.blend.positivity_fraction,
                                    &theta);
    } catch (const AdmissibilityError& err) {
      const int element = err.node() < 0 ? l : r;
      throw AdmissibilityError(err.what(), element, err.node() < 0 ? n_ - 1 : 0, err.constraint(), err.value());
    }
    diag.theta[i] = theta;
  }

  void limit_faces(double tau, StageDiagnostics<M>& diag) {
    diag.theta.assign(nel_ + 1, {});
    for (auto& th : diag.theta) th.fill(1.0);
    if (bc_.periodic()) {
      for (int i = 0; i < nel_; ++i) limit_face(i, (i - 1 + nel_) % nel_, i, tau, diag);
      Fnum_[nel_] = Fnum_[0];
      diag.theta[nel_] = diag.theta[0];
      return;
    }
    for (int i = 1; i < nel_; ++i) limit_face(i, i - 1, i, tau, diag);
    limit_face(0, -1, 0, tau, diag);
    limit_face(nel_, nel_ - 1, -1, tau, diag);
  }

  // ---- stage driver ----

  // st = 0: u* over dt/2; st = 1: u^{n+1} over dt. input is the stage's solution.
  void stage(int st, double t, double dt, const std::vector<S>& input, StageDiagnostics<M>& diag) {
    const double tau = st == 0 ? 0.5 * dt : dt;
    for (int e = 0; e < nel_; ++e) {
      if (st == 0) element_stage1(e, t, dt);
      else element_stage2(e, t, dt);
    }
    compute_face_fluxes(t, tau);

    const bool blend = cfg_.limiter != Limiter::None;
    if (blend) {
      compute_alpha(input);
      diag.alpha = alpha_;
      compute_low_order_fluxes(t, tau);
      limit_faces(tau, diag);
    }
    diag.face_flux = Fnum_;

    const std::size_t nf = static_cast<std::size_t>(std::max(n_ - 1, 1));
    std::array<S, kMaxNodes> r;
    if (blend) diag.scaling.assign(nel_, 1.0);
    for (int e = 0; e < nel_; ++e) {
      const double c = tau / grid_.dx(e);
      const auto u = span_of(un_, e);
      fr_flux_derivative<S>(*ops_, span_of(F_, e), Fnum_[e], Fnum_[e + 1], std::span<S>(r.data(), n_));
      auto out = span_of(out_, e);
      for (int p = 0; p < n_; ++p) {
        out[p] = u[p] - c * r[p];
        if constexpr (M::has_source) out[p] += tau * Src_[idx(e, p)];
      }
      if (blend) {
        auto low = span_of(uL_, e);
        low_order_update<M>(u, std::span<const S>(fsub_.data() + e * nf, n_ - 1), Fnum_[e], Fnum_[e + 1],
                            ops_->weights(), grid_.dx(e), tau, low);
        if constexpr (M::has_source)
          for (int p = 0; p < n_; ++p) low[p] += tau * Src_[idx(e, p)];
        if (alpha_[e] > 0.0) {
          std::array<S, kMaxNodes> high;
          std::copy(out.begin(), out.end(), high.begin());
          blend_update<M>(std::span<const S>(high.data(), n_), low, alpha_[e], out);
        }
        if constexpr (K > 0) {
          try {
            diag.scaling[e] = scaling_limiter<M>(model_, out, ops_->weights(), cfg_.blend.positivity_fraction, e);
          } catch (const AdmissibilityError& err) {
            throw AdmissibilityError(err.what(), e, -1, err.constraint(), err.value());
          }
        }
      }
      for (int p = 0; p < n_; ++p) {
        if (const int k = first_violation(model_, out[p]); k >= 0) {
          const double v = constraint_value(model_, out[p], k);
          throw AdmissibilityError("inadmissible state after stage " + std::to_string(st + 1) + ": " +
                                       constraint_name<M>(k) + " = " + std::to_string(v) + " at element " +
                                       std::to_string(e) + " node " + std::to_string(p),
                                   e, p, constraint_name<M>(k), v);
        }
      }
    }
  }

  M model_;
  std::shared_ptr<const ReferenceOperators> ops_;
  SchemeConfig cfg_;
  BoundarySpec<M> bc_;
  Grid grid_;
  SmoothnessIndicator indicator_;
  double cfl_ = 0.0;
  int nel_ = 0;
  int n_ = 0;

  std::vector<double> x_;
  std::vector<S> un_, ustar_, out_;
  std::vector<S> f_, u1_, f1_, s_, s1_;
  std::vector<S> fs_, us1_, fs1_, ss1_;
  std::vector<S> F_, U_, Src_;
  std::vector<S> fa_, f1a_, recF_, recD_;
  std::vector<S> mean_, Fnum_, flow_;
  std::vector<S> uL_, trl_, trr_, fsub_;
  std::vector<double> alpha_;
  std::vector<double> subfaces_;
  Eigen::VectorXd gauss_x_, gauss_w_;
};

}  // namespace mdrk
