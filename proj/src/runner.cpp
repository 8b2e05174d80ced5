#include <chrono>
#include <cmath>
#include <limits>
#include <ostream>

#include "mdrk/harness.hpp"
#include "mdrk/rkfr.hpp"
#include "mdrk/solver.hpp"

namespace mdrk {

namespace {

template <ConservationLaw M>
typename M::state_type to_state(const std::vector<double>& v) {
  typename M::state_type s;
  for (int i = 0; i < M::nvar; ++i) s[i] = v.at(i);
  return s;
}

template <ConservationLaw M>
void write_diagnostics(std::ostream& os, long step, const StepReport<M>& rep) {
  for (int st = 0; st < 2; ++st) {
    const auto& d = rep.stage[st];
    for (std::size_t e = 0; e < d.alpha.size(); ++e) {
      const double sc = e < d.scaling.size() ? d.scaling[e] : 1.0;
      if (d.alpha[e] <= 0.0 && sc >= 1.0) continue;
      os << step << ',' << st + 1 << ",element," << e << ',' << d.alpha[e] << ',' << sc;
      for (int k = 0; k < M::nconstraints; ++k) os << ",";
      os << '\n';
    }
    for (std::size_t i = 0; i < d.theta.size(); ++i) {
      bool active = false;
      for (double th : d.theta[i]) active = active || th < 1.0;
      if (!active) continue;
      os << step << ',' << st + 1 << ",face," << i << ",,";
      for (double th : d.theta[i]) os << ',' << th;
      os << '\n';
    }
  }
}

template <ConservationLaw M>
void write_diagnostics_header(std::ostream& os) {
  os << "step,stage,kind,index,alpha,scaling";
  for (int k = 0; k < M::nconstraints; ++k) os << ",theta_" << M::constraint_names()[k];
  os << '\n';
}

template <ConservationLaw M>
void track_minima(const M& model, const std::vector<typename M::state_type>& u, RunResult& r) {
  if constexpr (M::nconstraints == 2) {
    for (const auto& s : u) {
      const auto p = model.constraints(s);
      r.min_density = std::min(r.min_density, p[0]);
      r.min_pressure = std::min(r.min_pressure, p[1]);
    }
  }
}

template <ConservationLaw M>
RunResult run_model(const M& model, const CaseSpec& cs, const RunConfig& cfg, const RunHooks& hooks) {
  using S = typename M::state_type;
  const auto t0 = std::chrono::steady_clock::now();
  const int nel = cfg.elements > 0 ? cfg.elements : cs.elements;
  const double t_final = cfg.t_final >= 0.0 ? cfg.t_final : cs.t_final;
  const Grid grid = Grid::uniform(cs.lo, cs.hi, nel);
  const double dx = grid.dx(0);
  const auto ops = reference_operators(cfg.scheme.degree, cfg.scheme.points, cfg.scheme.correction);

  BoundarySpec<M> bc;
  bc.left = cfg.boundary_left.empty() ? cs.left : parse_boundary(cfg.boundary_left);
  bc.right = cfg.boundary_right.empty() ? cs.right : parse_boundary(cfg.boundary_right);
  if (cs.analytic) {
    const std::string id = cs.id;
    bc.exact = [id](double x, double t) { return to_state<M>(exact_solution(id, x, t)); };
  } else if (cs.inflow_from_initial) {
    bc.exact = [&cs, dx](double x, double) { return to_state<M>(cs.initial(x, dx)); };
  } else if (bc.left == BoundaryKind::Dirichlet || bc.right == BoundaryKind::Dirichlet) {
    throw ConfigError("case " + cs.id + " has no exact solution to impose as Dirichlet data");
  }

  RunResult r;
  r.case_id = cs.id;
  r.min_density = r.min_pressure = std::numeric_limits<double>::infinity();
  if constexpr (M::nconstraints != 2) r.min_density = r.min_pressure = NAN;

  SolutionField<M> field =
      make_field<M>(grid, *ops, [&](double x) { return to_state<M>(cs.initial(x, dx)); }, 0.0);
  for (std::size_t i = 0; i < field.u.size(); ++i)
    if (const int k = first_violation(model, field.u[i]); k >= 0)
      throw ConfigError("initial data of " + cs.id + " violates " + constraint_name<M>(k));
  track_minima(model, field.u, r);

  const bool use_rk = cfg.integrator == "rkfr";
  std::optional<MdrkSolver<M>> mdrk;
  std::optional<RkfrSolver<M>> rk;
  if (use_rk) {
    rk.emplace(model, ops, bc, grid, cfg.scheme.cfl, cfg.scheme.cs);
    r.cfl = rk->cfl();
  } else {
    SchemeConfig sc = cfg.scheme;
    sc.cfl = resolved_cfl(cfg);
    mdrk.emplace(model, ops, sc, bc, grid);
    r.cfl = mdrk->cfl();
  }

  const S m0 = total_mass(field, *ops);
  double scale = std::abs(m0[0]);
  {
    double l1 = 0.0;
    for (int e = 0; e < nel; ++e) l1 += grid.dx(e) * std::abs(element_mean(field, *ops, e)[0]);
    scale = std::max(scale, l1);
  }
  if (scale == 0.0) scale = 1.0;

  if (hooks.diagnostics && !use_rk) write_diagnostics_header<M>(*hooks.diagnostics);

  auto emit = [&](long step) {
    if (!hooks.snapshot) return;
    Snapshot s = conserved_snapshot(field, *ops);
    to_display(s, cs.model);
    hooks.snapshot(step, s);
  };

  const double t_eps = 1e-13 * std::max(1.0, std::abs(t_final));
  std::vector<S> mean_old(nel);
  while (t_final - field.t > t_eps) {
    if (r.steps >= cfg.max_steps) throw ConfigError("run.max_steps exceeded at t = " + std::to_string(field.t));
    const double t_before = field.t;
    try {
      if (use_rk) {
        const double dt = rk->compute_dt(field, t_final);
        rk->step(field, dt);
        if (hooks.on_step) hooks.on_step(r.steps + 1, field.t, dt, conserved_snapshot(field, *ops));
      } else {
        const double dt = mdrk->compute_dt(field, t_final);
        for (int e = 0; e < nel; ++e) mean_old[e] = element_mean(field, *ops, e);
        const StepReport<M> rep = mdrk->step(field, dt);
        if (rep.retried) ++r.retries;
        track_minima(model, mdrk->last_stage1(), r);
        if constexpr (!M::has_source) {
          const auto& F = rep.stage[1].face_flux;
          for (int e = 0; e < nel; ++e) {
            const S expect = mean_old[e] - rep.dt / grid.dx(e) * (F[e + 1] - F[e]);
            const S got = element_mean(field, *ops, e);
            const double d = (got - expect).cwiseAbs().maxCoeff() / std::max(1.0, expect.cwiseAbs().maxCoeff());
            r.mean_identity = std::max(r.mean_identity, d);
          }
        }
        if (hooks.diagnostics) write_diagnostics<M>(*hooks.diagnostics, r.steps + 1, rep);
        if (hooks.on_step) hooks.on_step(r.steps + 1, field.t, rep.dt, conserved_snapshot(field, *ops));
      }
    } catch (const AdmissibilityError& err) {
      throw AdmissibilityError("step " + std::to_string(r.steps + 1) + " (t = " + std::to_string(t_before) +
                                   "): " + err.what(),
                               err.element(), err.node(), err.constraint(), err.value());
    }
    ++r.steps;
    track_minima(model, field.u, r);
    const S m = total_mass(field, *ops);
    r.mass_drift = std::max(r.mass_drift, std::abs(m[0] - m0[0]) / scale);
    if (cfg.output_every > 0 && r.steps % cfg.output_every == 0) emit(r.steps);
  }
  if (cfg.output_every == 0 || r.steps % cfg.output_every != 0) emit(r.steps);

  r.t = field.t;
  r.solution = conserved_snapshot(field, *ops);
  if (cs.analytic) {
    const std::string id = cs.id;
    const double t = field.t;
    r.errors = error_norms(r.solution, [&](double x) { return exact_solution(id, x, t); });
  }
  r.wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace

RunResult run_case(const RunConfig& cfg, const RunHooks& hooks) {
  const CaseSpec& cs = find_case(cfg.case_id);
  if (cfg.integrator != "mdrk" && cfg.integrator != "rkfr") throw ConfigError("unknown integrator " + cfg.integrator);
  switch (cs.model) {
    case ModelKind::LinearAdvection:
      return run_model(LinearAdvection{}, cs, cfg, hooks);
    case ModelKind::VariableAdvection:
      return run_model(VariableAdvection{}, cs, cfg, hooks);
    case ModelKind::Burgers:
      return run_model(Burgers{}, cs, cfg, hooks);
    case ModelKind::Euler:
      return run_model(Euler{}, cs, cfg, hooks);
    case ModelKind::EulerManufactured:
      return run_model(EulerManufactured{}, cs, cfg, hooks);
  }
  throw ConfigError("unsupported model");
}

}  // namespace mdrk
