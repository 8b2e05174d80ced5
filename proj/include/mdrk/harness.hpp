#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mdrk/field.hpp"
#include "mdrk/scheme.hpp"

namespace mdrk {

// ---- configuration ----

struct RunConfig {
  std::string case_id = "linadv_sine";
  SchemeConfig scheme;
  int elements = 0;       // 0: case default
  double t_final = -1.0;  // < 0: case default
  std::string integrator = "mdrk";  // mdrk | rkfr
  std::string boundary_left;        // empty: case default
  std::string boundary_right;
  int output_every = 0;  // snapshot every k steps, 0: final only
  std::string output;    // snapshot path prefix, empty: none
  bool diagnostics = false;
  long max_steps = 10000000;
};

/// key is "section.name", e.g. scheme.cfl, blend.alpha_max, run.case.
void set_option(RunConfig& cfg, const std::string& key, const std::string& value);
/// "key=value"
void apply_override(RunConfig& cfg, const std::string& assignment);
/// INI file with [run], [scheme] and [blend] sections.
RunConfig load_config(const std::string& path, RunConfig base = {});
/// Every knob with its resolved value, in a fixed order.
std::vector<std::pair<std::string, std::string>> config_entries(const RunConfig& cfg);
/// scheme.cfl, or the default for the case when it is unset.
double resolved_cfl(const RunConfig& cfg);
std::uint64_t fnv1a(const std::string& s);
std::string config_hash(const RunConfig& cfg);
/// "# meta: key=value ..." line for CSV output.
std::string meta_line(const RunConfig& cfg);

// ---- case catalog ----

enum class ModelKind { LinearAdvection, VariableAdvection, Burgers, Euler, EulerManufactured };

struct CaseSpec {
  std::string id;
  ModelKind model = ModelKind::LinearAdvection;
  double lo = 0.0, hi = 1.0;
  BoundaryKind left = BoundaryKind::Periodic;
  BoundaryKind right = BoundaryKind::Periodic;
  double t_final = 1.0;
  int elements = 40;
  bool analytic = false;  // exact solution available, otherwise file reference
  bool needs_limiter = false;
  // conserved variables at x; dx is the element width of the run
  std::function<std::vector<double>(double x, double dx)> initial;
  // default CFL from the system analysis instead of the scalar table
  bool system_cfl = false;
  // Dirichlet data is the initial state at the boundary, held fixed
  bool inflow_from_initial = false;
};

const std::vector<CaseSpec>& case_catalog();
const CaseSpec& find_case(const std::string& id);
int variable_count(ModelKind m);
/// Column names of the snapshot CSV: conserved for scalars, (rho, v, p) for Euler.
std::vector<std::string> display_names(ModelKind m);

// ---- norms, snapshots, references ----

struct Snapshot {
  std::vector<std::string> names;
  std::vector<double> x;
  std::vector<double> weight;  // dx_e w_p
  std::vector<std::vector<double>> values;  // [node][var]
  double t = 0.0;
};

template <ConservationLaw M>
Snapshot conserved_snapshot(const SolutionField<M>& field, const ReferenceOperators& ops) {
  Snapshot s;
  s.t = field.t;
  for (int v = 0; v < M::nvar; ++v) s.names.push_back("u" + std::to_string(v));
  for (int e = 0; e < field.elements(); ++e)
    for (int p = 0; p < ops.size(); ++p) {
      s.x.push_back(node_coordinate(field.grid, ops, e, p));
      s.weight.push_back(field.grid.dx(e) * ops.weights()[p]);
      const auto& u = field.at(e, p);
      s.values.emplace_back(u.data(), u.data() + M::nvar);
    }
  return s;
}

/// Conserved to displayed variables, in place.
void to_display(Snapshot& s, ModelKind m, double gamma = 1.4);

struct ErrorNorms {
  std::vector<double> l2;
  std::vector<double> linf;
};

/// L2 by the nodal quadrature, Linf over nodes.
ErrorNorms error_norms(const Snapshot& s, const std::function<std::vector<double>(double x)>& exact);

void write_snapshot(std::ostream& os, const Snapshot& s, const std::string& meta);

struct ReferenceProfile {
  std::vector<std::string> names;
  std::vector<double> x;
  std::vector<std::vector<double>> columns;  // [var][row]

  struct Sample {
    double value = 0.0;
    bool clamped = false;
  };
  /// Piecewise-linear; outside [x0, xn] the end value is returned and flagged.
  Sample at(double xq, int var = 0) const;
};

ReferenceProfile ingest_reference(std::istream& is);
ReferenceProfile ingest_reference_file(const std::string& path);

// ---- runs ----

struct RunHooks {
  std::function<void(long step, const Snapshot&)> snapshot;  // display variables
  std::ostream* diagnostics = nullptr;
  // after every accepted step: step, t, dt, conserved snapshot
  std::function<void(long step, double t, double dt, const Snapshot&)> on_step;
};

struct RunResult {
  std::string case_id;
  long steps = 0;
  long retries = 0;
  double t = 0.0;
  double wall = 0.0;
  double cfl = 0.0;  // cs * cfl used
  double min_density = 0.0;   // Euler: smallest nodal value seen over all stages
  double min_pressure = 0.0;
  double mass_drift = 0.0;  // max_n |M^n - M^0| / max(|M^0|, |u^0|_L1), first variable
  double mean_identity = 0.0;  // MDRK: max per-step residual of the element-mean update
  Snapshot solution;  // conserved
  std::optional<ErrorNorms> errors;
};

RunResult run_case(const RunConfig& cfg, const RunHooks& hooks = {});

struct ConvergenceReport {
  std::string case_id;
  std::vector<int> meshes;
  std::vector<std::string> names;
  std::vector<std::vector<double>> l2, linf;              // [mesh][var]
  std::vector<std::vector<double>> l2_order, linf_order;  // [pair][var]
  std::vector<double> wall;
  bool monotone = true;
};

ConvergenceReport convergence_suite(const std::string& case_id, const std::vector<int>& meshes, RunConfig cfg);
void write_convergence(std::ostream& os, const ConvergenceReport& r, const std::string& meta);

}  // namespace mdrk
