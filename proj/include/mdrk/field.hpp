#pragma once

#include <cassert>
#include <functional>
#include <vector>

#include "mdrk/models.hpp"
#include "mdrk/operators.hpp"

namespace mdrk {

/// Element boundaries x_{e-1/2}, e = 0..n.
struct Grid {
  std::vector<double> faces;

  static Grid uniform(double lo, double hi, int elements) {
    if (elements < 1) throw ConfigError("mesh needs at least one element");
    if (!(hi > lo)) throw ConfigError("empty domain");
    Grid g;
    g.faces.resize(elements + 1);
    const double h = (hi - lo) / elements;
    for (int i = 0; i <= elements; ++i) g.faces[i] = lo + i * h;
    g.faces.back() = hi;
    return g;
  }

  int size() const { return static_cast<int>(faces.size()) - 1; }
  double left(int e) const { return faces[e]; }
  double right(int e) const { return faces[e + 1]; }
  double dx(int e) const { return faces[e + 1] - faces[e]; }
  double lo() const { return faces.front(); }
  double hi() const { return faces.back(); }
  double length() const { return hi() - lo(); }
  double min_dx() const {
    double h = dx(0);
    for (int e = 1; e < size(); ++e) h = std::min(h, dx(e));
    return h;
  }
};

/// Nodal degrees of freedom u_{e,p} stored element-major.
template <ConservationLaw M>
struct SolutionField {
  using state_type = typename M::state_type;

  Grid grid;
  int nodes_per_element = 0;
  std::vector<state_type> u;
  double t = 0.0;

  int elements() const { return grid.size(); }
  state_type& at(int e, int p) { return u[static_cast<std::size_t>(e) * nodes_per_element + p]; }
  const state_type& at(int e, int p) const { return u[static_cast<std::size_t>(e) * nodes_per_element + p]; }
  state_type* element(int e) { return u.data() + static_cast<std::size_t>(e) * nodes_per_element; }
  const state_type* element(int e) const { return u.data() + static_cast<std::size_t>(e) * nodes_per_element; }
};

inline double node_coordinate(const Grid& g, const ReferenceOperators& ops, int e, int p) {
  return g.left(e) + ops.nodes()[p] * g.dx(e);
}

/// Interpolates init(x) at the solution points.
template <ConservationLaw M, class Init>
SolutionField<M> make_field(const Grid& grid, const ReferenceOperators& ops, Init&& init, double t0 = 0.0) {
  SolutionField<M> field;
  field.grid = grid;
  field.nodes_per_element = ops.size();
  field.t = t0;
  field.u.resize(static_cast<std::size_t>(grid.size()) * ops.size());
  for (int e = 0; e < grid.size(); ++e)
    for (int p = 0; p < ops.size(); ++p) field.at(e, p) = init(node_coordinate(grid, ops, e, p));
  return field;
}

template <ConservationLaw M>
typename M::state_type element_mean(const SolutionField<M>& field, const ReferenceOperators& ops, int e) {
  typename M::state_type m = M::state_type::Zero();
  for (int p = 0; p < ops.size(); ++p) m += ops.weights()[p] * field.at(e, p);
  return m;
}

/// sum_e dx_e sum_p w_p u_{e,p}
template <ConservationLaw M>
typename M::state_type total_mass(const SolutionField<M>& field, const ReferenceOperators& ops) {
  typename M::state_type m = M::state_type::Zero();
  for (int e = 0; e < field.elements(); ++e) m += field.grid.dx(e) * element_mean(field, ops, e);
  return m;
}

}  // namespace mdrk
