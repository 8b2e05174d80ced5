#include <cmath>
#include <cstdio>
#include <ostream>

#include "mdrk/harness.hpp"

namespace mdrk {

void to_display(Snapshot& s, ModelKind m, double gamma) {
  s.names = display_names(m);
  if (variable_count(m) != 3) return;
  const Euler eos{gamma};
  for (auto& v : s.values) {
    const auto w = eos.to_primitive(Euler::state_type(v[0], v[1], v[2]));
    v = {w[0], w[1], w[2]};
  }
}

ErrorNorms error_norms(const Snapshot& s, const std::function<std::vector<double>(double x)>& exact) {
  const std::size_t nv = s.names.size();
  ErrorNorms n;
  n.l2.assign(nv, 0.0);
  n.linf.assign(nv, 0.0);
  for (std::size_t i = 0; i < s.x.size(); ++i) {
    const auto ue = exact(s.x[i]);
    for (std::size_t v = 0; v < nv; ++v) {
      const double d = std::abs(s.values[i][v] - ue[v]);
      n.l2[v] += s.weight[i] * d * d;
      n.linf[v] = std::max(n.linf[v], d);
    }
  }
  for (auto& e : n.l2) e = std::sqrt(e);
  return n;
}

void write_snapshot(std::ostream& os, const Snapshot& s, const std::string& meta) {
  if (!meta.empty()) os << meta << '\n';
  os << 'x';
  for (const auto& n : s.names) os << ',' << n;
  os << '\n';
  char buf[40];
  for (std::size_t i = 0; i < s.x.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", s.x[i]);
    os << buf;
    for (double v : s.values[i]) {
      std::snprintf(buf, sizeof buf, "%.17g", v);
      os << ',' << buf;
    }
    os << '\n';
  }
}

}  // namespace mdrk
