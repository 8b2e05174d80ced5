#include "mdrk/operators.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <tuple>

#include "mdrk/errors.hpp"

namespace mdrk {

PointKind parse_point_kind(const std::string& s) {
  if (s == "gl" || s == "GL") return PointKind::GL;
  if (s == "gll" || s == "GLL") return PointKind::GLL;
  throw ConfigError("unknown solution point kind '" + s + "' (expected gl|gll)");
}

CorrectionKind parse_correction_kind(const std::string& s) {
  if (s == "radau" || s == "Radau") return CorrectionKind::Radau;
  if (s == "g2" || s == "G2") return CorrectionKind::G2;
  throw ConfigError("unknown correction function '" + s + "' (expected radau|g2)");
}

std::string to_string(PointKind k) { return k == PointKind::GL ? "gl" : "gll"; }
std::string to_string(CorrectionKind k) { return k == CorrectionKind::Radau ? "radau" : "g2"; }

namespace {

struct LegendreValues {
  double p;   // P_n
  double dp;  // P_n'
};

// Three-term recurrences for P_n and P_n'.
LegendreValues legendre_eval(int n, double x) {
  if (n == 0) return {1.0, 0.0};
  double p0 = 1.0, p1 = x;
  double d0 = 0.0, d1 = 1.0;
  for (int k = 1; k < n; ++k) {
    const double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
    const double d2 = d0 + (2.0 * k + 1.0) * p1;
    p0 = p1;
    p1 = p2;
    d0 = d1;
    d1 = d2;
  }
  return {p1, d1};
}

constexpr double kNewtonTol = 1e-15;
constexpr int kNewtonMaxIter = 100;

// Roots of P_n in (-1, 1), ascending.
std::vector<double> legendre_roots(int n) {
  std::vector<double> roots(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = -std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < kNewtonMaxIter; ++it) {
      const auto [p, dp] = legendre_eval(n, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < kNewtonTol) break;
    }
    roots[i] = x;
    roots[n - 1 - i] = -x;
  }
  if (n % 2 == 1) roots[n / 2] = 0.0;
  return roots;
}

// Interior roots of P_n' (Lobatto points without the endpoints), ascending.
std::vector<double> legendre_derivative_roots(int n) {
  const int m = n - 1;
  std::vector<double> roots(m);
  for (int i = 0; i < (m + 1) / 2; ++i) {
    double x = -std::cos(std::numbers::pi * (i + 1) / n);
    for (int it = 0; it < kNewtonMaxIter; ++it) {
      const auto [p, dp] = legendre_eval(n, x);
      const double d2p = (2.0 * x * dp - n * (n + 1.0) * p) / (1.0 - x * x);
      const double dx = dp / d2p;
      x -= dx;
      if (std::abs(dx) < kNewtonTol) break;
    }
    roots[i] = x;
    roots[m - 1 - i] = -x;
  }
  if (m % 2 == 1) roots[m / 2] = 0.0;
  return roots;
}

// Right Radau polynomial of degree k on [-1,1]: 1 at x = -1, 0 at x = 1.
double radau_right(int k, double x) {
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  return 0.5 * sign * (legendre(k, x) - legendre(k - 1, x));
}

double radau_right_derivative(int k, double x) {
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  return 0.5 * sign * (legendre_derivative(k, x) - legendre_derivative(k - 1, x));
}

}  // namespace

double legendre(int n, double x) { return legendre_eval(n, x).p; }
double legendre_derivative(int n, double x) { return legendre_eval(n, x).dp; }

NodeSet build_nodeset(int degree, PointKind kind) {
  if (degree < 0) throw ConfigError("polynomial degree must be non-negative");
  if (kind == PointKind::GLL && degree < 1) throw ConfigError("GLL points need degree >= 1");

  const int n = degree + 1;
  std::vector<double> x(n), w(n);
  if (kind == PointKind::GL) {
    x = legendre_roots(n);
    for (int i = 0; i < n; ++i) {
      const double dp = legendre_derivative(n, x[i]);
      w[i] = 2.0 / ((1.0 - x[i] * x[i]) * dp * dp);
    }
  } else {
    const auto interior = legendre_derivative_roots(degree);
    x.front() = -1.0;
    x.back() = 1.0;
    for (int i = 0; i < degree - 1; ++i) x[i + 1] = interior[i];
    for (int i = 0; i < n; ++i) {
      const double p = legendre(degree, x[i]);
      w[i] = 2.0 / (degree * (degree + 1.0) * p * p);
    }
  }

  NodeSet ns;
  ns.degree = degree;
  ns.kind = kind;
  ns.nodes.resize(n);
  ns.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    ns.nodes[i] = 0.5 * (x[i] + 1.0);
    ns.weights[i] = 0.5 * w[i];
  }
  if (kind == PointKind::GLL) {
    ns.nodes[0] = 0.0;
    ns.nodes[n - 1] = 1.0;
  }
  return ns;
}

namespace {

Eigen::VectorXd barycentric_weights(const Eigen::VectorXd& nodes) {
  const int n = static_cast<int>(nodes.size());
  Eigen::VectorXd lam(n);
  for (int j = 0; j < n; ++j) {
    double prod = 1.0;
    for (int k = 0; k < n; ++k)
      if (k != j) prod *= nodes[j] - nodes[k];
    lam[j] = 1.0 / prod;
  }
  return lam;
}

}  // namespace

Eigen::MatrixXd build_diff_matrix(const NodeSet& ns) {
  const int n = ns.size();
  const Eigen::VectorXd lam = barycentric_weights(ns.nodes);
  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(n, n);
  for (int p = 0; p < n; ++p) {
    double diag = 0.0;
    for (int q = 0; q < n; ++q) {
      if (q == p) continue;
      D(p, q) = (lam[q] / lam[p]) / (ns.nodes[p] - ns.nodes[q]);
      diag -= D(p, q);
    }
    D(p, p) = diag;
  }
  return D;
}

Eigen::VectorXd lagrange_basis(const Eigen::VectorXd& nodes, double xi) {
  const int n = static_cast<int>(nodes.size());
  Eigen::VectorXd l(n);
  for (int q = 0; q < n; ++q) {
    double v = 1.0;
    for (int p = 0; p < n; ++p)
      if (p != q) v *= (xi - nodes[p]) / (nodes[q] - nodes[p]);
    l[q] = v;
  }
  return l;
}

FaceVandermonde build_face_vandermonde(const NodeSet& ns) {
  return {lagrange_basis(ns.nodes, 0.0), lagrange_basis(ns.nodes, 1.0)};
}

double correction_left(int degree, CorrectionKind kind, double xi) {
  const double x = 2.0 * xi - 1.0;
  const int n = degree;
  switch (kind) {
    case CorrectionKind::Radau:
      return radau_right(n + 1, x);
    case CorrectionKind::G2:
      if (n == 0) return radau_right(1, x);
      return (n * radau_right(n + 1, x) + (n + 1.0) * radau_right(n, x)) / (2.0 * n + 1.0);
  }
  throw ConfigError("unknown correction kind");
}

double correction_left_derivative(int degree, CorrectionKind kind, double xi) {
  const double x = 2.0 * xi - 1.0;
  const int n = degree;
  switch (kind) {
    case CorrectionKind::Radau:
      return 2.0 * radau_right_derivative(n + 1, x);
    case CorrectionKind::G2:
      if (n == 0) return 2.0 * radau_right_derivative(1, x);
      return 2.0 * (n * radau_right_derivative(n + 1, x) + (n + 1.0) * radau_right_derivative(n, x)) /
             (2.0 * n + 1.0);
  }
  throw ConfigError("unknown correction kind");
}

CorrectionDerivatives build_correction_derivatives(const NodeSet& ns, CorrectionKind kind) {
  const int n = ns.size();
  CorrectionDerivatives out{Eigen::VectorXd(n), Eigen::VectorXd(n)};
  for (int p = 0; p < n; ++p) {
    out.bL[p] = correction_left_derivative(ns.degree, kind, ns.nodes[p]);
    out.bR[p] = -correction_left_derivative(ns.degree, kind, 1.0 - ns.nodes[p]);
  }
  return out;
}

Eigen::MatrixXd build_d1(const Eigen::MatrixXd& D, const Eigen::VectorXd& bL, const Eigen::VectorXd& bR,
                         const Eigen::VectorXd& VL, const Eigen::VectorXd& VR) {
  const auto n = D.rows();
  if (D.cols() != n || bL.size() != n || bR.size() != n || VL.size() != n || VR.size() != n)
    throw std::logic_error("build_d1: inconsistent operator shapes");
  return D - bL * VL.transpose() - bR * VR.transpose();
}

ReferenceOperators build_reference_operators(int degree, PointKind kind, CorrectionKind correction) {
  ReferenceOperators ops;
  ops.nodeset = build_nodeset(degree, kind);
  ops.correction = correction;
  ops.D = build_diff_matrix(ops.nodeset);
  auto [VL, VR] = build_face_vandermonde(ops.nodeset);
  ops.VL = std::move(VL);
  ops.VR = std::move(VR);
  auto [bL, bR] = build_correction_derivatives(ops.nodeset, correction);
  ops.bL = std::move(bL);
  ops.bR = std::move(bR);
  ops.D1 = build_d1(ops.D, ops.bL, ops.bR, ops.VL, ops.VR);
  return ops;
}

std::shared_ptr<const ReferenceOperators> reference_operators(int degree, PointKind kind,
                                                              CorrectionKind correction) {
  static std::mutex mutex;
  static std::map<std::tuple<int, PointKind, CorrectionKind>, std::shared_ptr<const ReferenceOperators>> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_tuple(degree, kind, correction);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto ops = std::make_shared<const ReferenceOperators>(build_reference_operators(degree, kind, correction));
  cache.emplace(key, ops);
  return ops;
}

}  // namespace mdrk
