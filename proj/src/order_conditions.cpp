#include "mdrk/order_conditions.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "mdrk/errors.hpp"
#include "mdrk/solver.hpp"
#include "mdrk/stability.hpp"

namespace mdrk {

std::array<Rational, 6> order_residuals(const MdrkCoefficients& c) {
  const Rational a = c.a21;
  return {
      c.b1 + c.b2 - 1,
      c.b2 * a + c.bhat1 + c.bhat2 - Rational(1, 2),
      c.b2 * a * a + 2 * c.bhat2 * a - Rational(1, 3),
      c.b2 * a * a * a + 3 * c.bhat2 * a * a - Rational(1, 4),
      c.bhat2 * a * a - Rational(1, 12),
      c.ahat21 - a * a / 2,
  };
}

const std::array<std::string, 6>& order_condition_names() {
  static const std::array<std::string, 6> names{
      "b1 + b2 = 1",
      "b2 a21 + bhat1 + bhat2 = 1/2",
      "b2 a21^2 + 2 bhat2 a21 = 1/3",
      "b2 a21^3 + 3 bhat2 a21^2 = 1/4",
      "bhat2 a21^2 = 1/12",
      "ahat21 = a21^2 / 2",
  };
  return names;
}

double fitted_order(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("fitted_order: size mismatch");
  if (x.size() < 3) throw std::invalid_argument("fitted_order: at least three points are needed");
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

OrderScan one_step_order_scan(const std::vector<int>& meshes, double sigma, ScanData data, PointKind points,
                              CorrectionKind correction, Dissipation dissipation, FaceScheme face) {
  if (meshes.size() < 3) throw ConfigError("order scan needs at least three meshes");
  const auto ops = reference_operators(3, points, correction);
  const int n = ops->size();
  SchemeConfig cfg;
  cfg.points = points;
  cfg.correction = correction;
  cfg.dissipation = dissipation;
  cfg.face = face;
  cfg.cfl = sigma;
  cfg.cs = 1.0;
  OrderScan scan;
  scan.meshes = meshes;
  for (int nel : meshes) {
    const double kappa = 2.0 * std::numbers::pi / nel;
    const double dt = sigma / nel;
    // nodal profile v_p of the wave on element 0; element e carries v e^{i kappa e}
    Eigen::VectorXcd v(n);
    if (data == ScanData::PhysicalMode) {
      const auto setup = assemble_matrices(*ops, sigma, dissipation);
      Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(amplification_matrix(setup, kappa));
      const std::complex<double> shift = std::polar(1.0, -sigma * kappa);
      int best = 0;
      for (int i = 1; i < n; ++i)
        if (std::abs(es.eigenvalues()[i] - shift) < std::abs(es.eigenvalues()[best] - shift)) best = i;
      v = es.eigenvectors().col(best);
      std::complex<double> mean = 0.0;
      for (int p = 0; p < n; ++p) mean += ops->weights()[p] * v[p];
      v /= mean;
    } else {
      for (int p = 0; p < n; ++p) v[p] = std::polar(1.0, kappa * ops->nodes()[p]);
    }
    auto wave = [&](int e, int p, double t) {
      return std::real(v[p] * std::polar(1.0, kappa * e - 2.0 * std::numbers::pi * t));
    };
    MdrkSolver<LinearAdvection> solver(LinearAdvection{}, ops, cfg, BoundarySpec<LinearAdvection>{},
                                       Grid::uniform(0.0, 1.0, nel));
    SolutionField<LinearAdvection> field = solver.make_field([](double) { return State<1>::Zero(); });
    for (int e = 0; e < nel; ++e)
      for (int p = 0; p < n; ++p) field.at(e, p)[0] = wave(e, p, 0.0);
    solver.step_once(field, dt);
    double e2 = 0.0;
    for (int e = 0; e < nel; ++e)
      for (int p = 0; p < n; ++p) {
        const double d = field.at(e, p)[0] - wave(e, p, dt);
        e2 += field.grid.dx(e) * ops->weights()[p] * d * d;
      }
    scan.dt.push_back(dt);
    scan.error.push_back(std::sqrt(e2));
  }
  for (std::size_t i = 0; i + 1 < meshes.size(); ++i)
    scan.pairwise.push_back(std::log(scan.error[i] / scan.error[i + 1]) / std::log(scan.dt[i] / scan.dt[i + 1]));
  scan.slope = fitted_order(scan.dt, scan.error);
  return scan;
}

}  // namespace mdrk
