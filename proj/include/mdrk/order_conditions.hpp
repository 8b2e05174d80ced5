#pragma once

#include <array>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "mdrk/scheme.hpp"

namespace mdrk {

using Rational = boost::rational<long long>;

/// Two-stage multiderivative RK coefficients:
///   u* = u + a21 dt L(u) + ahat21 dt^2 L'(u)
///   u^{n+1} = u + dt (b1 L(u) + b2 L(u*)) + dt^2 (bhat1 L'(u) + bhat2 L'(u*))
struct MdrkCoefficients {
  Rational a21, ahat21, b1, b2, bhat1, bhat2;

  static MdrkCoefficients production() {
    return {Rational(1, 2), Rational(1, 8), Rational(1), Rational(0), Rational(1, 6), Rational(1, 3)};
  }
};

/// Residuals of the five order conditions followed by ahat21 - a21^2/2.
std::array<Rational, 6> order_residuals(const MdrkCoefficients& c);
const std::array<std::string, 6>& order_condition_names();

struct OrderScan {
  std::vector<int> meshes;
  std::vector<double> dt;
  std::vector<double> error;
  std::vector<double> pairwise;  // log(e_i/e_{i+1}) / log(dt_i/dt_{i+1})
  double slope = 0.0;            // least-squares fit of log e against log dt
};

enum class ScanData {
  // discrete eigenmode of the one-step operator that carries the wave e^{2 pi i x}
  PhysicalMode,
  // nodal interpolant of sin(2 pi x)
  Interpolated,
};

/// Error of a single MDRK step on u_t + u_x = 0, periodic on [0,1], with
/// dt = sigma dx on each mesh (space and time refined together), measured
/// against the initial data translated by dt.
OrderScan one_step_order_scan(const std::vector<int>& meshes, double sigma, ScanData data = ScanData::PhysicalMode,
                              PointKind points = PointKind::GL, CorrectionKind correction = CorrectionKind::Radau,
                              Dissipation dissipation = Dissipation::D2, FaceScheme face = FaceScheme::EA);

/// Least-squares slope of log y against log x; needs at least three points.
double fitted_order(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace mdrk
