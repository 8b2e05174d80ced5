#include "mdrk/smoothness.hpp"

#include <algorithm>
#include <cmath>

namespace mdrk {

SmoothnessIndicator::SmoothnessIndicator(const NodeSet& ns, BlendingParameters params)
    : params_(params), degree_(ns.degree) {
  threshold_ = params_.threshold_factor * std::pow(10.0, -params_.threshold_exponent * std::pow(degree_ + 1.0, 0.25));
  const int n = ns.size();
  Eigen::MatrixXd V(n, n);
  for (int p = 0; p < n; ++p)
    for (int k = 0; k < n; ++k) V(p, k) = std::sqrt(2.0 * k + 1.0) * legendre(k, 2.0 * ns.nodes[p] - 1.0);
  nodal_to_modal_ = V.inverse();
}

double SmoothnessIndicator::energy(std::span<const double> q) const {
  const Eigen::Map<const Eigen::VectorXd> nodal(q.data(), static_cast<Eigen::Index>(q.size()));
  const Eigen::VectorXd m = nodal_to_modal_ * nodal;
  const double total = m.squaredNorm();
  if (!(total > 0.0)) return 0.0;
  const int N = degree_;
  const double top = m[N] * m[N] / total;
  if (N == 0) return top;
  const double lower = total - m[N] * m[N];
  if (!(lower > 0.0)) return top;
  return std::max(top, m[N - 1] * m[N - 1] / lower);
}

double SmoothnessIndicator::alpha_from_energy(double e) const {
  const double T = threshold_;
  double a = 1.0 / (1.0 + std::exp(-(params_.sharpness / T) * (e - T)));
  if (!std::isfinite(e)) a = 1.0;
  if (a < params_.alpha_min) a = 0.0;
  if (a > 1.0 - params_.alpha_min) a = 1.0;
  return std::min(a, params_.alpha_max);
}

void smooth_alpha(std::span<double> alpha, bool periodic) {
  const int n = static_cast<int>(alpha.size());
  if (n < 2) return;
  const std::vector<double> raw(alpha.begin(), alpha.end());
  for (int e = 0; e < n; ++e) {
    double a = raw[e];
    if (e > 0) a = std::max(a, 0.5 * raw[e - 1]);
    else if (periodic) a = std::max(a, 0.5 * raw[n - 1]);
    if (e < n - 1) a = std::max(a, 0.5 * raw[e + 1]);
    else if (periodic) a = std::max(a, 0.5 * raw[0]);
    alpha[e] = a;
  }
}

}  // namespace mdrk
