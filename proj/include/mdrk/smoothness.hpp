#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "mdrk/operators.hpp"
#include "mdrk/scheme.hpp"

namespace mdrk {

/// Modal-energy smoothness indicator on one element.
class SmoothnessIndicator {
 public:
  SmoothnessIndicator(const NodeSet& ns, BlendingParameters params);

  double threshold() const { return threshold_; }
  /// Fraction of the indicator's energy in the top one or two modes.
  double energy(std::span<const double> q) const;
  double alpha_from_energy(double e) const;
  double alpha(std::span<const double> q) const { return alpha_from_energy(energy(q)); }

 private:
  BlendingParameters params_;
  int degree_;
  double threshold_;
  Eigen::MatrixXd nodal_to_modal_;
};

/// alpha_e <- max(alpha_e, alpha_{e-1}/2, alpha_{e+1}/2) using the unsmoothed values.
void smooth_alpha(std::span<double> alpha, bool periodic);

}  // namespace mdrk
