#include "mdrk/stability.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "mdrk/errors.hpp"

namespace mdrk {

BlockStencil BlockStencil::identity(int n) { return single(0, Eigen::MatrixXd::Identity(n, n)); }

BlockStencil BlockStencil::single(int offset, const Eigen::MatrixXd& m) {
  BlockStencil s;
  s.n = static_cast<int>(m.cols());
  s.blocks[offset] = m;
  return s;
}

Eigen::MatrixXd BlockStencil::at(int k) const {
  auto it = blocks.find(k);
  if (it != blocks.end()) return it->second;
  const auto rows = blocks.empty() ? n : blocks.begin()->second.rows();
  return Eigen::MatrixXd::Zero(rows, n);
}

BlockStencil BlockStencil::shifted(int by) const {
  BlockStencil s;
  s.n = n;
  for (const auto& [k, m] : blocks) s.blocks[k + by] = m;
  return s;
}

Eigen::MatrixXcd BlockStencil::symbol(double kappa) const {
  const auto rows = blocks.empty() ? n : blocks.begin()->second.rows();
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(rows, n);
  for (const auto& [k, m] : blocks) h += std::polar(1.0, k * kappa) * m.cast<std::complex<double>>();
  return h;
}

BlockStencil operator+(const BlockStencil& a, const BlockStencil& b) {
  BlockStencil s = a;
  s.n = std::max(a.n, b.n);
  for (const auto& [k, m] : b.blocks) {
    auto it = s.blocks.find(k);
    if (it == s.blocks.end()) s.blocks[k] = m;
    else it->second += m;
  }
  return s;
}

BlockStencil operator*(double c, const BlockStencil& a) {
  BlockStencil s = a;
  for (auto& [k, m] : s.blocks) m *= c;
  return s;
}

BlockStencil operator-(const BlockStencil& a, const BlockStencil& b) { return a + (-1.0) * b; }

BlockStencil operator*(const Eigen::MatrixXd& m, const BlockStencil& a) {
  BlockStencil s;
  s.n = a.n;
  for (const auto& [k, b] : a.blocks) s.blocks[k] = m * b;
  return s;
}

BlockStencil operator*(const BlockStencil& a, const BlockStencil& b) {
  BlockStencil s;
  s.n = b.n;
  for (const auto& [i, ma] : a.blocks)
    for (const auto& [j, mb] : b.blocks) {
      auto it = s.blocks.find(i + j);
      if (it == s.blocks.end()) s.blocks[i + j] = ma * mb;
      else it->second += ma * mb;
    }
  return s;
}

namespace {

// d/dxi of the continuous flux for u_t + u_x = 0 given the stencils of the
// nodal time-averaged flux and of the dissipation state, lambda = 1.
BlockStencil fr_residual(const ReferenceOperators& ops, const BlockStencil& F, const BlockStencil& Dst) {
  const Eigen::MatrixXd VLt = ops.VL.transpose();
  const Eigen::MatrixXd VRt = ops.VR.transpose();
  const BlockStencil right = 0.5 * (VRt * F + VLt * F.shifted(1)) - 0.5 * (VLt * Dst.shifted(1) - VRt * Dst);
  const BlockStencil left = right.shifted(-1);
  const Eigen::MatrixXd bL = ops.bL;
  const Eigen::MatrixXd bR = ops.bR;
  return bL * left + ops.D1 * F + bR * right;
}

}  // namespace

AmplificationSetup assemble_matrices(const ReferenceOperators& ops, double sigma, Dissipation d, double speed_ratio) {
  const int n = ops.size();
  const double r = speed_ratio;
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
  AmplificationSetup s;
  s.sigma = sigma;
  s.dissipation = d;
  s.T1 = I - 0.25 * r * sigma * ops.D;
  s.T2 = I - r * sigma / 6.0 * ops.D;
  s.T2s = -r * sigma / 3.0 * ops.D;

  // U: time-averaged solution, F = r U
  const BlockStencil id = BlockStencil::identity(n);
  const BlockStencil U1 = BlockStencil::single(0, s.T1);
  s.stage1 = id - 0.5 * sigma * fr_residual(ops, r * U1, d == Dissipation::D1 ? id : U1);

  const BlockStencil U2 = BlockStencil::single(0, s.T2) + s.T2s * s.stage1;
  s.full = id - sigma * fr_residual(ops, r * U2, d == Dissipation::D1 ? id : U2);

  for (const auto& [k, m] : s.stage1.blocks) s.A1[k] = (k == 0 ? Eigen::MatrixXd(I - m) : Eigen::MatrixXd(-m)) / sigma;
  for (const auto& [k, m] : s.full.blocks) {
    if (k == 0) s.A[k] = (I - m) / sigma;
    else if (std::abs(k) == 1) s.A[k] = -m / sigma;
    else s.A[k] = -m / (sigma * sigma);
  }
  return s;
}

std::map<int, Eigen::MatrixXd> closed_form_d2(const ReferenceOperators& ops, double sigma,
                                              std::map<int, Eigen::MatrixXd>* a1) {
  const int n = ops.size();
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
  const Eigen::MatrixXd T1 = I - 0.25 * sigma * ops.D;
  const Eigen::MatrixXd T2 = I - sigma / 6.0 * ops.D;
  const Eigen::MatrixXd T2s = -sigma / 3.0 * ops.D;
  const Eigen::MatrixXd bLVR = ops.bL * ops.VR.transpose();
  const Eigen::MatrixXd bLVL = ops.bL * ops.VL.transpose();

  const Eigen::MatrixXd A1m1 = 0.5 * bLVR * T1;
  const Eigen::MatrixXd A10 = 0.5 * (ops.D * T1 - bLVL * T1);
  if (a1) {
    (*a1)[-1] = A1m1;
    (*a1)[0] = A10;
    (*a1)[1] = Eigen::MatrixXd::Zero(n, n);
  }
  const Eigen::MatrixXd inner = T2 + T2s * (I - sigma * A10);
  std::map<int, Eigen::MatrixXd> A;
  A[-2] = -bLVR * T2s * A1m1;
  A[-1] = bLVR * inner - sigma * (ops.D - bLVL) * T2s * A1m1;
  A[0] = -(ops.D - bLVL) * inner;
  A[1] = Eigen::MatrixXd::Zero(n, n);
  A[2] = Eigen::MatrixXd::Zero(n, n);
  return A;
}

Eigen::MatrixXcd amplification_matrix(const AmplificationSetup& setup, double kappa) {
  return setup.full.symbol(kappa);
}

double spectral_radius(const Eigen::MatrixXcd& m) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

double max_amplification(const ReferenceOperators& ops, Dissipation d, double sigma, int samples,
                         double speed_ratio) {
  const AmplificationSetup s = assemble_matrices(ops, sigma, d, speed_ratio);
  double r = 0.0;
  for (int j = 0; j < samples; ++j) {
    const double kappa = 2.0 * std::numbers::pi * j / samples;
    r = std::max(r, spectral_radius(amplification_matrix(s, kappa)));
  }
  return r;
}

namespace {

constexpr double kStableTol = 1e-10;
constexpr int kSpeedRatios = 20;

template <class F>
CflSearch search(F&& amplification, double sigma_min, double sigma_max, double tol) {
  CflSearch out;
  auto stable = [&](double s) {
    ++out.evaluations;
    return amplification(s) <= 1.0 + kStableTol;
  };
  if (!stable(sigma_min))
    throw std::runtime_error("scheme unstable at the smallest sampled CFL " + std::to_string(sigma_min));
  const double h = 0.005;
  double lo = sigma_min, hi = sigma_max;
  bool found = false;
  for (double s = sigma_min + h; s <= sigma_max + 1e-12; s += h) {
    if (!stable(s)) {
      hi = s;
      found = true;
      break;
    }
    lo = s;
  }
  if (!found) {
    out.sigma = out.lo = out.hi = sigma_max;
    out.rounded = std::floor(sigma_max * 1000.0) / 1000.0;
    return out;
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (stable(mid)) lo = mid;
    else hi = mid;
  }
  out.sigma = lo;
  out.lo = lo;
  out.hi = hi;
  out.rounded = std::floor(lo * 1000.0) / 1000.0;
  return out;
}

}  // namespace

CflSearch find_cfl(const ReferenceOperators& ops, Dissipation d, int samples, double sigma_min, double sigma_max,
                   double tol) {
  if (samples < 512) throw ConfigError("at least 512 wave numbers are required");
  if (!(tol > 0.0 && tol <= 1e-3)) throw ConfigError("bisection tolerance must lie in (0, 1e-3]");
  return search([&](double s) { return max_amplification(ops, d, s, samples); }, sigma_min, sigma_max, tol);
}

double system_max_amplification(const ReferenceOperators& ops, Dissipation d, double sigma, int samples) {
  double r = 0.0;
  for (int k = 0; k <= kSpeedRatios; ++k)
    r = std::max(r, max_amplification(ops, d, sigma, samples, static_cast<double>(k) / kSpeedRatios));
  return r;
}

CflSearch find_system_cfl(const ReferenceOperators& ops, Dissipation d, int samples) {
  if (samples < 512) throw ConfigError("at least 512 wave numbers are required");
  return search([&](double s) { return system_max_amplification(ops, d, s, samples); }, 0.005, 0.6, 5e-4);
}

double rkfr_max_amplification(const ReferenceOperators& ops, double sigma, int samples) {
  const int n = ops.size();
  const BlockStencil id = BlockStencil::identity(n);
  const BlockStencil L = -1.0 * fr_residual(ops, id, id);
  using C = Eigen::MatrixXcd;
  const C I = C::Identity(n, n);
  double r = 0.0;
  for (int j = 0; j < samples; ++j) {
    const double kappa = 2.0 * std::numbers::pi * j / samples;
    const C Lh = sigma * L.symbol(kappa);
    const C u1 = I + 0.391752226571890 * Lh;
    const C u2 = 0.444370493651235 * I + 0.555629506348765 * u1 + 0.368410593050371 * Lh * u1;
    const C u3 = 0.620101851488403 * I + 0.379898148511597 * u2 + 0.251891774271694 * Lh * u2;
    const C u4 = 0.178079954393132 * I + 0.821920045606868 * u3 + 0.544974750228521 * Lh * u3;
    const C un = 0.517231671970585 * u2 + 0.096059710526147 * u3 + 0.063692468666290 * Lh * u3 +
                 0.386708617503269 * u4 + 0.226007483236906 * Lh * u4;
    r = std::max(r, spectral_radius(un));
  }
  return r;
}

CflSearch find_rkfr_cfl(const ReferenceOperators& ops, int samples, double sigma_min, double sigma_max,
                        double tol) {
  return search([&](double s) { return rkfr_max_amplification(ops, s, samples); }, sigma_min, sigma_max, tol);
}

}  // namespace mdrk
