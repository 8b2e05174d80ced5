#pragma once

#include <complex>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "mdrk/operators.hpp"
#include "mdrk/scheme.hpp"

namespace mdrk {

/// (A u)_e = sum_k blocks[k] u_{e+k}
struct BlockStencil {
  int n = 0;
  std::map<int, Eigen::MatrixXd> blocks;

  static BlockStencil identity(int n);
  static BlockStencil single(int offset, const Eigen::MatrixXd& m);
  Eigen::MatrixXd at(int k) const;
  BlockStencil shifted(int by) const;
  Eigen::MatrixXcd symbol(double kappa) const;
};

BlockStencil operator+(const BlockStencil& a, const BlockStencil& b);
BlockStencil operator-(const BlockStencil& a, const BlockStencil& b);
BlockStencil operator*(double s, const BlockStencil& a);
BlockStencil operator*(const Eigen::MatrixXd& m, const BlockStencil& a);
/// Composition: (a b) u = a (b u).
BlockStencil operator*(const BlockStencil& a, const BlockStencil& b);

/// Matrices of one MDRK step for u_t + u_x = 0 at CFL sigma.
///
/// stage1 and full hold the update operators u* = stage1 u^n and
/// u^{n+1} = full u^n. A1 and A use the normalisation
///   u* = u - sigma sum_k A1[k] u_{e+k}
///   u^{n+1} = u - sigma (A[-1] u_{e-1} + A[0] u_e + A[1] u_{e+1})
///                - sigma^2 (A[-2] u_{e-2} + A[2] u_{e+2}).
struct AmplificationSetup {
  double sigma = 0.0;
  Dissipation dissipation = Dissipation::D2;
  Eigen::MatrixXd T1, T2, T2s;
  BlockStencil stage1;
  BlockStencil full;
  std::map<int, Eigen::MatrixXd> A1;
  std::map<int, Eigen::MatrixXd> A;
};

/// speed_ratio = a / lambda: advection speed over the dissipation speed of
/// the numerical flux; sigma = lambda dt / dx. The default is the scalar
/// upwind case lambda = |a|.
AmplificationSetup assemble_matrices(const ReferenceOperators& ops, double sigma, Dissipation d,
                                     double speed_ratio = 1.0);

/// D2 matrices evaluated literally from the closed-form expressions
/// A1[-1] = 1/2 bL VR^T T1, A1[0] = 1/2 (D T1 - bL VL^T T1),
/// A[-2] = -bL VR^T T2s A1[-1],
/// A[-1] = bL VR^T (T2 + T2s (I - sigma A1[0])) - sigma (D - bL VL^T) T2s A1[-1],
/// A[0] = -(D - bL VL^T)(T2 + T2s (I - sigma A1[0])).
std::map<int, Eigen::MatrixXd> closed_form_d2(const ReferenceOperators& ops, double sigma,
                                              std::map<int, Eigen::MatrixXd>* a1 = nullptr);

Eigen::MatrixXcd amplification_matrix(const AmplificationSetup& setup, double kappa);

double spectral_radius(const Eigen::MatrixXcd& m);

/// max over kappa_j = 2 pi j / samples, j = 0..samples-1.
double max_amplification(const ReferenceOperators& ops, Dissipation d, double sigma, int samples = 1024,
                         double speed_ratio = 1.0);

struct CflSearch {
  double sigma = 0.0;    // bisection result
  double rounded = 0.0;  // truncated to three decimals
  double lo = 0.0, hi = 0.0;
  int evaluations = 0;
};

/// Largest sigma with max amplification <= 1 + 1e-10; coarse scan then bisection.
CflSearch find_cfl(const ReferenceOperators& ops, Dissipation d, int samples = 1024, double sigma_min = 0.005,
                   double sigma_max = 0.6, double tol = 5e-4);

/// Max over speed_ratio in [0, 1]: waves of a system slower than the
/// Rusanov speed.
double system_max_amplification(const ReferenceOperators& ops, Dissipation d, double sigma, int samples = 1024);
CflSearch find_system_cfl(const ReferenceOperators& ops, Dissipation d, int samples = 1024);

/// Same search for the semi-discrete upwind FR operator advanced by the
/// five-stage fourth-order SSPRK scheme.
double rkfr_max_amplification(const ReferenceOperators& ops, double sigma, int samples = 1024);
CflSearch find_rkfr_cfl(const ReferenceOperators& ops, int samples = 1024, double sigma_min = 0.005,
                        double sigma_max = 0.6, double tol = 5e-4);

}  // namespace mdrk
