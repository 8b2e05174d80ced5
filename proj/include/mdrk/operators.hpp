#pragma once

#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace mdrk {

enum class PointKind { GL, GLL };
enum class CorrectionKind { Radau, G2 };

PointKind parse_point_kind(const std::string& s);
CorrectionKind parse_correction_kind(const std::string& s);
std::string to_string(PointKind k);
std::string to_string(CorrectionKind k);

/// Solution points and quadrature weights on the reference interval [0,1].
struct NodeSet {
  int degree = 0;
  PointKind kind = PointKind::GL;
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;

  int size() const { return degree + 1; }
};

/// Reference-element operators shared by every element of a mesh.
///
/// D(p,q) = l_q'(xi_p); VL, VR extrapolate nodal data to xi = 0 and xi = 1;
/// bL, bR hold g_L'(xi_p), g_R'(xi_p); D1 = D - bL VL^T - bR VR^T.
struct ReferenceOperators {
  NodeSet nodeset;
  CorrectionKind correction = CorrectionKind::Radau;
  Eigen::MatrixXd D;
  Eigen::VectorXd VL;
  Eigen::VectorXd VR;
  Eigen::VectorXd bL;
  Eigen::VectorXd bR;
  Eigen::MatrixXd D1;

  int degree() const { return nodeset.degree; }
  int size() const { return nodeset.size(); }
  const Eigen::VectorXd& nodes() const { return nodeset.nodes; }
  const Eigen::VectorXd& weights() const { return nodeset.weights; }
};

// Legendre polynomial P_n(x) and its derivative on [-1,1].
double legendre(int n, double x);
double legendre_derivative(int n, double x);

NodeSet build_nodeset(int degree, PointKind kind);
Eigen::MatrixXd build_diff_matrix(const NodeSet& ns);

struct FaceVandermonde {
  Eigen::VectorXd VL;
  Eigen::VectorXd VR;
};
FaceVandermonde build_face_vandermonde(const NodeSet& ns);

/// Lagrange basis values l_q(xi) for the given nodes.
Eigen::VectorXd lagrange_basis(const Eigen::VectorXd& nodes, double xi);

// Correction function g_L on [0,1] and its derivative; g_R(xi) = g_L(1 - xi).
double correction_left(int degree, CorrectionKind kind, double xi);
double correction_left_derivative(int degree, CorrectionKind kind, double xi);

struct CorrectionDerivatives {
  Eigen::VectorXd bL;
  Eigen::VectorXd bR;
};
CorrectionDerivatives build_correction_derivatives(const NodeSet& ns, CorrectionKind kind);

Eigen::MatrixXd build_d1(const Eigen::MatrixXd& D, const Eigen::VectorXd& bL, const Eigen::VectorXd& bR,
                         const Eigen::VectorXd& VL, const Eigen::VectorXd& VR);

ReferenceOperators build_reference_operators(int degree, PointKind kind, CorrectionKind correction);

/// Cached immutable operators; safe to share across threads.
std::shared_ptr<const ReferenceOperators> reference_operators(int degree, PointKind kind,
                                                              CorrectionKind correction);

}  // namespace mdrk
