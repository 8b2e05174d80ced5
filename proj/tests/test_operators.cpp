#include <cmath>

#include <gtest/gtest.h>

#include "mdrk/errors.hpp"
#include "mdrk/operators.hpp"

using namespace mdrk;

namespace {

Eigen::VectorXd sample(const NodeSet& ns, double (*q)(double)) {
  Eigen::VectorXd v(ns.size());
  for (int p = 0; p < ns.size(); ++p) v[p] = q(ns.nodes[p]);
  return v;
}

}  // namespace

TEST(NodeSet, LinearLobattoIsTrapezoid) {
  const NodeSet ns = build_nodeset(1, PointKind::GLL);
  EXPECT_DOUBLE_EQ(ns.nodes[0], 0.0);
  EXPECT_DOUBLE_EQ(ns.nodes[1], 1.0);
  EXPECT_NEAR(ns.weights[0], 0.5, 1e-15);
  EXPECT_NEAR(ns.weights[1], 0.5, 1e-15);
}

TEST(NodeSet, GaussFourPointWeightsAndNodes) {
  const NodeSet ns = build_nodeset(3, PointKind::GL);
  // closed forms of the 4-point rule on [-1,1]
  const double w_in = (18.0 + std::sqrt(30.0)) / 36.0, w_out = (18.0 - std::sqrt(30.0)) / 36.0;
  const double x_in = std::sqrt(3.0 / 7.0 - 2.0 / 7.0 * std::sqrt(6.0 / 5.0));
  const double x_out = std::sqrt(3.0 / 7.0 + 2.0 / 7.0 * std::sqrt(6.0 / 5.0));
  const double w[4] = {w_out / 2, w_in / 2, w_in / 2, w_out / 2};
  const double x[4] = {(1 - x_out) / 2, (1 - x_in) / 2, (1 + x_in) / 2, (1 + x_out) / 2};
  for (int p = 0; p < 4; ++p) {
    EXPECT_NEAR(ns.weights[p], w[p], 1e-15);
    EXPECT_NEAR(ns.nodes[p], x[p], 1e-15);
  }
  EXPECT_NEAR(ns.weights[0], 0.173927, 1e-6);
  EXPECT_NEAR(ns.weights[1], 0.326073, 1e-6);
}

TEST(NodeSet, QuadratureExactness) {
  for (int N = 1; N <= 6; ++N) {
    for (PointKind kind : {PointKind::GL, PointKind::GLL}) {
      const NodeSet ns = build_nodeset(N, kind);
      EXPECT_NEAR(ns.weights.sum(), 1.0, 1e-14);
      for (int p = 1; p < ns.size(); ++p) EXPECT_GT(ns.nodes[p], ns.nodes[p - 1]);
      const int exact = kind == PointKind::GL ? 2 * N + 1 : 2 * N - 1;
      for (int m = 0; m <= exact; ++m) {
        double s = 0.0;
        for (int p = 0; p < ns.size(); ++p) s += ns.weights[p] * std::pow(ns.nodes[p], m);
        EXPECT_NEAR(s, 1.0 / (m + 1), 1e-13) << "N=" << N << " m=" << m;
      }
    }
    const NodeSet gl = build_nodeset(N, PointKind::GL);
    EXPECT_GT(gl.nodes[0], 0.0);
    EXPECT_LT(gl.nodes[N], 1.0);
    const NodeSet gll = build_nodeset(N, PointKind::GLL);
    EXPECT_EQ(gll.nodes[0], 0.0);
    EXPECT_EQ(gll.nodes[N], 1.0);
  }
  const NodeSet ns = build_nodeset(3, PointKind::GL);
  double s7 = 0.0;
  for (int p = 0; p < 4; ++p) s7 += ns.weights[p] * std::pow(ns.nodes[p], 7);
  EXPECT_NEAR(s7, 0.125, 1e-13);
}

TEST(NodeSet, RejectsBadDegree) {
  EXPECT_THROW(build_nodeset(0, PointKind::GLL), ConfigError);
  EXPECT_THROW(build_nodeset(-1, PointKind::GL), ConfigError);
}

TEST(DiffMatrix, LinearLobatto) {
  const Eigen::MatrixXd D = build_diff_matrix(build_nodeset(1, PointKind::GLL));
  EXPECT_NEAR(D(0, 0), -1.0, 1e-15);
  EXPECT_NEAR(D(0, 1), 1.0, 1e-15);
  EXPECT_NEAR(D(1, 0), -1.0, 1e-15);
  EXPECT_NEAR(D(1, 1), 1.0, 1e-15);
}

TEST(DiffMatrix, RowsSumToZeroAndCubicDerivative) {
  for (PointKind kind : {PointKind::GL, PointKind::GLL}) {
    const NodeSet ns = build_nodeset(3, kind);
    const Eigen::MatrixXd D = build_diff_matrix(ns);
    EXPECT_LT((D * Eigen::VectorXd::Ones(4)).cwiseAbs().maxCoeff(), 1e-13);
    const Eigen::VectorXd d = D * sample(ns, [](double x) { return x * x * x; });
    for (int p = 0; p < 4; ++p) EXPECT_NEAR(d[p], 3 * ns.nodes[p] * ns.nodes[p], 1e-13);
    // N+1 derivatives annihilate degree-N data
    Eigen::VectorXd v = sample(ns, [](double x) { return 2 - x + 3 * x * x - x * x * x; });
    for (int k = 0; k < 4; ++k) v = D * v;
    EXPECT_LT(v.cwiseAbs().maxCoeff(), 1e-11);
  }
}

TEST(FaceVandermonde, LobattoSelectsEndpoints) {
  const auto V = build_face_vandermonde(build_nodeset(3, PointKind::GLL));
  EXPECT_EQ(V.VL, Eigen::Vector4d(1, 0, 0, 0));
  EXPECT_EQ(V.VR, Eigen::Vector4d(0, 0, 0, 1));
  const Eigen::Vector4d u(0.3, -1.7, 2.2, 5.1);
  EXPECT_EQ(V.VL.dot(u), u[0]);
  EXPECT_EQ(V.VR.dot(u), u[3]);
}

TEST(FaceVandermonde, PartitionOfUnityAndExtrapolation) {
  for (PointKind kind : {PointKind::GL, PointKind::GLL}) {
    const NodeSet ns = build_nodeset(3, kind);
    const auto V = build_face_vandermonde(ns);
    EXPECT_NEAR(V.VL.sum(), 1.0, 1e-14);
    EXPECT_NEAR(V.VR.sum(), 1.0, 1e-14);
    EXPECT_NEAR(V.VR.dot(sample(ns, [](double x) { return x * x; })), 1.0, 1e-14);
    EXPECT_NEAR(V.VL.dot(sample(ns, [](double x) { return 1 + x * x * x; })), 1.0, 1e-14);
  }
}

TEST(Correction, EndpointConditionsAndSymmetry) {
  for (CorrectionKind c : {CorrectionKind::Radau, CorrectionKind::G2}) {
    for (int N = 1; N <= 5; ++N) {
      EXPECT_NEAR(correction_left(N, c, 0.0), 1.0, 1e-14);
      EXPECT_NEAR(correction_left(N, c, 1.0), 0.0, 1e-14);
      for (PointKind kind : {PointKind::GL, PointKind::GLL}) {
        const NodeSet ns = build_nodeset(N, kind);
        const auto b = build_correction_derivatives(ns, c);
        // g_L' has degree N, so the rule integrates it exactly
        EXPECT_NEAR(ns.weights.dot(b.bL), -1.0, 1e-13);
        EXPECT_NEAR(ns.weights.dot(b.bR), 1.0, 1e-13);
        for (int p = 0; p <= N; ++p) EXPECT_NEAR(b.bR[p], -b.bL[N - p], 1e-13);
      }
    }
  }
}

TEST(Correction, RadauMidpointValue) {
  // ((-1)^{N+1}/2)(P_{N+1}(0) - P_N(0)) with P_4(0) = 3/8, P_3(0) = 0
  EXPECT_NEAR(correction_left(3, CorrectionKind::Radau, 0.5), 3.0 / 16.0, 1e-15);
  // N = 2: -(1/2)(P_3(0) - P_2(0)) = -(1/2)(0 + 1/2)
  EXPECT_NEAR(correction_left(2, CorrectionKind::Radau, 0.5), -0.25, 1e-15);
}

TEST(Correction, DerivativeMatchesFiniteDifference) {
  for (CorrectionKind c : {CorrectionKind::Radau, CorrectionKind::G2}) {
    for (double x : {0.1, 0.37, 0.8}) {
      const double h = 1e-3;
      // five-point rule, exact for the degree-4 correction polynomial
      const double fd = (-correction_left(3, c, x + 2 * h) + 8 * correction_left(3, c, x + h) -
                         8 * correction_left(3, c, x - h) + correction_left(3, c, x - 2 * h)) /
                        (12 * h);
      EXPECT_NEAR(correction_left_derivative(3, c, x), fd, 1e-9);
    }
  }
}

TEST(D1, DefinitionAndRowSums) {
  const auto ops = reference_operators(3, PointKind::GL, CorrectionKind::Radau);
  const Eigen::MatrixXd expect =
      ops->D - ops->bL * ops->VL.transpose() - ops->bR * ops->VR.transpose();
  EXPECT_LT((ops->D1 - expect).cwiseAbs().maxCoeff(), 1e-14);
  const Eigen::VectorXd rows = ops->D1 * Eigen::VectorXd::Ones(4);
  for (int p = 0; p < 4; ++p) EXPECT_NEAR(rows[p], -(ops->bL[p] + ops->bR[p]), 1e-13);
  const Eigen::VectorXd z = Eigen::VectorXd::Zero(4);
  EXPECT_EQ(build_d1(ops->D, z, z, ops->VL, ops->VR), ops->D);
}

TEST(D1, MatchesContinuousFluxDerivative) {
  for (PointKind kind : {PointKind::GLL, PointKind::GL}) {
    const auto ops = reference_operators(3, kind, CorrectionKind::Radau);
    const NodeSet& ns = ops->nodeset;
    Eigen::VectorXd F(4);
    for (int p = 0; p < 4; ++p) F[p] = std::sin(3 * ns.nodes[p]) + ns.nodes[p];
    const double Fl = 0.42, Fr = -1.3;
    auto Fh = [&](double x) { return lagrange_basis(ns.nodes, x).dot(F); };
    auto Fc = [&](double x) {
      return Fh(x) + (Fl - Fh(0.0)) * correction_left(3, CorrectionKind::Radau, x) +
             (Fr - Fh(1.0)) * correction_left(3, CorrectionKind::Radau, 1.0 - x);
    };
    const Eigen::VectorXd direct = ops->bL * Fl + ops->D1 * F + ops->bR * Fr;
    for (int p = 0; p < 4; ++p) {
      const double x = ns.nodes[p], h = 1e-2;
      const double fd = (-Fc(x + 2 * h) + 8 * Fc(x + h) - 8 * Fc(x - h) + Fc(x - 2 * h)) / (12 * h);
      EXPECT_NEAR(direct[p], fd, 1e-11);
    }
  }
}

TEST(ReferenceOperators, CachedInstancesAreShared) {
  auto a = reference_operators(3, PointKind::GL, CorrectionKind::Radau);
  auto b = reference_operators(3, PointKind::GL, CorrectionKind::Radau);
  EXPECT_EQ(a.get(), b.get());
}
