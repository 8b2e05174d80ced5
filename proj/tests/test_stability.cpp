#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "mdrk/errors.hpp"
#include "mdrk/stability.hpp"

using namespace mdrk;

namespace {

std::shared_ptr<const ReferenceOperators> radau() {
  return reference_operators(3, PointKind::GL, CorrectionKind::Radau);
}
std::shared_ptr<const ReferenceOperators> g2() {
  return reference_operators(3, PointKind::GLL, CorrectionKind::G2);
}

}  // namespace

TEST(Stability, ZeroCflIsIdentity) {
  for (auto d : {Dissipation::D1, Dissipation::D2}) {
    const auto s = assemble_matrices(*radau(), 0.0, d);
    for (double k : {0.0, 0.7, 2.0}) {
      const Eigen::MatrixXcd H = amplification_matrix(s, k);
      EXPECT_LT((H - Eigen::MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff(), 1e-14);
    }
  }
}

TEST(Stability, D2HasNoDownwindCoupling) {
  const auto s = assemble_matrices(*radau(), 0.1, Dissipation::D2);
  EXPECT_LT(s.full.at(1).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_LT(s.full.at(2).cwiseAbs().maxCoeff(), 1e-14);
  const auto d1 = assemble_matrices(*radau(), 0.1, Dissipation::D1);
  EXPECT_GT(d1.full.at(1).cwiseAbs().maxCoeff(), 1e-6);
}

TEST(Stability, ConstantsPreservedAndConjugateSymmetry) {
  for (auto ops : {radau(), g2()})
    for (auto d : {Dissipation::D1, Dissipation::D2}) {
      const auto s = assemble_matrices(*ops, 0.08, d);
      const Eigen::MatrixXcd H0 = amplification_matrix(s, 0.0);
      const Eigen::VectorXcd one = Eigen::VectorXcd::Ones(ops->size());
      EXPECT_LT((H0 * one - one).cwiseAbs().maxCoeff(), 1e-13);
      const Eigen::MatrixXcd Hp = amplification_matrix(s, 1.3), Hm = amplification_matrix(s, -1.3);
      EXPECT_LT((Hp.conjugate() - Hm).cwiseAbs().maxCoeff(), 1e-13);
    }
}

TEST(Stability, StableJustBelowLimit) {
  EXPECT_LE(max_amplification(*radau(), Dissipation::D2, 0.107), 1.0 + 1e-8);
  EXPECT_GT(max_amplification(*radau(), Dissipation::D2, 0.12), 1.0 + 1e-6);
  EXPECT_LE(max_amplification(*g2(), Dissipation::D2, 0.224), 1.0 + 1e-8);
}

TEST(Stability, CflValues) {
  EXPECT_NEAR(find_cfl(*radau(), Dissipation::D2).rounded, 0.107, 1e-12);
  EXPECT_NEAR(find_cfl(*radau(), Dissipation::D1).rounded, 0.084, 1e-12);
  EXPECT_NEAR(find_cfl(*g2(), Dissipation::D2).rounded, 0.224, 1e-12);
  EXPECT_NEAR(find_cfl(*g2(), Dissipation::D1).rounded, 0.145, 1e-12);
  EXPECT_NEAR(default_cfl(3, CorrectionKind::Radau, Dissipation::D2), 0.107, 1e-12);
}

TEST(Stability, ClosedFormAgreesWithAssembly) {
  for (double sigma : {0.05, 0.1}) {
    std::map<int, Eigen::MatrixXd> a1;
    const auto cf = closed_form_d2(*radau(), sigma, &a1);
    const auto s = assemble_matrices(*radau(), sigma, Dissipation::D2);
    for (int k : {-1, 0}) EXPECT_LT((a1.at(k) - s.A1.at(k)).cwiseAbs().maxCoeff(), 1e-12) << k;
    for (int k : {-2, -1}) EXPECT_LT((cf.at(k) - s.A.at(k)).cwiseAbs().maxCoeff(), 1e-12) << k;
    // A[0] enters with the opposite sign
    EXPECT_LT((cf.at(0) + s.A.at(0)).cwiseAbs().maxCoeff(), 1e-12);
    const Eigen::VectorXd one = Eigen::VectorXd::Ones(4);
    EXPECT_LT(((sigma * s.A.at(-2) + s.A.at(-1) + s.A.at(0)) * one).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_GT(((sigma * cf.at(-2) + cf.at(-1) + cf.at(0)) * one).cwiseAbs().maxCoeff(), 1e-3);
  }
}

TEST(Stability, SampleCountValidated) {
  EXPECT_THROW(find_cfl(*radau(), Dissipation::D2, 100), ConfigError);
}

TEST(Stability, RkfrBaseline) {
  EXPECT_NEAR(find_rkfr_cfl(*radau()).rounded, 0.215, 1e-12);
}

TEST(Stability, SpeedRatio) {
  const auto a = assemble_matrices(*radau(), 0.09, Dissipation::D2);
  const auto b = assemble_matrices(*radau(), 0.09, Dissipation::D2, 1.0);
  for (double k : {0.3, 2.1}) EXPECT_EQ(amplification_matrix(a, k), amplification_matrix(b, k));
  // no advection: time averages reduce to the solution, D1 and D2 coincide
  const auto d1 = assemble_matrices(*radau(), 0.09, Dissipation::D1, 0.0);
  const auto d2 = assemble_matrices(*radau(), 0.09, Dissipation::D2, 0.0);
  for (double k : {0.3, 2.1})
    EXPECT_LT((amplification_matrix(d1, k) - amplification_matrix(d2, k)).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Stability, SystemCflBelowScalarTable) {
  const CflSearch r = find_system_cfl(*radau(), Dissipation::D2);
  EXPECT_NEAR(r.sigma, 0.1, 5e-4);
  EXPECT_LT(r.sigma, 0.98 * 0.107);
  EXPECT_GT(max_amplification(*radau(), Dissipation::D2, 0.98 * 0.107, 1024, 0.0), 1.0 + 1e-6);
  EXPECT_NEAR(find_system_cfl(*g2(), Dissipation::D2).sigma, 1.0 / 6.0, 5e-4);
}
