#include <array>
#include <cmath>

#include <gtest/gtest.h>

#include "mdrk/alw.hpp"

using namespace mdrk;

namespace {

// f(u) = u^4, for stencil exactness on quartics
struct Quartic {
  static constexpr int nvar = 1;
  static constexpr int nconstraints = 0;
  static constexpr bool has_source = false;
  using state_type = State<1>;
  state_type flux(const state_type& u, double) const { return state_type(std::pow(u[0], 4)); }
  double speed_bound(const state_type& u, double) const { return 4 * std::abs(std::pow(u[0], 3)); }
  std::array<double, 0> constraints(const state_type&) const { return {}; }
  double indicator(const state_type& u) const { return u[0]; }
  static std::array<const char*, 0> constraint_names() { return {}; }
};

// s(u) = -2u + 1
struct LinearSource : LinearAdvection {
  static constexpr bool has_source = true;
  state_type source(const state_type& u, double, double) const { return state_type(-2.0 * u[0] + 1.0); }
};

using S1 = State<1>;

std::array<S1, 4> nodal(const ReferenceOperators& ops, double (*q)(double)) {
  std::array<S1, 4> v;
  for (int p = 0; p < 4; ++p) v[p] = S1(q(ops.nodes()[p]));
  return v;
}

}  // namespace

TEST(LocalDerivative, ConstantIsZero) {
  const auto ops = reference_operators(3, PointKind::GL, CorrectionKind::Radau);
  std::array<S1, 4> f, u1;
  f.fill(S1(0.7));
  local_solution_derivative<S1>(ops->D, f, 0.3, u1);
  for (const auto& v : u1) EXPECT_NEAR(v[0], 0.0, 1e-14);
}

TEST(LocalDerivative, PolynomialExactness) {
  const auto ops = reference_operators(3, PointKind::GL, CorrectionKind::Radau);
  const auto f = nodal(*ops, [](double x) { return x * x * x - x; });
  std::array<S1, 4> u1;
  const double dt_dx = 0.05;
  local_solution_derivative<S1>(ops->D, f, dt_dx, u1);
  for (int p = 0; p < 4; ++p) {
    const double x = ops->nodes()[p];
    EXPECT_NEAR(u1[p][0], -dt_dx * (3 * x * x - 1), 1e-14);
  }
}

TEST(LocalDerivative, SourceIncrement) {
  const auto ops = reference_operators(3, PointKind::GL, CorrectionKind::Radau);
  std::array<S1, 4> f, u1, s;
  f.fill(S1(0.0));
  s.fill(S1(1.0));
  local_solution_derivative<S1>(ops->D, f, 0.2, u1);
  add_source_increment<S1>(s, 0.01, u1);
  for (const auto& v : u1) EXPECT_DOUBLE_EQ(v[0], 0.01);
}

TEST(Stencil, LinearFluxExact) {
  const LinearAdvection m{2.5};
  const S1 f1 = flux_time_derivative(m, S1(0.3), S1(-0.17), 0.0);
  EXPECT_NEAR(f1[0], 2.5 * -0.17, 1e-15);
  EXPECT_NEAR(flux_time_derivative(Burgers{}, S1(0.4), S1(0.0), 0.0)[0], 0.0, 1e-16);
}

TEST(Stencil, QuarticPathExact) {
  const Quartic m;
  for (double u : {0.3, -1.1, 2.0})
    for (double u1 : {0.01, -0.2, 0.5}) {
      const double expect = 4 * u * u * u * u1;
      EXPECT_NEAR(flux_time_derivative(m, S1(u), S1(u1), 0.0)[0], expect, 1e-13 * std::max(1.0, std::abs(expect)));
    }
}

TEST(Stencil, StrictModeThrowsOnInadmissiblePerturbation) {
  const Euler eu;
  const auto u = eu.from_primitive(1.0, 0.0, 1.0);
  const Euler::state_type u1(0.0, 0.0, -1.5);  // u + 2 u1 has negative energy
  EXPECT_THROW(flux_time_derivative(eu, u, u1, 0.0, true), StencilError);
  EXPECT_NO_THROW(flux_time_derivative(eu, u, u1, 0.0, false));
}

TEST(Stencil, SourceDerivative) {
  const LinearSource m;
  const S1 s1 = source_time_derivative(m, S1(0.4), S1(0.1), 0.0, 0.0, 0.01);
  EXPECT_NEAR(s1[0], -2.0 * 0.1, 1e-15);
}

TEST(TimeAverage, Stage1LinearAdvectionMatchesT1) {
  const auto ops = reference_operators(3, PointKind::GL, CorrectionKind::Radau);
  const double sigma = 0.1;
  const LinearAdvection m;
  const auto u = nodal(*ops, [](double x) { return std::sin(2 * x) + x; });
  std::array<S1, 4> f, u1, F;
  for (int p = 0; p < 4; ++p) f[p] = m.flux(u[p], 0.0);
  local_solution_derivative<S1>(ops->D, f, sigma, u1);
  for (int p = 0; p < 4; ++p) F[p] = stage1_average(f[p], flux_time_derivative(m, u[p], u1[p], 0.0));
  Eigen::Vector4d uv;
  for (int p = 0; p < 4; ++p) uv[p] = u[p][0];
  const Eigen::Vector4d expect = (Eigen::Matrix4d::Identity() - sigma / 4 * ops->D) * uv;
  for (int p = 0; p < 4; ++p) EXPECT_NEAR(F[p][0], expect[p], 1e-14);
  EXPECT_EQ(stage1_average(S1(2.0), S1(0.0))[0], 2.0);
}

TEST(TimeAverage, Stage2Collapse) {
  const S1 f(1.5), f1(0.3);
  EXPECT_NEAR(stage2_average(f, f1, f1)[0], 1.5 + 0.5 * 0.3, 1e-15);
  // linear advection: U2 = (I - sigma/6 D) u - sigma/3 D u*
  const auto ops = reference_operators(3, PointKind::GLL, CorrectionKind::G2);
  const double sigma = 0.2;
  Eigen::Vector4d u(0.1, 0.5, -0.3, 0.9), us(0.2, 0.4, -0.1, 0.7);
  const Eigen::Vector4d u1 = -sigma * ops->D * u, us1 = -sigma * ops->D * us;
  const Eigen::Vector4d expect = (Eigen::Matrix4d::Identity() - sigma / 6 * ops->D) * u - sigma / 3 * ops->D * us;
  for (int p = 0; p < 4; ++p) EXPECT_NEAR(stage2_average(S1(u[p]), S1(u1[p]), S1(us1[p]))[0], expect[p], 1e-15);
}

TEST(NumericalFlux, ConsistencyAndDissipation) {
  const S1 F(0.7);
  EXPECT_EQ(numerical_flux(F, F, S1(0.2), S1(0.2), 3.0), F);
  const double delta = 0.3;
  EXPECT_DOUBLE_EQ(numerical_flux(S1(1.0), S1(2.0), S1(0.0), S1(delta), 1.0)[0], 1.5 - delta / 2);
}

TEST(FrFluxDerivative, ConstantAndTelescoping) {
  for (PointKind kind : {PointKind::GL, PointKind::GLL}) {
    const auto ops = reference_operators(3, kind, CorrectionKind::Radau);
    std::array<S1, 4> F, out;
    F.fill(S1(0.8));
    fr_flux_derivative<S1>(*ops, F, S1(0.8), S1(0.8), out);
    for (const auto& v : out) EXPECT_NEAR(v[0], 0.0, 1e-13);
    F = nodal(*ops, [](double x) { return std::exp(x); });
    const S1 Fl(0.9), Fr(2.4);
    fr_flux_derivative<S1>(*ops, F, Fl, Fr, out);
    double sum = 0.0;
    for (int p = 0; p < 4; ++p) sum += ops->weights()[p] * out[p][0];
    EXPECT_NEAR(sum, Fr[0] - Fl[0], 1e-13);
  }
}

TEST(Extrapolation, CubicFaceValues) {
  const auto ops = reference_operators(3, PointKind::GL, CorrectionKind::Radau);
  const auto q = nodal(*ops, [](double x) { return 1 - 2 * x + x * x * x; });
  EXPECT_NEAR(extrapolate<S1>(ops->VL, q)[0], 1.0, 1e-14);
  EXPECT_NEAR(extrapolate<S1>(ops->VR, q)[0], 0.0, 1e-14);
}
