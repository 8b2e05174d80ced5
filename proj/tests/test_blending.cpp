#include <array>
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "mdrk/blending.hpp"
#include "mdrk/smoothness.hpp"

using namespace mdrk;

namespace {

using S1 = State<1>;
using S3 = Euler::state_type;

struct Element {
  std::shared_ptr<const ReferenceOperators> ops = reference_operators(3, PointKind::GL, CorrectionKind::Radau);
  double left = 0.2, dx = 0.1;
  std::vector<double> faces = subfaces(left, dx, ops->weights());
  std::array<double, 4> x{};
  Element() {
    for (int p = 0; p < 4; ++p) x[p] = left + ops->nodes()[p] * dx;
  }
};

}  // namespace

TEST(Subcells, WidthsAreWeights) {
  const Element el;
  ASSERT_EQ(el.faces.size(), 5u);
  EXPECT_EQ(el.faces.front(), el.left);
  EXPECT_EQ(el.faces.back(), el.left + el.dx);
  for (int p = 0; p < 4; ++p) {
    EXPECT_GT(el.faces[p + 1], el.faces[p]);
    EXPECT_NEAR(el.faces[p + 1] - el.faces[p], el.ops->weights()[p] * el.dx, 1e-15);
    EXPECT_GT(el.x[p], el.faces[p]);
    EXPECT_LT(el.x[p], el.faces[p + 1]);
  }
}

TEST(Smoothness, ConstantLinearAndStep) {
  const NodeSet ns = build_nodeset(3, PointKind::GL);
  const SmoothnessIndicator ind(ns, BlendingParameters{});
  EXPECT_NEAR(ind.threshold(), 0.5 * std::pow(10.0, -1.8 * std::pow(4.0, 0.25)), 1e-15);
  const std::array<double, 4> c{2.0, 2.0, 2.0, 2.0};
  EXPECT_EQ(ind.alpha(c), 0.0);
  std::array<double, 4> lin;
  for (int p = 0; p < 4; ++p) lin[p] = 1.0 + 0.3 * ns.nodes[p];
  EXPECT_EQ(ind.alpha(lin), 0.0);
  const std::array<double, 4> step{1.0, 1.0, 0.0, 0.0};
  EXPECT_EQ(ind.alpha(step), 0.5);
}

TEST(Smoothness, MonotoneInEnergy) {
  const SmoothnessIndicator ind(build_nodeset(3, PointKind::GL), BlendingParameters{});
  double prev = 0.0;
  for (double e = 0.0; e <= 1.0; e += 1e-4) {
    const double a = ind.alpha_from_energy(e);
    EXPECT_GE(a, prev);
    EXPECT_GE(a, 0.0);
    EXPECT_LE(a, 0.5);
    prev = a;
  }
}

TEST(Smoothness, NeighbourSmoothing) {
  std::array<double, 5> a{0.0, 0.0, 0.5, 0.0, 0.0};
  smooth_alpha(a, false);
  EXPECT_EQ(a, (std::array<double, 5>{0.0, 0.25, 0.5, 0.25, 0.0}));
  std::array<double, 4> b{0.4, 0.0, 0.0, 0.0};
  smooth_alpha(b, true);
  EXPECT_EQ(b, (std::array<double, 4>{0.4, 0.2, 0.0, 0.2}));
}

TEST(LowOrder, ConstantFieldUnchanged) {
  const Element el;
  const Euler eu;
  const S3 u = eu.from_primitive(1.1, 0.3, 0.8);
  std::array<S3, 4> uu, low, tl, tr;
  uu.fill(u);
  for (Limiter lim : {Limiter::BlendFO, Limiter::BlendMH}) {
    if (lim == Limiter::BlendMH) {
      muscl_hancock_traces<Euler>(eu, uu, el.x, el.faces, u, el.left - 0.01, u, el.left + el.dx + 0.01, 0.01, tl, tr);
    } else {
      tl = uu;
      tr = uu;
    }
    std::array<S3, 3> fs;
    subcell_fluxes<Euler>(eu, tl, tr, el.faces, fs);
    low_order_update<Euler>(uu, fs, eu.flux(u, 0), eu.flux(u, 0), el.ops->weights(), el.dx, 0.01, low);
    for (const auto& v : low) EXPECT_LT((v - u).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(LowOrder, MeanIdentityAndHandRolledUpwind) {
  const Element el;
  const LinearAdvection m;
  const std::array<S1, 4> u{S1(1.0), S1(0.4), S1(-0.2), S1(0.9)};
  std::array<S1, 3> fs;
  subcell_fluxes<LinearAdvection>(m, u, u, el.faces, fs);
  const S1 Fl(0.7), Fr(1.3);
  const double tau = 0.004;
  std::array<S1, 4> low;
  low_order_update<LinearAdvection>(u, fs, Fl, Fr, el.ops->weights(), el.dx, tau, low);
  double mean_old = 0.0, mean_new = 0.0;
  for (int p = 0; p < 4; ++p) {
    mean_old += el.ops->weights()[p] * u[p][0];
    mean_new += el.ops->weights()[p] * low[p][0];
  }
  EXPECT_NEAR(mean_new, mean_old - tau / el.dx * (Fr[0] - Fl[0]), 1e-15);
  // a = 1: Rusanov is pure upwind, f_{p+1/2} = u_p
  double upstream = Fl[0];
  for (int p = 0; p < 4; ++p) {
    const double out = p == 3 ? Fr[0] : u[p][0];
    const double expect = u[p][0] - tau / (el.ops->weights()[p] * el.dx) * (out - upstream);
    EXPECT_NEAR(low[p][0], expect, 1e-15);
    upstream = out;
  }
}

TEST(MusclHancock, ZeroSlopeEqualsFirstOrderBitwise) {
  const Element el;
  const VariableAdvection m;
  const std::array<S1, 4> u{S1(1.0), S1(0.4), S1(-0.2), S1(0.9)};
  std::array<S1, 4> tl, tr;
  muscl_hancock_traces<VariableAdvection>(m, u, el.x, el.faces, S1(0.3), el.left - 0.02, S1(1.5),
                                          el.left + el.dx + 0.02, 0.003, tl, tr, 0.0);
  std::array<S1, 3> mh, fo;
  subcell_fluxes<VariableAdvection>(m, tl, tr, el.faces, mh);
  subcell_fluxes<VariableAdvection>(m, u, u, el.faces, fo);
  for (int p = 0; p < 3; ++p) EXPECT_EQ(mh[p][0], fo[p][0]);
  for (int p = 0; p < 4; ++p) {
    EXPECT_EQ(tl[p][0], u[p][0]);
    EXPECT_EQ(tr[p][0], u[p][0]);
  }
}

TEST(MusclHancock, LinearDataReconstructedExactly) {
  const Element el;
  const LinearAdvection m;
  auto g = [](double x) { return 2.0 - 3.0 * x; };
  std::array<S1, 4> u, tl, tr;
  for (int p = 0; p < 4; ++p) u[p] = S1(g(el.x[p]));
  const double xl = el.left - 0.01, xr = el.left + el.dx + 0.01;
  muscl_hancock_traces<LinearAdvection>(m, u, el.x, el.faces, S1(g(xl)), xl, S1(g(xr)), xr, 0.0, tl, tr);
  for (int p = 0; p < 4; ++p) {
    EXPECT_NEAR(tl[p][0], g(el.faces[p]), 1e-14);
    EXPECT_NEAR(tr[p][0], g(el.faces[p + 1]), 1e-14);
  }
  // half-step predictor moves the linear profile by tau/2 at unit speed
  const double tau = 0.002;
  muscl_hancock_traces<LinearAdvection>(m, u, el.x, el.faces, S1(g(xl)), xl, S1(g(xr)), xr, tau, tl, tr);
  for (int p = 0; p < 4; ++p) {
    EXPECT_NEAR(tl[p][0], g(el.faces[p] - 0.5 * tau), 1e-14);
    EXPECT_NEAR(tr[p][0], g(el.faces[p + 1] - 0.5 * tau), 1e-14);
  }
}

TEST(Blend, ConvexCombinationKeepsMean) {
  const Element el;
  const std::array<S1, 4> high{S1(1.0), S1(-0.5), S1(2.0), S1(0.25)};
  std::array<S1, 4> low{S1(0.9), S1(0.1), S1(1.0), S1(0.5)};
  double mh = 0.0, ml = 0.0;
  for (int p = 0; p < 4; ++p) {
    mh += el.ops->weights()[p] * high[p][0];
    ml += el.ops->weights()[p] * low[p][0];
  }
  // same face fluxes: shift low so that its mean matches the high-order mean
  for (auto& v : low) v[0] += mh - ml;
  std::array<S1, 4> out;
  blend_update<LinearAdvection>(high, low, 0.0, out);
  EXPECT_EQ(out, high);
  blend_update<LinearAdvection>(high, low, 1.0, out);
  EXPECT_EQ(out, low);
  for (double a : {0.1, 0.37, 0.5, 0.9}) {
    blend_update<LinearAdvection>(high, low, a, out);
    double mo = 0.0;
    for (int p = 0; p < 4; ++p) mo += el.ops->weights()[p] * out[p][0];
    EXPECT_NEAR(mo, mh, 1e-15);
  }
  EXPECT_THROW(blend_update<LinearAdvection>(high, low, 1.2, out), std::logic_error);
  EXPECT_THROW(blend_update<LinearAdvection>(high, low, -0.1, out), std::logic_error);
}

TEST(FluxLimiter, ThetaFormula) {
  EXPECT_EQ(limiter_theta(0.1, 1.0, 0.5), 1.0);
  EXPECT_NEAR(limiter_theta(0.1, 1.0, -0.8), 0.9 / 1.8, 1e-15);
}

TEST(FluxLimiter, SmoothFaceUntouched) {
  const Euler eu;
  const S3 ul = eu.from_primitive(1.0, 0.1, 1.0), ur = eu.from_primitive(1.05, 0.1, 1.02);
  const S3 low = rusanov_flux(eu, ul, ur, 0.0);
  const S3 cand = low + S3(1e-4, -2e-4, 1e-4);
  const double c = 0.01;
  std::array<double, 2> theta;
  const S3 F = limit_face_flux<Euler>(eu, cand, low, left_neighbour<Euler>(ul, eu.flux(ul, 0), c),
                                      right_neighbour<Euler>(ur, eu.flux(ur, 0), c), 0.1, &theta);
  EXPECT_EQ(F, cand);
  EXPECT_EQ(theta, (std::array<double, 2>{1.0, 1.0}));
}

TEST(FluxLimiter, NonFiniteCandidateFallsBackToLowOrder) {
  const Euler eu;
  const S3 u = eu.from_primitive(1.0, 0.0, 1.0);
  const S3 low = eu.flux(u, 0);
  std::array<double, 2> theta;
  const S3 F = limit_face_flux<Euler>(eu, S3(NAN, 0, 0), low, left_neighbour<Euler>(u, low, 0.01),
                                      right_neighbour<Euler>(u, low, 0.01), 0.1, &theta);
  EXPECT_EQ(F, low);
  EXPECT_EQ(theta[0], 0.0);
}

TEST(FluxLimiter, BlastFaceRestoresPositivity) {
  const Euler eu;
  const auto ops = reference_operators(3, PointKind::GL, CorrectionKind::Radau);
  const double dx = 1.0 / 400;
  const S3 ul = eu.from_primitive(1.0, 0.0, 1000.0), ur = eu.from_primitive(1.0, 0.0, 0.01);
  const double tau = 0.98 * 0.107 * dx / eu.speed_bound(ul, 0.0);
  const S3 low = rusanov_flux(eu, ul, ur, 0.0);
  const auto L = left_neighbour<Euler>(ul, eu.flux(ul, 0), tau / (ops->weights()[3] * dx));
  const auto R = right_neighbour<Euler>(ur, eu.flux(ur, 0), tau / (ops->weights()[0] * dx));
  S3 cand = low;
  cand[2] = -5.0;
  ASSERT_LT(eu.pressure(R(cand)), 0.0);
  std::array<double, 2> theta;
  const S3 F = limit_face_flux<Euler>(eu, cand, low, L, R, 0.1, &theta);
  EXPECT_LT(theta[1], 1.0);
  for (const auto* side : {&L, &R}) {
    const S3 lo = (*side)(low), lim = (*side)(F);
    EXPECT_GE(lim[0], 0.1 * lo[0] * (1 - 1e-12));
    EXPECT_GE(eu.pressure(lim), 0.1 * eu.pressure(lo) * (1 - 1e-12));
  }
}

TEST(FluxLimiter, InadmissibleLowOrderIsHardError) {
  const Euler eu;
  const S3 u = eu.from_primitive(1.0, 0.0, 1.0);
  const S3 bad_low(0.0, 0.0, 1e6);
  EXPECT_THROW(limit_face_flux<Euler>(eu, bad_low, bad_low, left_neighbour<Euler>(u, eu.flux(u, 0), 1.0),
                                      right_neighbour<Euler>(u, eu.flux(u, 0), 1.0), 0.1),
               AdmissibilityError);
}

TEST(ScalingLimiter, IdentityWhenAdmissible) {
  const Euler eu;
  const auto ops = reference_operators(3, PointKind::GL, CorrectionKind::Radau);
  std::array<S3, 4> u{eu.from_primitive(1.0, 0.0, 1.0), eu.from_primitive(1.1, 0.2, 0.9),
                      eu.from_primitive(0.9, -0.1, 1.1), eu.from_primitive(1.0, 0.0, 1.0)};
  const auto before = u;
  EXPECT_EQ(scaling_limiter<Euler>(eu, u, ops->weights()), 1.0);
  EXPECT_EQ(u, before);
}

TEST(ScalingLimiter, NegativeNodePressure) {
  const Euler eu;
  const auto ops = reference_operators(3, PointKind::GL, CorrectionKind::Radau);
  const auto& w = ops->weights();
  const double others = (1.0 + 0.1 * w[0]) / (1.0 - w[0]);
  std::array<S3, 4> u{eu.from_primitive(1.0, 0.0, -0.1), eu.from_primitive(1.0, 0.0, others),
                      eu.from_primitive(1.0, 0.0, others), eu.from_primitive(1.0, 0.0, others)};
  S3 mean = S3::Zero();
  for (int p = 0; p < 4; ++p) mean += w[p] * u[p];
  ASSERT_NEAR(eu.pressure(mean), 1.0, 1e-14);
  const double theta = scaling_limiter<Euler>(eu, u, w);
  EXPECT_LT(theta, 1.0);
  S3 after = S3::Zero();
  double pmin = INFINITY;
  for (int p = 0; p < 4; ++p) {
    after += w[p] * u[p];
    pmin = std::min(pmin, eu.pressure(u[p]));
  }
  EXPECT_LT((after - mean).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_GE(pmin, 0.1 * eu.pressure(mean) - 1e-14);
}

TEST(ScalingLimiter, NegativeDensityAndInadmissibleMean) {
  const Euler eu;
  const auto ops = reference_operators(3, PointKind::GL, CorrectionKind::Radau);
  const auto& w = ops->weights();
  const S3 good = eu.from_primitive(1.0, 0.0, 1.0);
  std::array<S3, 4> v{good, good, good, good};
  v[3][2] = -1e3;
  EXPECT_THROW(scaling_limiter<Euler>(eu, v, w), AdmissibilityError);
  std::array<S3, 4> z{good, good, good, good};
  z[2] = eu.from_primitive(1.0, 0.0, 1.0) * -0.05;
  const double th = scaling_limiter<Euler>(eu, z, w);
  EXPECT_GT(th, 0.0);
  EXPECT_LT(th, 1.0);
  for (const auto& s : z) EXPECT_LT(first_violation(eu, s), 0);
}
