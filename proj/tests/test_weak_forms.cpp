#include <gtest/gtest.h>

#include <cmath>

#include "klts/error.hpp"
#include "klts/linearization.hpp"
#include "klts/quadrature.hpp"
#include "klts/weak_forms.hpp"

namespace klts {
namespace {

const Box3 kUnitBox{Vec3{{0.0, 0.0, 0.0}}, Vec3{{1.0, 1.0, 1.0}}};

TEST(Quadrature, GaussLegendreIsExactToDegreeTwoNMinusOne) {
  const LineRule r = gauss_legendre(3, 0.0, 1.0);
  double s5 = 0.0, s6 = 0.0;
  for (std::size_t i = 0; i < r.points.size(); ++i) {
    s5 += r.weights[i] * std::pow(r.points[i], 5);
    s6 += r.weights[i] * std::pow(r.points[i], 6);
  }
  EXPECT_NEAR(s5, 1.0 / 6.0, 1e-15);
  EXPECT_GT(std::fabs(s6 - 1.0 / 7.0), 1e-6);
}

TEST(Quadrature, BoxRuleWeightsSumToVolume) {
  const BoxRule r = tensor_rule(Box3{Vec3{{0.0, -1.0, 2.0}}, Vec3{{2.0, 1.0, 2.5}}}, 4);
  double w = 0.0;
  for (const auto& p : r.points) w += p.w;
  EXPECT_NEAR(w, 2.0, 1e-14);
  EXPECT_EQ(r.points.size(), 64u);
}

TEST(WeakForms, QuadratureOutsideChartDomainIsRejected) {
  VolumeMechanicalInput in;
  in.current = affine_volume_chart(Mat3::identity(), Vec3{}, kUnitBox);
  in.variation = affine_volume_chart(Mat3::identity(), Vec3{}, kUnitBox);
  in.sigma = [](const Vec3&) { return Mat3::identity(); };
  const BoxRule rule = tensor_rule(Box3{Vec3{{0.0, 0.0, 0.0}}, Vec3{{2.0, 1.0, 1.0}}}, 2);
  try {
    (void)assemble_volume_mechanical(in, rule);
    FAIL() << "expected QuadratureDomainMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::QuadratureDomainMismatch);
  }
}

TEST(WeakForms, UniformStressAgainstLinearVariation) {
  // δx = A ξ on the unit cube with σ constant: G_int = ∫A:σ dv = A:σ.
  Mat3 a;
  a(0, 0) = 0.3;
  a(1, 2) = -0.2;
  a(2, 1) = 0.5;
  Mat3 sigma = Mat3::identity();
  sigma(1, 2) = sigma(2, 1) = 0.4;
  VolumeMechanicalInput in;
  in.current = affine_volume_chart(Mat3::identity(), Vec3{}, kUnitBox);
  in.variation = affine_volume_chart(a, Vec3{}, kUnitBox);
  in.sigma = [sigma](const Vec3&) { return sigma; };
  const ResidualBreakdown r = assemble_volume_mechanical(in, tensor_rule(kUnitBox, 2));
  EXPECT_NEAR(r.G_int, ddot(a, sigma), 1e-14);
  EXPECT_EQ(r.G_in, 0.0);
}

TEST(Linearization, TableAtUndeformedFlatState) {
  const LinearizationTable t = surface_linearization_table(Mat2::identity(), Mat2{}, {}, true);
  EXPECT_DOUBLE_EQ(t.J, 1.0);
  EXPECT_EQ(t.H, 0.0);
  EXPECT_EQ(t.K, 0.0);
  EXPECT_NEAR(max_abs(t.dJ_dC - 0.5 * Mat2::identity()), 0.0, 1e-16);
  EXPECT_NEAR(max_abs(t.dH_db - 0.5 * Mat2::identity()), 0.0, 1e-16);
  EXPECT_EQ(max_abs(t.dH_dC), 0.0);
  EXPECT_FALSE(t.dK_db.has_value());
  Mat2 dc;
  dc(0, 0) = 0.1;
  dc(0, 1) = dc(1, 0) = 0.2;
  dc(1, 1) = -0.3;
  EXPECT_NEAR(max_abs(apply_plus_layout(t.dCinv_dC, dc) + dc), 0.0, 1e-16);
}

TEST(Linearization, SingularCurvatureIsReported) {
  try {
    (void)surface_linearization_table(Mat2::identity(), Mat2{});
    FAIL() << "expected SingularCurvature";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SingularCurvature);
  }
}

TEST(Linearization, NonSpdMetricIsReported) {
  Mat2 c = Mat2::identity();
  c(0, 1) = c(1, 0) = 2.0;
  try {
    (void)surface_linearization_table(c, Mat2::identity());
    FAIL() << "expected NotSPD";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSPD);
  }
}

TEST(Linearization, SphericalCapValues) {
  // b = −A/R on a sphere of radius R with A = 𝟏: H = −1/R, K = 1/R².
  const double R = 2.0;
  const LinearizationTable t = surface_linearization_table(Mat2::identity(), (-1.0 / R) * Mat2::identity());
  EXPECT_NEAR(t.H, -1.0 / R, 1e-15);
  EXPECT_NEAR(t.K, 1.0 / (R * R), 1e-15);
  ASSERT_TRUE(t.dK_db.has_value());
  EXPECT_NEAR(max_abs(*t.dK_db - (-1.0 / R) * Mat2::identity()), 0.0, 1e-15);
}

TEST(Quadrature, PairwiseSumIsAccurate) {
  std::vector<double> v(1000, 0.1);
  EXPECT_NEAR(pairwise_sum(v), 100.0, 1e-12);
}

}  // namespace
}  // namespace klts
