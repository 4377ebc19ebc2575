#include <gtest/gtest.h>

#include <cmath>

#include "klts/error.hpp"
#include "klts/volume_kinematics.hpp"

namespace klts {
namespace {

const Box3 kBox{Vec3{{0.5, -1.0, -1.0}}, Vec3{{3.0, 1.0, 1.0}}};

Mat3 sample_f() {
  Mat3 m;
  const double v[9] = {1.1, 0.2, 0.0, -0.1, 0.95, 0.3, 0.05, 0.0, 1.2};
  for (std::size_t i = 0; i < 9; ++i) m.c[i] = v[i];
  return m;
}

TEST(VolumeKinematics, CylindricalChristoffelSymbols) {
  const auto chart = cylindrical_chart(kBox);
  const double r = 2.0;
  const ChristoffelField g = christoffel(*chart, Vec3{{r, 0.4, 0.1}});
  EXPECT_NEAR(g(0, 1, 1), -r, 1e-13);        // Γ^r_θθ
  EXPECT_NEAR(g(1, 0, 1), 1.0 / r, 1e-13);   // Γ^θ_rθ
  EXPECT_NEAR(g(1, 1, 0), 1.0 / r, 1e-13);   // symmetric in the lower pair
  EXPECT_NEAR(g(2, 2, 2), 0.0, 1e-13);
  EXPECT_NEAR(g(0, 0, 0), 0.0, 1e-13);
}

TEST(VolumeKinematics, RicciIdentitiesOnCylindricalChart) {
  const auto chart = cylindrical_chart(kBox);
  const Vec3 xi{{1.7, -0.3, 0.2}};
  const BasisTriad b = chart_basis(*chart, xi, Config::Reference);
  const RicciResiduals r = ricci_residuals(b, basis_derivatives(*chart, xi), christoffel(*chart, xi));
  EXPECT_LT(r.max(), 1e-12);
}

TEST(VolumeKinematics, AffineChartsGiveConstantGradient) {
  const auto ref = affine_volume_chart(Mat3::identity(), Vec3{}, kBox);
  const auto cur = affine_volume_chart(sample_f(), Vec3{{1.0, 2.0, 3.0}}, kBox);
  for (const Vec3& xi : {Vec3{{1.0, 0.0, 0.0}}, Vec3{{2.5, 0.7, -0.4}}}) {
    const TwoPointMap f = deformation_gradient(*ref, *cur, xi);
    EXPECT_NEAR(max_abs(f.matrix() - sample_f()), 0.0, 1e-14);
    EXPECT_EQ(f.domain(), Config::Reference);
    EXPECT_EQ(f.codomain(), Config::Current);
  }
}

TEST(VolumeKinematics, ThermoSplitComposesCauchyGreen) {
  const TwoPointMap f(sample_f(), Config::Reference, Config::Current);
  const TwoPointMap ft(Mat3::diagonal(Vec3{{1.01, 1.02, 0.99}}), Config::Reference, Config::Intermediate);
  const VolumeState s = thermo_split(f, ft);
  EXPECT_NEAR(max_abs(transpose(ft.matrix()) * s.C_e.components() * ft.matrix() - s.C.components()), 0.0, 1e-14);
  EXPECT_NEAR(s.J, f.det(), 1e-14);
  EXPECT_NEAR(s.J_T, ft.det(), 1e-14);
  EXPECT_EQ(s.F_e.domain(), Config::Intermediate);
}

TEST(VolumeKinematics, GreenStrainIsSethHillOrderTwo) {
  const TwoPointMap f(sample_f(), Config::Reference, Config::Current);
  const SethHillStrain e = seth_hill(f, 2.0);
  const Mat3 green = 0.5 * (transpose(sample_f()) * sample_f() - Mat3::identity());
  EXPECT_NEAR(max_abs(e.value.components() - green), 0.0, 1e-13);
}

TEST(VolumeKinematics, HenckyStrainOfDiagonalStretch) {
  const TwoPointMap f(Mat3::diagonal(Vec3{{std::exp(0.2), std::exp(-0.1), std::exp(0.05)}}), Config::Reference,
                      Config::Current);
  const SethHillStrain e = seth_hill(f, 0.0);
  EXPECT_NEAR(max_abs(e.value.components() - Mat3::diagonal(Vec3{{0.2, -0.1, 0.05}})), 0.0, 1e-14);
}

TEST(VolumeKinematics, CoaxialHenckyStrainsAdd) {
  const TwoPointMap f1(Mat3::diagonal(Vec3{{1.2, 0.9, 1.05}}), Config::Reference, Config::Current);
  const TwoPointMap f2(Mat3::diagonal(Vec3{{0.8, 1.1, 1.3}}), Config::Reference, Config::Current);
  const HenckyReport r = hencky_additivity_check(f1, f2, {0.0});
  EXPECT_TRUE(r.coaxial);
  ASSERT_EQ(r.entries.size(), 1u);
  EXPECT_LT(r.entries[0].additive_defect, 1e-14);
}

TEST(VolumeKinematics, NansonScalesAreaByCofactor) {
  const double s = 1.3;
  const TwoPointMap f(s * Mat3::identity(), Config::Reference, Config::Current);
  const Vec3 n{{0.0, 0.6, 0.8}};
  EXPECT_NEAR(max_abs(nanson(f, n, 2.0) - (2.0 * s * s) * n), 0.0, 1e-14);
}

TEST(VolumeKinematics, VelocityGradientOfSteadyRotationRateIsSkew) {
  const TwoPointMap f(Mat3::identity(), Config::Reference, Config::Current);
  const Mat3 w = spin_matrix(Vec3{{0.1, 0.2, -0.3}});
  const TwoPointMap ft(Mat3::identity(), Config::Reference, Config::Intermediate);
  const VelocityGradients g = velocity_gradient(f, w, ft, Mat3{});
  EXPECT_NEAR(max_abs(g.d), 0.0, 1e-15);
  EXPECT_NEAR(max_abs(g.wbar - Vec3{{0.1, 0.2, -0.3}}), 0.0, 1e-15);
}

TEST(VolumeKinematics, InvertedMapIsRejected) {
  EXPECT_THROW(TwoPointMap(Mat3{}, Config::Reference, Config::Current), Error);
}

}  // namespace
}  // namespace klts
