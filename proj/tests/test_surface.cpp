#include <gtest/gtest.h>

#include <cmath>

#include "klts/constitutive.hpp"
#include "klts/error.hpp"
#include "klts/surface_geometry.hpp"
#include "klts/surface_kinematics.hpp"

namespace klts {
namespace {

const Rect2 kSphereDomain{Vec2{{0.3, 0.0}}, Vec2{{2.8, 3.0}}};

TEST(SurfaceGeometry, SphereCurvatures) {
  for (double R : {0.5, 2.0, 7.0}) {
    const auto chart = sphere_chart(R, kSphereDomain);
    const SurfacePointFrame f = frame(*chart, Vec2{{1.1, 0.4}});
    EXPECT_NEAR(std::fabs(f.H), 1.0 / R, 1e-12);
    EXPECT_NEAR(f.K, 1.0 / (R * R), 1e-12);
    EXPECT_NEAR(std::fabs(f.k1), 1.0 / R, 1e-12);
    EXPECT_NEAR(std::fabs(f.k2), 1.0 / R, 1e-12);
    EXPECT_NEAR(norm(f.n - f.x / R), 0.0, 1e-13);  // outward
  }
}

TEST(SurfaceGeometry, CylinderCurvatures) {
  const double R = 1.5;
  const auto chart = cylinder_chart(R, Rect2{Vec2{{0.0, -1.0}}, Vec2{{3.0, 1.0}}});
  const SurfacePointFrame f = frame(*chart, Vec2{{0.7, 0.2}});
  EXPECT_NEAR(std::fabs(f.H), 0.5 / R, 1e-13);
  EXPECT_NEAR(f.K, 0.0, 1e-13);
  EXPECT_NEAR(std::fabs(f.k1) + std::fabs(f.k2), 1.0 / R, 1e-13);
}

TEST(SurfaceGeometry, PlaneIsFlat) {
  const auto chart = plane_chart(Vec3{{1.0, 2.0, 3.0}}, Vec3{{1.0, 0.5, 0.0}}, Vec3{{0.0, 1.0, 0.3}},
                                 Rect2{Vec2{{-1.0, -1.0}}, Vec2{{1.0, 1.0}}});
  const SurfacePointFrame f = frame(*chart, Vec2{{0.1, 0.2}});
  EXPECT_EQ(max_abs(f.b_co), 0.0);
  EXPECT_EQ(f.H, 0.0);
  EXPECT_EQ(f.K, 0.0);
  EXPECT_NEAR(max_abs(f.a_co * f.a_contra - Mat2::identity()), 0.0, 1e-15);
}

TEST(SurfaceGeometry, GaussWeingartenOnTorus) {
  const auto chart = torus_chart(2.0, 0.5, Rect2{Vec2{{0.0, 0.0}}, Vec2{{3.0, 3.0}}});
  const SurfacePointFrame f = frame(*chart, Vec2{{0.4, 1.9}});
  const GaussWeingartenResiduals r = gauss_weingarten_residuals(f);
  EXPECT_LT(r.gauss, 1e-13);
  EXPECT_LT(r.weingarten, 1e-13);
}

TEST(SurfaceGeometry, SurfaceIdentityProjectsOutNormal) {
  const auto chart = sphere_chart(2.0, kSphereDomain);
  const SurfacePointFrame f = frame(*chart, Vec2{{1.3, 2.1}});
  const Mat3 i = f.identity();
  EXPECT_NEAR(max_abs(i - surface_projector(f.n)), 0.0, 1e-14);
  EXPECT_NEAR(trace(f.curvature_tensor()), 2.0 * f.H, 1e-14);
}

TEST(SurfaceKinematics, IdentityDeformationHasNoStretch) {
  const auto chart = torus_chart(2.0, 0.5, Rect2{Vec2{{0.0, 0.0}}, Vec2{{3.0, 3.0}}});
  const SurfacePointFrame ref = frame(*chart, Vec2{{0.4, 1.9}});
  const SurfacePointFrame cur = frame(*chart, Vec2{{0.4, 1.9}}, Config::Current);
  const SurfaceDeformationState s = surface_deformation(ref, cur);
  EXPECT_NEAR(s.J_s, 1.0, 1e-14);
  EXPECT_NEAR(max_abs(curvature_change(ref, cur, ref, s.F_s, ref.identity())), 0.0, 1e-13);
}

TEST(SurfaceKinematics, ThermalMapWithInPlaneNormalImageIsMalformed) {
  const auto chart = sphere_chart(1.0, kSphereDomain);
  const SurfacePointFrame ref = frame(*chart, Vec2{{1.0, 1.0}});
  const SurfacePointFrame cur = frame(*chart, Vec2{{1.0, 1.0}}, Config::Current);
  const SurfaceDeformationState s = surface_deformation(ref, cur);
  // Shear that tilts N towards a tangent while leaving the tangents fixed.
  const Mat3 bad = Mat3::identity() + outer(ref.a[0], ref.n);
  try {
    (void)thermo_split_surface(s, bad);
    FAIL() << "expected MalformedThermalMap";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MalformedThermalMap);
  }
}

TEST(SurfaceKinematics, IsotropicThermalMapScalesMetric) {
  const auto chart = sphere_chart(1.0, kSphereDomain);
  const SurfacePointFrame ref = frame(*chart, Vec2{{1.0, 1.0}});
  const double s = 1.02;
  const Mat3 m = s * Mat3::identity();
  EXPECT_NEAR(max_abs(intermediate_metric(ref, m) - (s * s) * ref.a_co), 0.0, 1e-14);
}

}  // namespace
}  // namespace klts
