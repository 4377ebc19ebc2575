#include <gtest/gtest.h>

#include <cmath>

#include "klts/constitutive.hpp"
#include "klts/error.hpp"

namespace klts {
namespace {

ThermalExpansionModel expansion() {
  ThermalExpansionModel m;
  m.alpha = Mat3::diagonal(Vec3{{1e-3, 2e-3, 5e-4}});
  m.alpha(0, 1) = m.alpha(1, 0) = 2e-4;
  m.theta0 = 300.0;
  return m;
}

VolumeMaterialParams material() {
  VolumeMaterialParams p;
  p.mu0 = 2.0;
  p.lambda = 3.0;
  p.c1 = 1.5;
  p.c2 = 1e-3;
  p.T_ref = 300.0;
  p.T0 = 300.0;
  return p;
}

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no klts::Error thrown";
  return ErrorKind::InvalidArgument;
}

TEST(Constitutive, ThermalDeformationIsIdentityAtTheta0) {
  const TwoPointMap ft = thermal_deformation(expansion(), 300.0);
  EXPECT_NEAR(max_abs(ft.matrix() - Mat3::identity()), 0.0, 1e-15);
  EXPECT_EQ(ft.codomain(), Config::Intermediate);
}

TEST(Constitutive, PureThermalDeformationIsStressFree) {
  for (double T : {250.0, 300.0, 410.0}) {
    const Mat3 ft = thermal_deformation(expansion(), T).matrix();
    const VolumeResponse r = volume_response(ft, T, expansion(), material());
    EXPECT_LT(max_abs(r.S), 1e-13) << T;
    EXPECT_LT(max_abs(r.sigma), 1e-13) << T;
    EXPECT_NEAR(max_abs(r.C_e - Mat3::identity()), 0.0, 1e-13);
  }
}

TEST(Constitutive, StressTensorsAreRelated) {
  Mat3 f = Mat3::identity();
  f(0, 1) = 0.2;
  f(2, 0) = -0.1;
  f(1, 1) = 1.1;
  const double T = 320.0;
  const VolumeResponse r = volume_response(f, T, expansion(), material());
  EXPECT_NEAR(max_abs(r.S - transpose(r.S)), 0.0, 1e-14);
  EXPECT_NEAR(max_abs(r.P - r.S * transpose(f)), 0.0, 1e-14);
  EXPECT_NEAR(max_abs(r.sigma - (1.0 / r.J) * f * r.S * transpose(f)), 0.0, 1e-14);
}

TEST(Constitutive, ShearModulusSoftensWithTemperature) {
  const VolumeMaterialParams p = material();
  EXPECT_DOUBLE_EQ(mu_of_T(p, p.T_ref), p.mu0);
  EXPECT_NEAR(mu_of_T(p, p.T_ref + 100.0), p.mu0 * std::exp(-0.1), 1e-15);
}

TEST(Constitutive, ConductiveProductionSpotValue) {
  const Vec3 grad{{1.0, 0.0, 0.0}};
  const Vec3 q = fourier_flux(Mat3::identity(), grad);
  EXPECT_DOUBLE_EQ(q[0], -1.0);
  EXPECT_NEAR(conductive_production(q, grad, 300.0), 1.0 / 90000.0, 1e-20);
}

TEST(Constitutive, BoundaryFluxLaws) {
  HeatLawParams p;
  p.h = 10.0;
  p.T_env = 290.0;
  EXPECT_DOUBLE_EQ(convection_flux(p, 300.0), -100.0);
  p.emissivity = 0.5;
  p.T_rad_ref = 300.0;
  EXPECT_NEAR(radiation_flux(p, 300.0), 0.0, 1e-12);
  EXPECT_LT(radiation_flux(p, 400.0), 0.0);
}

TEST(Constitutive, InvalidInputsAreTyped) {
  const ThermalExpansionModel m = expansion();
  const VolumeMaterialParams p = material();
  EXPECT_EQ(kind_of([&] { (void)volume_response(Mat3::identity(), -5.0, m, p); }), ErrorKind::NonpositiveTemperature);
  EXPECT_EQ(kind_of([&] { (void)volume_response(Mat3::diagonal(Vec3{{-1.0, 1.0, 1.0}}), 300.0, m, p); }),
            ErrorKind::NegativeJacobian);
  VolumeMaterialParams bad = p;
  bad.mu0 = 0.0;
  EXPECT_EQ(kind_of([&] { bad.validate(); }), ErrorKind::InvalidArgument);
  HeatLawParams heat;
  heat.k = -1.0 * Mat3::identity();
  EXPECT_EQ(kind_of([&] { heat.validate(); }), ErrorKind::InvalidArgument);
}

SurfaceMaterialParams shell_material() {
  SurfaceMaterialParams p;
  p.K = 4.0;
  p.mu_s = 1.5;
  p.c3 = 0.5;
  p.T0 = 300.0;
  return p;
}

TEST(Constitutive, ShellIsStressFreeWhenCurrentMatchesIntermediate) {
  ShellInput in;
  in.A = Mat2::identity();
  in.t = Mat2::identity();
  in.t(0, 1) = in.t(1, 0) = 0.1;
  in.c = in.t;
  in.T = 310.0;
  const ShellResponse r = shell_response(in, shell_material());
  EXPECT_LT(max_abs(r.sigma_back), 1e-14);
  EXPECT_LT(max_abs(r.mu_back), 1e-14);
  EXPECT_NEAR(r.J_se, 1.0, 1e-15);
}

TEST(Constitutive, BendingMomentIsLinearInCurvatureChange) {
  ShellInput in;
  in.A = Mat2::identity();
  in.t = Mat2::identity();
  in.c = Mat2::identity();
  in.kappa(0, 0) = 0.3;
  in.kappa(1, 1) = -0.1;
  in.kappa(0, 1) = in.kappa(1, 0) = 0.05;
  in.T = 300.0;
  const ShellResponse r = shell_response(in, shell_material());
  // μ^♯◁ = −2 c₃ A⁻¹ κ A⁻¹ with c₃ = ½.
  EXPECT_NEAR(max_abs(r.mu_back + in.kappa), 0.0, 1e-15);
}

TEST(Constitutive, ShellRejectsIndefiniteMetric) {
  ShellInput in;
  in.A = Mat2::identity();
  in.t = Mat2::identity();
  in.c = Mat2::identity();
  in.c(1, 1) = -1.0;
  EXPECT_EQ(kind_of([&] { (void)shell_response(in, shell_material()); }), ErrorKind::NotSPD);
}

}  // namespace
}  // namespace klts
