#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "klts/charts.hpp"
#include "klts/constitutive.hpp"
#include "klts/quadrature.hpp"
#include "klts/surface_geometry.hpp"

namespace klts {

/// Scalar field with parametric gradient, e.g. T(ξ) or δθ(ξ).
struct ScalarJet3 {
  double v = 0.0;
  Vec3 d;
};
struct ScalarJet2 {
  double v = 0.0;
  Vec2 d;
};
using ScalarField3 = std::function<ScalarJet3(const Vec3&)>;
using ScalarField2 = std::function<ScalarJet2(const Vec2&)>;

ScalarField3 constant_field3(double v);
ScalarField2 constant_field2(double v);

/// Terms of G_in + G_int = G_ext (mechanical) and of the energy weak form
/// ∫δθ ρTṡ = ∫grad δθ·q + ∫δθ ρr − ∮δθ q·ν (thermal), reported separately.
struct ResidualBreakdown {
  double G_in = 0.0;
  double G_int = 0.0;
  double G_ext_body = 0.0;
  double G_ext_boundary = 0.0;
  double G_ext_moment = 0.0;
  double membrane = 0.0;  // ∫½σ^♯◁:δC
  double bending = 0.0;   // −∫μ^♯◁:δb^♭◁
  double entropy_rate = 0.0;
  double conduction = 0.0;
  double source = 0.0;
  double boundary_flux = 0.0;

  double G_ext() const { return G_ext_body + G_ext_boundary + G_ext_moment; }
  double mechanical_residual() const { return G_in + G_int - G_ext(); }
  double thermal_residual() const { return entropy_rate - conduction - source + boundary_flux; }
};

// ---- 3D --------------------------------------------------------------------

/// Fields on the current placement. Optional callbacks default to zero.
struct VolumeMechanicalInput {
  VolumeChartPtr current;
  VolumeChartPtr variation;                                     // δx(ξ)
  std::function<Mat3(const Vec3& xi)> sigma;                    // Cauchy stress
  std::function<double(const Vec3& xi)> rho;                    // current density
  std::function<Vec3(const Vec3& xi)> acceleration;             // v̇
  std::function<Vec3(const Vec3& xi)> body_force;               // per mass
  std::function<Vec3(const Vec3& xi, const Vec3& nu)> traction; // on every face of the domain
};

/// G_int = ∫grad δx:σ dv, G_in = ∫ρ δx·v̇ dv, G_ext = ∫ρ δx·f dv + ∮δx·t ds.
ResidualBreakdown assemble_volume_mechanical(const VolumeMechanicalInput& in, const BoxRule& rule,
                                             const Tolerances& tol = {});

struct VolumeThermalInput {
  VolumeChartPtr current;
  ScalarField3 temperature;
  ScalarField3 delta_theta;
  Mat3 k = Mat3::identity();
  std::function<double(const Vec3& xi)> rho;
  std::function<double(const Vec3& xi)> s_dot;
  std::function<double(const Vec3& xi)> source;  // r per mass
};
ResidualBreakdown assemble_volume_thermal(const VolumeThermalInput& in, const BoxRule& rule,
                                          const Tolerances& tol = {});

/// σ(ξ) from the thermoelastic law for given placements and temperature field.
std::function<Mat3(const Vec3&)> constitutive_stress(VolumeChartPtr reference, VolumeChartPtr current,
                                                     ScalarField3 temperature, ThermalExpansionModel model,
                                                     VolumeMaterialParams params);

/// ∫ρ₀ψ dV over the reference placement.
double volume_free_energy(const VolumeChart& reference, const VolumeChart& current, const ScalarField3& temperature,
                          const ThermalExpansionModel& model, const VolumeMaterialParams& params,
                          const BoxRule& rule, const Tolerances& tol = {});

// ---- shells ----------------------------------------------------------------

/// First variations induced by δx on the current mid-surface.
struct ShellVariation {
  std::array<Vec3, 2> da;  // δa_α = δx,_α
  Mat2 da_co;              // δa_αβ = δa_α·a_β + a_α·δa_β (= δC components)
  Vec3 dn;                 // −(δa_α·n) aᵅ
  Mat2 db;                 // δb_αβ = δx,_αβ·n + a_α,β·δn
};
ShellVariation shell_variations(const SurfacePointFrame& cur, const SurfaceJet& delta_x);

struct ShellMechanicalInput {
  SurfaceChartPtr reference;
  SurfaceChartPtr current;
  SurfaceChartPtr variation;
  SurfaceThermalModel thermal;
  SurfaceMaterialParams material;
  ScalarField2 temperature;                                       // defaults to θ₀
  std::function<Vec3(const Vec2& xi)> acceleration;
  std::function<Vec3(const Vec2& xi)> body_force;                 // per mass
  std::function<Vec3(const Vec2& xi, const Vec3& nu)> traction;   // per current length
  bool boundary_moment = false;                                   // ∮δn·μᵀν dl
};

/// G_int = ∫(½σ^♯◁:δC − μ^♯◁:δb^♭◁) dA with the per-reference-area response.
ResidualBreakdown assemble_shell_mechanical(const ShellMechanicalInput& in, const RectRule& rule,
                                            const Tolerances& tol = {});

/// In-plane heat conduction with q = −k grad_s T on the current mid-surface.
struct ShellThermalInput {
  SurfaceChartPtr current;
  ScalarField2 temperature;
  ScalarField2 delta_theta;
  Mat3 k = Mat3::identity();
  std::function<double(const Vec2& xi)> rho;
  std::function<double(const Vec2& xi)> s_dot;
  std::function<double(const Vec2& xi)> source;
};
ResidualBreakdown assemble_shell_thermal(const ShellThermalInput& in, const RectRule& rule,
                                         const Tolerances& tol = {});

/// ∫ρ₀ₛψₛ dA over the reference mid-surface.
double shell_free_energy(const SurfaceChart& reference, const SurfaceChart& current, const ScalarField2& temperature,
                         const SurfaceThermalModel& thermal, const SurfaceMaterialParams& material,
                         const RectRule& rule, const Tolerances& tol = {});

// ---- balance diagnostics -----------------------------------------------------

/// Pointwise data for the local balance laws; (div Aᵀ)_i = ∂A_ij/∂x_j.
struct BalanceFields {
  std::function<Mat3(const Vec3& x)> sigma;
  std::function<double(const Vec3& x)> rho;
  std::function<double(const Vec3& x)> J;
  double rho0 = 1.0;
  std::function<Vec3(const Vec3& x)> body_force;
  std::function<Vec3(const Vec3& x)> acceleration;
  std::function<Mat3(const Vec3& x)> mu_bar;       // couple stress, zero if unset
  std::function<Vec3(const Vec3& x)> body_couple;  // c, zero if unset
};

struct BalanceReport {
  double mass = 0.0;      // max |ρ₀ − Jρ|
  double momentum = 0.0;  // max ‖div σᵀ + ρf − ρv̇‖
  double angular = 0.0;   // max ‖div μ̄ᵀ + ρc + 𝔈:σ‖
};
/// Divergences by fourth-order central differences with step h.
BalanceReport balance_diagnostics(const BalanceFields& fields, const std::vector<Vec3>& points, double h = 1e-3);

/// Shell resultant relations at one point: σᵅᵝ = Nᵅᵝ − b^β_γ Mᵞᵅ symmetric and
/// Sᵅ = −Mᵝᵅ;β from a moment field Mᵅᵝ(ξ) (derivatives by central differences).
struct ShellBalanceReport {
  double sigma_asymmetry = 0.0;
  Vec2 S;
  Mat3 sigma_KL_transpose;
};
ShellBalanceReport shell_balance_diagnostics(const SurfaceChart& current, const Vec2& xi, const Mat2& sigma,
                                             const std::function<Mat2(const Vec2&)>& moment, double h = 1e-5);

}  // namespace klts
