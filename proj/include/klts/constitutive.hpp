#pragma once

#include <optional>

#include "klts/surface_geometry.hpp"
#include "klts/tensor_core.hpp"

namespace klts {

inline constexpr double kStefanBoltzmann = 5.670374419e-8;  // W/(m²K⁴)

/// F_T = exp(α (T − θ₀)) with α symmetric [1/K].
struct ThermalExpansionModel {
  Mat3 alpha;
  double theta0 = 293.15;
  void validate(const Tolerances& tol = {}) const;
};

/// Shell thermal model. The intermediate mid-surface is the reference
/// mid-surface mapped by the ambient expansion M = exp(α (T − θ₀)); in-plane
/// expansion is the action of M on the tangent plane. The thickness stretch
/// follows λ_T3 = exp(α₃ (T − θ₀)).
struct SurfaceThermalModel {
  ThermalExpansionModel in_plane;
  double alpha3 = 0.0;
};

/// ρ₀ψ = μ/2 (tr C_e − 3) − μ ln J_e + λ/2 (ln J_e)² + c₁[(T − T₀) − T ln(T/T₀)],
/// μ(T) = μ₀ exp(−c₂ (T − T_ref)), J_e = (det C_e)^{1/2}. c₁ is a volumetric
/// heat capacity [J/(m³K)].
struct VolumeMaterialParams {
  double mu0 = 1.0;
  double lambda = 1.0;
  double c1 = 0.0;
  double c2 = 0.0;
  double T_ref = 293.15;
  double T0 = 293.15;
  double rho0 = 1.0;
  void validate() const;
};

/// Per reference area: W = K/4 (J² − 1 − 2 ln J) + μ_s/2 (tr C_se / J − 2)
/// + c₃ κ:κ + c₁[(T − T₀) − T ln(T/T₀)], J = J_se. c₁ is an areal heat
/// capacity [J/(m²K)], c₃ a bending stiffness [N·m].
struct SurfaceMaterialParams {
  double K = 1.0;
  double mu_s = 1.0;
  double c1 = 0.0;
  double c3 = 0.0;
  double rho0s = 1.0;
  double t0 = 0.0;
  double T0 = 293.15;
  void validate() const;
};

struct HeatLawParams {
  Mat3 k = Mat3::identity();
  double emissivity = 0.0;
  double geometry_factor = 1.0;
  double h = 0.0;
  double T_env = 293.15;
  /// Temperature of the radiating surroundings.
  double T_rad_ref = 293.15;
  void validate(const Tolerances& tol = {}) const;
};

TwoPointMap thermal_deformation(const ThermalExpansionModel& model, double T);
/// Ḟ_T = Ṫ α F_T.
Mat3 thermal_rate(const ThermalExpansionModel& model, double T, double T_dot);
/// ∂F_T/∂T = α F_T.
Mat3 thermal_derivative(const ThermalExpansionModel& model, double T);
double mu_of_T(const VolumeMaterialParams& p, double T);

/// Volume energy density and its partial derivatives at fixed C_e.
struct VolumeEnergy {
  double W = 0.0;       // ρ₀ψ
  Mat3 dW_dCe;          // ∂(ρ₀ψ)/∂C_e
  double dW_dT = 0.0;   // ∂(ρ₀ψ)/∂T at fixed C_e
};
VolumeEnergy volume_energy(const Mat3& c_e, double T, const VolumeMaterialParams& p);
/// ρ₀ψ(C_e(C, T), T) through the thermal split.
double volume_energy_of_C(const Mat3& c, double T, const ThermalExpansionModel& model,
                          const VolumeMaterialParams& p);

struct VolumeResponse {
  double psi = 0.0, u = 0.0, s = 0.0;  // per mass
  Mat3 S;       // 2 F_T⁻¹ ∂(ρ₀ψ)/∂C_e F_T⁻ᵀ
  Mat3 P;       // S Fᵀ
  Mat3 sigma;   // F S Fᵀ / J
  Mat3 S_T;     // F_T S F_Tᵀ / J_T
  Mat3 H;       // (F_T⁻ᵀ),_T C F_T⁻¹
  Mat3 C_e;
  double J = 1.0, J_T = 1.0;
  Vec3 q;
  double gamma_con = 0.0;
};

VolumeResponse volume_response(const Mat3& f, double T, const ThermalExpansionModel& model,
                               const VolumeMaterialParams& p, const Vec3& grad_T = {},
                               const HeatLawParams& heat = {}, const Tolerances& tol = {});

/// q = −k grad T.
Vec3 fourier_flux(const Mat3& k, const Vec3& grad_T);
/// q_r·ν = −εσ_SB T_s⁴ + F_geo εσ_SB T_rad_ref⁴.
double radiation_flux(const HeatLawParams& p, double T_s);
/// q_h·ν = −h (T − T_env).
double convection_flux(const HeatLawParams& p, double T);
/// γ_con = −q·grad T / T².
double conductive_production(const Vec3& q, const Vec3& grad_T, double T);

/// Supplied fields for the local production rate γ_loc.
struct LocalProductionInput {
  double rho = 1.0;
  double T = 1.0;
  double s_dot = 0.0;
  double u_dot = 0.0;
  Mat3 sigma;
  Mat3 l;
  double div_spin_couple = 0.0;  // div(w̄·μ̄ᵀ)
  Vec3 body_couple;              // c
  Vec3 wbar;
};
/// γ_loc = ρṡ − ρu̇/T + [σᵀ:l + div(w̄·μ̄ᵀ) + ρ c·w̄]/T.
double local_production(const LocalProductionInput& in);

struct EntropyProduction {
  double gamma_loc = 0.0;
  double gamma_con = 0.0;
};
EntropyProduction entropy_production(const LocalProductionInput& in, const Vec3& q, const Vec3& grad_T);

struct StructuralTensor {
  Vec3 y0, yT;
  Mat3 L0, LT;
  Mat3 L_contra;  // F_T L₀ F_Tᵀ
  Mat3 L_co;      // F_T⁻ᵀ L₀ F_T⁻¹
  Mat3 L_mixed;   // F_T L₀ F_T⁻¹
};
StructuralTensor structural_update(const Vec3& y0, const Mat3& f_t, const Tolerances& tol = {});

// ---- shells ----------------------------------------------------------------

/// Component data for the shell energy. All 2×2 matrices are covariant
/// components in the reference co-basis except where noted.
struct ShellInput {
  Mat2 A;         // reference metric A_αβ
  Mat2 c;         // current metric a_αβ (components of C_s)
  Mat2 t;         // intermediate metric a_Tαβ (components of C_sT)
  Mat2 kappa;     // b_αβ − b_Tαβ
  Mat2 dt_dT;     // ∂a_Tαβ/∂T
  Mat2 db_T_dT;   // ∂b_Tαβ/∂T
  double T = 293.15;
};

struct ShellEnergy {
  double W = 0.0;      // ρ₀ₛψₛ per reference area
  double J = 1.0;      // J_se = (det c / det t)^{1/2}
  double tr = 2.0;     // c_αβ tᵅᵝ
  Mat2 dW_dc;          // contravariant
  Mat2 dW_dt;
  Mat2 dW_dkappa;
  double dW_dT = 0.0;  // explicit part at fixed c, t, κ
};
ShellEnergy shell_energy(const ShellInput& in, const SurfaceMaterialParams& p);

struct ShellResponse {
  double psi = 0.0, u = 0.0, s = 0.0;  // per mass
  double W = 0.0;
  double J_se = 1.0, J_s = 1.0;
  Mat2 sigma_back;  // σ^♯◁ = 2 ∂W/∂C_s, contravariant, per reference area
  Mat2 mu_back;     // μ^♯◁ = −∂W/∂κ
  Mat2 sigma;       // σᵅᵝ per current area
  Mat2 M;           // Mᵅᵝ per current area
};
ShellResponse shell_response(const ShellInput& in, const SurfaceMaterialParams& p);

/// M = exp(α (T − θ₀)) of the shell model.
Mat3 shell_thermal_map(const SurfaceThermalModel& model, double T);
double shell_thickness_stretch(const SurfaceThermalModel& model, double T);
/// Intermediate metric components A_α·MᵀM·A_β and their T-derivative.
Mat2 intermediate_metric(const SurfacePointFrame& ref, const Mat3& m);
Mat2 intermediate_metric_rate(const SurfacePointFrame& ref, const SurfaceThermalModel& model, double T);
/// F̂_T = M(𝟏 − N⊗N) + λ_T3 n_T ⊗ N.
Mat3 shell_thermal_deformation(const SurfacePointFrame& ref, const SurfaceThermalModel& model, double T);
/// Full shell input from frames; ∂b_T/∂T by central FD with step 1e-5·θ₀.
ShellInput shell_input(const SurfacePointFrame& ref, const SurfacePointFrame& cur, double T,
                       const SurfaceThermalModel& model);

struct ShellResultants {
  Mat2 N;                // Nᵅᵝ = σᵅᵝ + b^β_γ Mᵞᵅ
  Mat2 sigma_recovered;  // Nᵅᵝ − b^β_γ Mᵞᵅ
  double asymmetry = 0.0;
};
ShellResultants shell_resultants(const SurfacePointFrame& cur, const Mat2& sigma, const Mat2& M);
/// σ_KLᵀ = Nᵅᵝ a_β ⊗ a_α + Sᵅ n ⊗ a_α.
Mat3 kirchhoff_love_stress_transpose(const SurfacePointFrame& cur, const Mat2& N, const Vec2& S);
/// m_ν = Mᵅᵝ ν_α ν_β and m_τ = Mᵅᵝ ν_α τ_β for covariant edge components.
struct BoundaryMoments {
  double m_nu = 0.0;
  double m_tau = 0.0;
};
BoundaryMoments boundary_moments(const Mat2& M, const Vec2& nu_co, const Vec2& tau_co);

}  // namespace klts
