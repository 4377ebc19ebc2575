#pragma once

#include "klts/surface_geometry.hpp"

namespace klts {

/// Mid-surface deformation of a Kirchhoff-Love shell and its thermo-elastic
/// split F̂ = F̂_e F̂_T. Surface parts are 3×3 tensors annihilating the normal of
/// their domain. Covariant 2×2 components refer to the reference co-basis Aᵅ.
struct SurfaceDeformationState {
  SurfacePointFrame reference;
  SurfacePointFrame current;

  Mat3 F_s;     // a_α ⊗ Aᵅ
  Mat3 F_hat;   // F_s + λ₃ n ⊗ N
  Mat3 C_s;     // F_sᵀ F_s = a_αβ Aᵅ ⊗ Aᵝ
  Mat3 C_hat;   // F̂ᵀ F̂
  double J_s = 1.0;
  double lambda3 = 1.0;

  // Thermal part F̂_T = F_sT + λ_T3 n_T ⊗ N and elastic part F̂_e = F_se + λ_e3 n ⊗ n_T.
  bool split = false;
  Mat3 F_hat_T, F_sT, F_hat_e, F_se;
  Mat3 C_hat_T, C_sT, C_hat_e, C_se;
  double J_sT = 1.0, J_se = 1.0;
  double lambda_T3 = 1.0, lambda_e3 = 1.0;
  Vec3 n_T;
  std::array<Vec3, 2> a_T;  // F_sT A_α

  /// Components of C_s and C_sT in the reference co-basis.
  Mat2 C_s_components() const { return current.a_co; }
  Mat2 C_sT_components() const;
};

SurfaceDeformationState surface_deformation(const SurfacePointFrame& ref, const SurfacePointFrame& cur,
                                            double lambda3 = 1.0, const Tolerances& tol = {});

/// Completes the split for a thermal map of the form F_sT + λ_T3 n_T ⊗ N.
/// Throws MalformedThermalMap when F̂_T N is not normal to the intermediate tangents.
SurfaceDeformationState thermo_split_surface(const SurfaceDeformationState& state, const Mat3& f_hat_t,
                                             const Tolerances& tol = {});

/// F̂_T = a_Tα ⊗ Aᵅ + λ_T3 n_T ⊗ N from reference and intermediate frames.
Mat3 thermal_map_from_frames(const SurfacePointFrame& ref, const SurfacePointFrame& inter, double lambda_t3 = 1.0);

/// κ_αβ = b_αβ − b_Tαβ from the pulled-back tensors F_sᵀ b F_s − F_sTᵀ b_T F_sT,
/// extracted in the reference co-basis.
Mat2 curvature_change(const SurfacePointFrame& ref, const SurfacePointFrame& cur,
                      const SurfacePointFrame& inter, const Mat3& f_s, const Mat3& f_st);

/// Covariant components in the reference co-basis of a tensor defined on the
/// reference tangent plane: T_αβ = A_α·T·A_β.
Mat2 reference_components(const SurfacePointFrame& ref, const Mat3& t);

/// b_Tαβ = a_Tα,β·n_T with a_Tα,β = F_sT,β A_α + F_sT A_α,β, for an intermediate
/// surface obtained from the reference by a homogeneous ambient map M
/// (F_sT = M(𝟏 − N⊗N)).
Mat2 intermediate_curvature_from_map(const SurfacePointFrame& ref, const Mat3& m);

/// Material rates of mid-surface objects for a velocity field v(ξ).
struct SurfaceRates {
  Vec2 v_tan;     // vᵅ = v·aᵅ
  double v_n = 0; // v·n
  Mat2 w_mixed;   // w_mixed(α, β) = w_α^β = v^β;α − v b^β_α
  Vec2 w;         // w_α = v^λ b_λα + v,_α
  Mat2 w_co;      // w_αβ = w_α^μ a_μβ
  Mat2 a_dot;     // w_αβ + w_βα
  Mat2 b_dot;     // w_αγ b^γ_β + w_α;β
  Vec3 n_dot;     // −wᵅ a_α
  Mat3 l_s;       // w_αβ aᵝ⊗aᵅ − n⊗ṅ + ṅ⊗n + (λ̇₃/λ₃) n⊗n
};

SurfaceRates surface_rates(const SurfaceChart& chart, const SurfaceChart& velocity, const Vec2& xi,
                           double lambda3 = 1.0, double lambda3_dot = 0.0, const Tolerances& tol = {});

}  // namespace klts
