#pragma once

#include <array>
#include <limits>

#include "klts/charts.hpp"
#include "klts/tensor_core.hpp"

namespace klts {

/// Mid-surface geometry at one parametric point. Index convention for 2×2
/// component matrices: first index is the first tensor slot.
struct SurfacePointFrame {
  Config config = Config::Reference;
  Vec2 xi;
  Vec3 x;
  std::array<Vec3, 2> a;       // a_α
  std::array<Vec3, 2> a_dual;  // aᵅ
  Mat2 a_co;                   // a_αβ
  Mat2 a_contra;               // aᵅᵝ
  double a_det = 0.0;
  Vec3 n;                       // (a₁×a₂)/‖a₁×a₂‖
  Mat2 b_co;                    // b_αβ = n·a_α,β
  Mat2 b_contra;                // bᵅᵝ
  Mat2 b_mixed;                 // b_mixed(α, β) = bᵅ_β
  double H = 0.0;               // ½ bᵅ_α
  double K = 0.0;               // det[b_αβ]/det[a_αβ]
  double k1 = 0.0, k2 = 0.0;    // principal curvatures, k1 ≥ k2
  std::array<Mat2, 2> gamma;    // gamma[γ](α, β) = Γᵞ_αβ = a_α,β·aᵞ
  std::array<std::array<Vec3, 2>, 2> da;  // a_α,β
  std::array<Vec3, 2> dn;                 // n,_α

  /// Surface identity i = a_α ⊗ aᵅ.
  Mat3 identity() const;
  /// b = b_αβ aᵅ ⊗ aᵝ.
  Mat3 curvature_tensor() const;
  /// Ambient vector from contravariant components vᵅ.
  Vec3 from_contra(const Vec2& v) const { return v[0] * a[0] + v[1] * a[1]; }
};

SurfacePointFrame frame_from_jet(const SurfaceJet& jet, const Vec2& xi, Config config = Config::Reference,
                                 const Tolerances& tol = {});
SurfacePointFrame frame(const SurfaceChart& chart, const Vec2& xi, Config config = Config::Reference,
                        const Tolerances& tol = {});

/// Largest entries of a_α;β − b_αβ n (Gauss) and n,_α + b^β_α a_β (Weingarten).
struct GaussWeingartenResiduals {
  double gauss = 0.0;
  double weingarten = 0.0;
};
GaussWeingartenResiduals gauss_weingarten_residuals(const SurfacePointFrame& f);

/// Covariant derivatives a_αβ;γ (result[γ](α, β)); zero by the surface Ricci identity.
std::array<Mat2, 2> metric_covariant_derivative(const SurfacePointFrame& f);
/// Covariant derivatives aᵅᵝ;γ (result[γ](α, β)).
std::array<Mat2, 2> contra_metric_covariant_derivative(const SurfacePointFrame& f);

/// Through-thickness layer of a Kirchhoff-Love shell.
struct ShellLayerFrame {
  double xi = 0.0;
  double lambda3 = 1.0;
  double t0 = 0.0;
  double t = 0.0;
  std::array<Vec3, 2> g;  // ĝ_α = a_α − ξλ₃ b_αγ aᵞ
  Mat2 metric_exact;       // ĝ_α·ĝ_β
  Mat2 metric_first_order; // a_αβ − 2ξλ₃ b_αβ
};

/// `t0` ≤ 0 disables the |ξ| ≤ t/2 check. λ₃ gradients are neglected.
ShellLayerFrame layer_frame(const SurfacePointFrame& mid, double xi, double lambda3 = 1.0, double t0 = 0.0);

/// grad_s Φ = Φ,_α aᵅ.
Vec3 surface_gradient(const SurfacePointFrame& f, const Vec2& dphi);
/// grad_s v = v,_α ⊗ aᵅ for an ambient vector field with parametric derivatives.
Mat3 surface_gradient(const SurfacePointFrame& f, const std::array<Vec3, 2>& dv);
/// div_s v = v,_α · aᵅ.
double surface_divergence(const SurfacePointFrame& f, const std::array<Vec3, 2>& dv);
/// vᵅ;α = vᵅ,α + Γᵅ_γα vᵞ from contravariant components; dv(α, β) = vᵅ,β.
double surface_divergence_components(const SurfacePointFrame& f, const Vec2& v, const Mat2& dv);

}  // namespace klts
