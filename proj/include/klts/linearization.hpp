#pragma once

#include <optional>

#include "klts/tensor_core.hpp"

namespace klts {

/// Tensorial derivatives of surface objects with respect to C (2×2 SPD
/// components of C_s) and b (2×2 symmetric components of b^♭◁). Scalar
/// targets give 2×2 gradients. Tensor targets are stored in the ⊕ layout
/// D_abcd = ∂A_ad/∂B_bc, so that ∂A_ij/∂B_kl = R(D)_ijkl. Derivatives are
/// with respect to symmetric arguments.
struct LinearizationTable {
  double J = 1.0;  // (det C)^{1/2}
  double H = 0.0;  // ½ tr(C⁻¹ b)
  double K = 0.0;  // det b / det C
  Mat2 C_inv;
  Mat2 b_sharp;    // C⁻¹ b C⁻¹

  Mat2 dJ_dC;            // (J/2) C⁻¹
  Tensor4<2> dCinv_dC;   // −½(C⁻¹⊗C⁻¹ + C⁻¹⊠C⁻¹)
  Mat2 dH_dC;            // −½ b^♯◁
  Mat2 dH_db;            // ½ C⁻¹
  Mat2 dK_dC;            // −K C⁻¹
  std::optional<Mat2> dK_db;  // K b⁻¹, absent when b is singular
  Tensor4<2> dbsharp_dC; // −½(C⁻¹⊗b^♯ + C⁻¹⊠b^♯ + b^♯⊗C⁻¹ + b^♯⊠C⁻¹)
  Tensor4<2> dbsharp_db; // ½(C⁻¹⊗C⁻¹ + C⁻¹⊠C⁻¹)
};

/// Throws NotSPD for C and SingularCurvature when |det b| < tol.curvature_det,
/// unless `allow_singular_curvature` is set, in which case dK_db is left empty.
LinearizationTable surface_linearization_table(const Mat2& C, const Mat2& b, const Tolerances& tol = {},
                                               bool allow_singular_curvature = false);

/// ∂A/∂B : δB for a table entry in the ⊕ layout.
Mat2 apply_plus_layout(const Tensor4<2>& d, const Mat2& dB);

}  // namespace klts
