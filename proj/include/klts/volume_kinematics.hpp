#pragma once

#include <array>
#include <optional>
#include <vector>

#include "klts/charts.hpp"
#include "klts/tensor_core.hpp"

namespace klts {

/// Γᵏᵢⱼ = G_i,j · Gᵏ at one point, stored as gamma[k](i, j).
struct ChristoffelField {
  std::array<Mat3, 3> gamma{};
  double operator()(std::size_t k, std::size_t i, std::size_t j) const { return gamma[k](i, j); }
};

/// Exact first parametric derivatives of the basis objects at one point.
/// Index convention: the last index is the derivative direction.
struct BasisDerivatives {
  std::array<std::array<Vec3, 3>, 3> tangent;  // G_i,j
  std::array<std::array<Vec3, 3>, 3> dual;     // Gⁱ,j
  std::array<Mat3, 3> metric_co;               // [G_ij],k
  std::array<Mat3, 3> metric_contra;           // [Gⁱʲ],k
};

BasisTriad chart_basis(const VolumeChart& chart, const Vec3& xi, Config config, const Tolerances& tol = {});
BasisDerivatives basis_derivatives(const VolumeChart& chart, const Vec3& xi, const Tolerances& tol = {});
ChristoffelField christoffel(const VolumeChart& chart, const Vec3& xi, const Tolerances& tol = {});

/// uⁱ‖j = uⁱ,j + uᵏ Γⁱₖⱼ; `du(i, j)` = uⁱ,j.
Mat3 covariant_derivative_contra(const Vec3& u, const Mat3& du, const ChristoffelField& g);
/// u_i‖j = u_i,j − u_k Γᵏᵢⱼ.
Mat3 covariant_derivative_co(const Vec3& u, const Mat3& du, const ChristoffelField& g);
/// U_ij‖k = U_ij,k − U_lj Γˡᵢₖ − U_il Γˡⱼₖ; result[k](i, j).
std::array<Mat3, 3> covariant_derivative_co(const Mat3& u, const std::array<Mat3, 3>& du,
                                            const ChristoffelField& g);
/// Uⁱʲ‖k = Uⁱʲ,k + Uˡʲ Γⁱₗₖ + Uⁱˡ Γʲₗₖ; result[k](i, j).
std::array<Mat3, 3> covariant_derivative_contra(const Mat3& u, const std::array<Mat3, 3>& du,
                                                const ChristoffelField& g);
/// G_i‖j = G_i,j − G_l Γˡᵢⱼ for tangent derivatives `dg[i][j]`.
std::array<std::array<Vec3, 3>, 3> tangent_covariant_derivative(const BasisTriad& b,
                                                                const std::array<std::array<Vec3, 3>, 3>& dg,
                                                                const ChristoffelField& g);
/// Gⁱ‖j = Gⁱ,j + Gˡ Γⁱₗⱼ for dual derivatives `dg[i][j]`.
std::array<std::array<Vec3, 3>, 3> dual_covariant_derivative(const BasisTriad& b,
                                                             const std::array<std::array<Vec3, 3>, 3>& dg,
                                                             const ChristoffelField& g);

/// Largest covariant-derivative magnitudes of G_ij, Gⁱʲ, G_i, Gⁱ (all zero in
/// exact arithmetic).
struct RicciResiduals {
  double metric_co = 0.0;
  double metric_contra = 0.0;
  double tangent = 0.0;
  double dual = 0.0;
  double max() const;
};
RicciResiduals ricci_residuals(const BasisTriad& b, const BasisDerivatives& d, const ChristoffelField& g);

/// F = gᵢ ⊗ Gⁱ from two charts evaluated at the same ξ.
TwoPointMap deformation_gradient(const VolumeChart& ref, const VolumeChart& cur, const Vec3& xi,
                                 const Tolerances& tol = {});

struct VelocityGradients {
  Mat3 l, d, w;
  Vec3 wbar;
  Mat3 l_e, l_T;
};

/// F (reference→current), F_T (reference→intermediate), F_e (intermediate→current)
/// with the Cauchy-Green family. C = F_Tᵀ C_e F_T.
struct VolumeState {
  TwoPointMap F;
  TwoPointMap F_T;
  TwoPointMap F_e;
  Tensor2 C;
  Tensor2 C_T;
  Tensor2 C_e;
  double J = 1.0;
  double J_T = 1.0;
  std::optional<VelocityGradients> rates;
};

VolumeState thermo_split(const TwoPointMap& f, const TwoPointMap& f_t);

/// l = Ḟ F⁻¹, l_e = Ḟ_e F_e⁻¹, l_T = Ḟ_T F_T⁻¹ with F_e = F F_T⁻¹.
VelocityGradients velocity_gradient(const TwoPointMap& f, const Mat3& f_dot, const TwoPointMap& f_t,
                                    const Mat3& f_t_dot, const Tolerances& tol = {});

/// ν ds = J F⁻ᵀ 𝒱 dS.
Vec3 nanson(const TwoPointMap& f, const Vec3& normal, double ds);

enum class StrainFrame { Lagrangian, Eulerian };

struct SethHillStrain {
  double n;
  Tensor2 value;
  StrainFrame frame;
};

/// E⁽ⁿ⁾ = (Uⁿ − 1)/n (Lagrangian, U² = FᵀF) or (Vⁿ − 1)/n (Eulerian, V² = FFᵀ);
/// ln U / ln V when |n| < tol.log_branch.
SethHillStrain seth_hill(const TwoPointMap& f, double n, StrainFrame frame = StrainFrame::Lagrangian,
                         const Tolerances& tol = {});

struct HenckyEntry {
  double n;
  /// ‖E⁽ⁿ⁾(F₂F₁) − E⁽ⁿ⁾(F₁) − E⁽ⁿ⁾(F₂)‖.
  double additive_defect;
  /// ‖(F₁ᵀ)^{n/2} E₂ (F₁)^{n/2} − E₂‖ when the power is defined.
  std::optional<double> predicted_defect;
  /// ‖E⁽ⁿ⁾(F₂F₁) − [(F₁ᵀ)^{n/2} E₂ (F₁)^{n/2} + E₁]‖ when the power is defined.
  std::optional<double> composition_residual;
};

struct HenckyReport {
  /// ‖U₁U₂ − U₂U₁‖; zero for coaxial stretches.
  double commutator = 0.0;
  bool coaxial = false;
  std::vector<HenckyEntry> entries;
};

HenckyReport hencky_additivity_check(const TwoPointMap& f1, const TwoPointMap& f2,
                                     const std::vector<double>& orders = {0.0, 1.0, 2.0, -2.0},
                                     const Tolerances& tol = {});

}  // namespace klts
