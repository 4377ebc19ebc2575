#pragma once

#include <array>
#include <cstddef>

#include "klts/error.hpp"
#include "klts/linalg.hpp"

namespace klts {

/// Numerical thresholds shared by every module.
struct Tolerances {
  double absolute = 1e-12;
  double relative = 1e-12;
  /// |det| < singular * (max row norm)^3 counts as singular.
  double singular = 1e-10;
  double skew = 1e-12;
  double jacobi_off_diagonal = 1e-14;
  int jacobi_sweeps = 30;
  /// |n| below this takes the logarithmic Seth-Hill branch.
  double log_branch = 1e-8;
  double discriminant = 1e-12;
  double curvature_det = 1e-10;
};

/// ♯ = contra (upper, upper), ♭ = co (lower, lower), \ = mixed (upper, lower),
/// / = mixed (lower, upper).
enum class Variance { Contra, Co, MixedUpDown, MixedDownUp };
enum class Config { Reference, Intermediate, Current };

const char* to_string(Variance v);
const char* to_string(Config c);

/// Tangent triad with duals and metrics. Gᵢ·Gʲ = δᵢʲ, [Gⁱʲ] = [G_ij]⁻¹.
class BasisTriad {
public:
  const Vec3& covariant(std::size_t i) const { return tangents_[i]; }
  const Vec3& contravariant(std::size_t i) const { return duals_[i]; }
  const Mat3& metric_co() const { return metric_co_; }
  const Mat3& metric_contra() const { return metric_contra_; }
  double metric_det() const { return metric_det_; }
  Config config() const { return config_; }
  /// Columns are G₁, G₂, G₃.
  Mat3 tangent_matrix() const { return Mat3::from_columns(tangents_); }
  /// Columns are G¹, G², G³.
  Mat3 dual_matrix() const { return Mat3::from_columns(duals_); }

private:
  friend BasisTriad build_basis(const std::array<Vec3, 3>&, Config, const Tolerances&);
  BasisTriad() = default;
  std::array<Vec3, 3> tangents_{};
  std::array<Vec3, 3> duals_{};
  Mat3 metric_co_{};
  Mat3 metric_contra_{};
  double metric_det_ = 0.0;
  Config config_ = Config::Reference;
};

BasisTriad build_basis(const std::array<Vec3, 3>& tangents, Config config = Config::Reference,
                       const Tolerances& tol = {});
BasisTriad cartesian_basis(Config config = Config::Reference);

/// Second-order tensor value. The component matrix refers to whatever basis the
/// producer used; push/pull and all kinematics use ambient Cartesian components.
class Tensor2 {
public:
  Tensor2(const Mat3& components, Variance variance, Config config);

  const Mat3& components() const { return m_; }
  Variance variance() const { return variance_; }
  Config config() const { return config_; }
  double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

private:
  Mat3 m_;
  Variance variance_;
  Config config_;
};

/// Throws VarianceMismatch / ConfigurationMismatch unless both tags agree.
void require_compatible(const Tensor2& a, const Tensor2& b);
Tensor2 operator+(const Tensor2& a, const Tensor2& b);
Tensor2 operator-(const Tensor2& a, const Tensor2& b);
Tensor2 operator*(double s, const Tensor2& a);

/// Components of T re-expressed with the target index placement by raising and
/// lowering with the basis metric.
Tensor2 transform_variance(const Tensor2& t, const BasisTriad& basis, Variance target);

/// Curvilinear components (per variance) -> ambient Cartesian matrix, and back.
Mat3 assemble_cartesian(const Mat3& components, Variance v, const BasisTriad& basis);
Mat3 extract_components(const Mat3& cartesian, Variance v, const BasisTriad& basis);

/// Invertible linear map between two configurations, e.g. F, F_T, F_e.
class TwoPointMap {
public:
  TwoPointMap(const Mat3& m, Config domain, Config codomain, const Tolerances& tol = {});

  const Mat3& matrix() const { return m_; }
  const Mat3& inverse() const { return inv_; }
  double det() const { return det_; }
  Config domain() const { return domain_; }
  Config codomain() const { return codomain_; }

private:
  Mat3 m_;
  Mat3 inv_;
  double det_;
  Config domain_;
  Config codomain_;
};

/// a ∘ b; requires b.codomain == a.domain.
TwoPointMap compose(const TwoPointMap& a, const TwoPointMap& b);

/// ♯: F T Fᵀ, ♭: F⁻ᵀ T F⁻¹, \: F T F⁻¹, /: F⁻ᵀ T Fᵀ. T must live on F's domain
/// and carry Cartesian components.
Tensor2 push_forward(const Tensor2& t, const TwoPointMap& f);
/// Inverse of push_forward; T must live on F's codomain.
Tensor2 pull_back(const Tensor2& t, const TwoPointMap& f);

/// Fourth-order tensor with N^4 components, index order (i, j, k, l).
template <std::size_t N>
struct Tensor4 {
  std::array<double, N * N * N * N> c{};
  Config config = Config::Reference;

  double& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return c[((i * N + j) * N + k) * N + l];
  }
  const double& operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return c[((i * N + j) * N + k) * N + l];
  }
};

enum class Product { Dyadic, Plus, Box };  // ⊗, ⊕, ⊠
enum class Rearrangement { R, L };

/// (A⊗B)_ijkl = A_ij B_kl, (A⊕B)_ijkl = A_il B_jk, (A⊠B)_ijkl = A_ik B_jl.
template <std::size_t N>
Tensor4<N> tensor_product(const Mat<N>& a, const Mat<N>& b, Product kind) {
  Tensor4<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t k = 0; k < N; ++k)
        for (std::size_t l = 0; l < N; ++l) {
          double v = 0.0;
          switch (kind) {
            case Product::Dyadic: v = a(i, j) * b(k, l); break;
            case Product::Plus: v = a(i, l) * b(j, k); break;
            case Product::Box: v = a(i, k) * b(j, l); break;
          }
          r(i, j, k, l) = v;
        }
  return r;
}

/// Tagged variant: A and B must share variance and configuration.
Tensor4<3> tensor_product(const Tensor2& a, const Tensor2& b, Product kind);

/// R(X)_ijkl = X_iklj and its inverse L(Y)_ijkl = Y_iljk.
template <std::size_t N>
Tensor4<N> rearrange(const Tensor4<N>& x, Rearrangement dir) {
  Tensor4<N> r;
  r.config = x.config;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t k = 0; k < N; ++k)
        for (std::size_t l = 0; l < N; ++l)
          r(i, j, k, l) = dir == Rearrangement::R ? x(i, k, l, j) : x(i, l, j, k);
  return r;
}

/// (ℂ:X)_ij = ℂ_ijkl X_kl.
template <std::size_t N>
Mat<N> ddot(const Tensor4<N>& t, const Mat<N>& x) {
  Mat<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < N; ++k)
        for (std::size_t l = 0; l < N; ++l) s += t(i, j, k, l) * x(k, l);
      r(i, j) = s;
    }
  return r;
}

template <std::size_t N>
Tensor4<N> operator+(Tensor4<N> a, const Tensor4<N>& b) {
  for (std::size_t i = 0; i < a.c.size(); ++i) a.c[i] += b.c[i];
  return a;
}
template <std::size_t N>
Tensor4<N> operator*(double s, Tensor4<N> a) {
  for (auto& x : a.c) x *= s;
  return a;
}
template <std::size_t N>
double max_abs(const Tensor4<N>& a) {
  double m = 0.0;
  for (double x : a.c) m = std::fmax(m, std::fabs(x));
  return m;
}

/// Components of the permutation tensor 𝔈.
constexpr int permutation(std::size_t i, std::size_t j, std::size_t k) {
  if (i == j || j == k || i == k) return 0;
  return ((i + 1) % 3 == j) ? 1 : -1;
}

/// (𝔈:A)_i = 𝔈_ijk A_jk; 𝔈:(u⊗v) = u×v.
Vec3 permutation_contract(const Mat3& a);

/// w̄ = ½ 𝔈:Wᵀ. Throws NotSkew if the symmetric part exceeds tol.skew·max(1,‖W‖).
Vec3 axial_vector(const Mat3& w, const Tolerances& tol = {});
Vec3 axial_vector(const Tensor2& w, const Tolerances& tol = {});
/// W with Wᵀ = w̄·𝔈, so that W u = w̄ × u.
Mat3 spin_matrix(const Vec3& wbar);
Tensor2 spin_from_axial(const Vec3& wbar, Config config = Config::Current);

/// Surface determinant [(T y₁)×(T y₂)]·y₄ / [(y₁×y₂)·y₃] with in-plane probes
/// y₁, y₂ of the domain plane (unit normal y₃) and codomain unit normal y₄.
double surface_det(const Mat3& t, const Vec3& y1, const Vec3& y2, const Vec3& domain_normal,
                   const Vec3& codomain_normal, const Tolerances& tol = {});
/// Same with an orthonormal probe pair generated from the domain normal.
double surface_det(const Mat3& t, const Vec3& domain_normal, const Vec3& codomain_normal,
                   const Tolerances& tol = {});

/// 𝟏 − n⊗n.
Mat3 surface_projector(const Vec3& n);
/// True when T·n_in = 0 and n_outᵀ·T = 0 within tol.absolute·max(1,‖T‖).
bool is_surface_tensor(const Mat3& t, const Vec3& n_in, const Vec3& n_out, const Tolerances& tol = {});

/// Triple-product determinant [(T y₁)×(T y₂)]·(T y₃) / [(y₁×y₂)·y₃].
double triple_product_det(const Mat3& t, const Vec3& y1, const Vec3& y2, const Vec3& y3);

}  // namespace klts
