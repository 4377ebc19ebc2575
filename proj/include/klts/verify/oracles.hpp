#pragma once

#include <functional>

#include "klts/charts.hpp"
#include "klts/tensor_core.hpp"
#include "klts/verify/rng.hpp"

namespace klts {

// ---- finite differences ------------------------------------------------------

/// (f(x+h) − f(x−h)) / 2h.
double central_difference(const std::function<double(double)>& f, double x, double h);
/// Fourth-order five-point first derivative.
double five_point(const std::function<double(double)>& f, double x, double h);

/// ∂f/∂X_kl by central differences with symmetric perturbations X ± h·sym(E_kl).
template <std::size_t N>
Mat<N> fd_gradient_sym(const std::function<double(const Mat<N>&)>& f, const Mat<N>& x, double h) {
  Mat<N> g;
  for (std::size_t k = 0; k < N; ++k)
    for (std::size_t l = 0; l < N; ++l) {
      Mat<N> e;
      e(k, l) += 0.5 * h;
      e(l, k) += 0.5 * h;
      g(k, l) = (f(x + e) - f(x - e)) / (2.0 * h);
    }
  return g;
}

/// ∂A_ij/∂X_kl stored at (i, j, k, l), symmetric perturbations.
template <std::size_t N>
Tensor4<N> fd_jacobian_sym(const std::function<Mat<N>(const Mat<N>&)>& f, const Mat<N>& x, double h) {
  Tensor4<N> d;
  for (std::size_t k = 0; k < N; ++k)
    for (std::size_t l = 0; l < N; ++l) {
      Mat<N> e;
      e(k, l) += 0.5 * h;
      e(l, k) += 0.5 * h;
      const Mat<N> da = (f(x + e) - f(x - e)) / (2.0 * h);
      for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) d(i, j, k, l) = da(i, j);
    }
  return d;
}

/// Tensor-component step 1e-6·max(1, ‖X‖).
template <std::size_t N>
double component_step(const Mat<N>& x) {
  return 1e-6 * std::fmax(1.0, norm(x));
}

/// ‖a − b‖ / ‖b‖, with ‖b‖ replaced by `floor` when smaller.
template <typename T>
double relative_error(const T& a, const T& b, double floor = 1e-300) {
  return norm(a - b) / std::fmax(norm(b), floor);
}
double relative_error(double a, double b, double floor = 1e-300);
double max_abs_diff(const Tensor4<2>& a, const Tensor4<2>& b);

/// Jet of a chart from positions only: five-point first derivatives and nested
/// five-point second derivatives with step h.
SurfaceJet fd_surface_jet(const SurfaceChart& chart, const Vec2& xi, double h);

// ---- random inputs -------------------------------------------------------------

Vec3 random_vec3(SplitMix64& rng, double scale = 1.0);
Vec3 random_unit(SplitMix64& rng);
Mat3 random_mat3(SplitMix64& rng, double scale = 1.0);
Mat3 random_sym3(SplitMix64& rng, double scale = 1.0);
Mat2 random_sym2(SplitMix64& rng, double scale = 1.0);
/// 𝟏 + scale·N with det > 0 (resampled otherwise).
Mat3 random_deformation(SplitMix64& rng, double scale = 0.3);
/// Q diag(exp(N(0, scale))) Qᵀ.
Mat3 random_spd3(SplitMix64& rng, double scale = 0.3);
Mat2 random_spd2(SplitMix64& rng, double scale = 0.3);
Mat3 random_rotation(SplitMix64& rng);
/// L Lᵀ with random L (positive semidefinite, possibly rank deficient when `rank` < 3).
Mat3 random_psd3(SplitMix64& rng, int rank = 3);

/// Near-identity cubic map of [−½, ½]³ with perturbation amplitude `scale`.
VolumeChartPtr random_volume_chart(SplitMix64& rng, double scale = 0.05);
/// Gently curved cubic patch over [−½, ½]², normal close to e₃.
SurfaceChartPtr random_surface_chart(SplitMix64& rng, double scale = 0.1);
/// Cubic vector field over the given rectangle with amplitude `scale`.
SurfaceChartPtr random_surface_field(SplitMix64& rng, const Rect2& domain, double scale = 0.1);
VolumeChartPtr random_volume_field(SplitMix64& rng, const Box3& domain, double scale = 0.1);

Vec2 random_point(SplitMix64& rng, const Rect2& r, double margin = 0.0);
Vec3 random_point(SplitMix64& rng, const Box3& b, double margin = 0.0);

}  // namespace klts
