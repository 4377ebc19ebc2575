#include "klts/linearization.hpp"

#include <cmath>

namespace klts {

LinearizationTable surface_linearization_table(const Mat2& C, const Mat2& b, const Tolerances& tol,
                                               bool allow_singular_curvature) {
  if (!all_finite(C) || !all_finite(b)) fail(ErrorKind::InvalidArgument, "non-finite table input");
  if (!(C(0, 0) > 0.0 && det(C) > 0.0) || std::fabs(C(0, 1) - C(1, 0)) > tol.absolute * norm(C))
    fail(ErrorKind::NotSPD, "C must be symmetric positive definite");
  if (std::fabs(b(0, 1) - b(1, 0)) > tol.absolute * std::fmax(1.0, norm(b)))
    fail(ErrorKind::InvalidArgument, "b must be symmetric");

  LinearizationTable t;
  t.C_inv = inverse(C);
  const Mat2& ci = t.C_inv;
  t.b_sharp = ci * b * ci;
  t.J = std::sqrt(det(C));
  t.H = 0.5 * trace(ci * b);
  t.K = det(b) / det(C);

  t.dJ_dC = (0.5 * t.J) * ci;
  t.dCinv_dC = -0.5 * (tensor_product(ci, ci, Product::Dyadic) + tensor_product(ci, ci, Product::Box));
  t.dH_dC = -0.5 * t.b_sharp;
  t.dH_db = 0.5 * ci;
  t.dK_dC = -t.K * ci;
  if (std::fabs(det(b)) >= tol.curvature_det)
    t.dK_db = t.K * inverse(b);
  else if (!allow_singular_curvature)
    fail(ErrorKind::SingularCurvature, "b is singular; the Gaussian-curvature derivative needs b⁻¹");
  const Mat2& bs = t.b_sharp;
  t.dbsharp_dC = -0.5 * (tensor_product(ci, bs, Product::Dyadic) + tensor_product(ci, bs, Product::Box) +
                         tensor_product(bs, ci, Product::Dyadic) + tensor_product(bs, ci, Product::Box));
  t.dbsharp_db = 0.5 * (tensor_product(ci, ci, Product::Dyadic) + tensor_product(ci, ci, Product::Box));
  return t;
}

Mat2 apply_plus_layout(const Tensor4<2>& d, const Mat2& dB) { return ddot(rearrange(d, Rearrangement::R), dB); }

}  // namespace klts
