#include "klts/surface_geometry.hpp"

#include <algorithm>
#include <cmath>

namespace klts {

Mat3 SurfacePointFrame::identity() const { return outer(a[0], a_dual[0]) + outer(a[1], a_dual[1]); }

Mat3 SurfacePointFrame::curvature_tensor() const {
  Mat3 b;
  for (std::size_t al = 0; al < 2; ++al)
    for (std::size_t be = 0; be < 2; ++be) b += b_co(al, be) * outer(a_dual[al], a_dual[be]);
  return b;
}

SurfacePointFrame frame_from_jet(const SurfaceJet& jet, const Vec2& xi, Config config, const Tolerances& tol) {
  SurfacePointFrame f;
  f.config = config;
  f.xi = xi;
  f.x = jet.x;
  f.a = jet.d;
  f.da = jet.dd;
  const Vec3 m = cross(jet.d[0], jet.d[1]);
  const double mn = norm(m);
  if (!all_finite(m) || !(mn > tol.singular * norm(jet.d[0]) * norm(jet.d[1])))
    fail(ErrorKind::DegenerateTangents, "surface tangents are (nearly) parallel");
  f.n = m / mn;
  for (std::size_t al = 0; al < 2; ++al)
    for (std::size_t be = 0; be < 2; ++be) f.a_co(al, be) = dot(f.a[al], f.a[be]);
  f.a_det = det(f.a_co);
  f.a_contra = inverse(f.a_co);
  for (std::size_t al = 0; al < 2; ++al)
    f.a_dual[al] = f.a_contra(al, 0) * f.a[0] + f.a_contra(al, 1) * f.a[1];

  for (std::size_t al = 0; al < 2; ++al)
    for (std::size_t be = 0; be < 2; ++be) f.b_co(al, be) = dot(f.n, jet.dd[al][be]);
  f.b_co = sym(f.b_co);
  f.b_contra = f.a_contra * f.b_co * f.a_contra;
  f.b_mixed = f.a_contra * f.b_co;
  f.H = 0.5 * trace(f.b_mixed);
  f.K = det(f.b_co) / f.a_det;
  const double disc = f.H * f.H - det(f.b_mixed);
  if (disc < -tol.discriminant) fail(ErrorKind::InvalidArgument, "complex principal curvatures");
  const double root = std::sqrt(std::max(disc, 0.0));
  f.k1 = f.H + root;
  f.k2 = f.H - root;

  for (std::size_t g = 0; g < 2; ++g)
    for (std::size_t al = 0; al < 2; ++al)
      for (std::size_t be = 0; be < 2; ++be) f.gamma[g](al, be) = dot(jet.dd[al][be], f.a_dual[g]);

  // n = m/‖m‖ ⇒ n,α = (𝟏 − n⊗n) m,α / ‖m‖.
  const Mat3 p = surface_projector(f.n);
  for (std::size_t al = 0; al < 2; ++al) {
    const Vec3 dm = cross(jet.dd[0][al], jet.d[1]) + cross(jet.d[0], jet.dd[1][al]);
    f.dn[al] = (p * dm) / mn;
  }
  return f;
}

SurfacePointFrame frame(const SurfaceChart& chart, const Vec2& xi, Config config, const Tolerances& tol) {
  return frame_from_jet(chart.eval(xi), xi, config, tol);
}

GaussWeingartenResiduals gauss_weingarten_residuals(const SurfacePointFrame& f) {
  GaussWeingartenResiduals r;
  for (std::size_t al = 0; al < 2; ++al) {
    for (std::size_t be = 0; be < 2; ++be) {
      Vec3 v = f.da[al][be] - f.b_co(al, be) * f.n;
      for (std::size_t g = 0; g < 2; ++g) v -= f.gamma[g](al, be) * f.a[g];
      r.gauss = std::max(r.gauss, max_abs(v));
    }
    Vec3 w = f.dn[al];
    for (std::size_t be = 0; be < 2; ++be) w += f.b_mixed(be, al) * f.a[be];
    r.weingarten = std::max(r.weingarten, max_abs(w));
  }
  return r;
}

namespace {

/// a_αβ,γ = a_α,γ·a_β + a_α·a_β,γ; result[γ](α, β).
std::array<Mat2, 2> metric_partials(const SurfacePointFrame& f) {
  std::array<Mat2, 2> d;
  for (std::size_t g = 0; g < 2; ++g)
    for (std::size_t al = 0; al < 2; ++al)
      for (std::size_t be = 0; be < 2; ++be)
        d[g](al, be) = dot(f.da[al][g], f.a[be]) + dot(f.a[al], f.da[be][g]);
  return d;
}

}  // namespace

std::array<Mat2, 2> metric_covariant_derivative(const SurfacePointFrame& f) {
  std::array<Mat2, 2> r = metric_partials(f);
  for (std::size_t g = 0; g < 2; ++g)
    for (std::size_t al = 0; al < 2; ++al)
      for (std::size_t be = 0; be < 2; ++be)
        for (std::size_t d = 0; d < 2; ++d)
          r[g](al, be) -= f.gamma[d](al, g) * f.a_co(d, be) + f.gamma[d](be, g) * f.a_co(al, d);
  return r;
}

std::array<Mat2, 2> contra_metric_covariant_derivative(const SurfacePointFrame& f) {
  const auto dco = metric_partials(f);
  std::array<Mat2, 2> r;
  for (std::size_t g = 0; g < 2; ++g) {
    r[g] = -1.0 * (f.a_contra * dco[g] * f.a_contra);
    for (std::size_t al = 0; al < 2; ++al)
      for (std::size_t be = 0; be < 2; ++be)
        for (std::size_t d = 0; d < 2; ++d)
          r[g](al, be) += f.gamma[al](d, g) * f.a_contra(d, be) + f.gamma[be](d, g) * f.a_contra(al, d);
  }
  return r;
}

ShellLayerFrame layer_frame(const SurfacePointFrame& mid, double xi, double lambda3, double t0) {
  if (!(lambda3 > 0.0)) fail(ErrorKind::InvalidArgument, "thickness stretch must be positive");
  ShellLayerFrame l;
  l.xi = xi;
  l.lambda3 = lambda3;
  l.t0 = t0;
  l.t = lambda3 * t0;
  if (t0 > 0.0 && std::fabs(xi) > 0.5 * l.t)
    fail(ErrorKind::InvalidArgument, "thickness coordinate outside the shell");
  for (std::size_t al = 0; al < 2; ++al) {
    Vec3 g = mid.a[al];
    for (std::size_t ga = 0; ga < 2; ++ga) g -= (xi * lambda3 * mid.b_co(al, ga)) * mid.a_dual[ga];
    l.g[al] = g;
  }
  for (std::size_t al = 0; al < 2; ++al)
    for (std::size_t be = 0; be < 2; ++be) l.metric_exact(al, be) = dot(l.g[al], l.g[be]);
  l.metric_first_order = mid.a_co - (2.0 * xi * lambda3) * mid.b_co;
  return l;
}

Vec3 surface_gradient(const SurfacePointFrame& f, const Vec2& dphi) {
  return dphi[0] * f.a_dual[0] + dphi[1] * f.a_dual[1];
}

Mat3 surface_gradient(const SurfacePointFrame& f, const std::array<Vec3, 2>& dv) {
  return outer(dv[0], f.a_dual[0]) + outer(dv[1], f.a_dual[1]);
}

double surface_divergence(const SurfacePointFrame& f, const std::array<Vec3, 2>& dv) {
  return dot(dv[0], f.a_dual[0]) + dot(dv[1], f.a_dual[1]);
}

double surface_divergence_components(const SurfacePointFrame& f, const Vec2& v, const Mat2& dv) {
  double s = dv(0, 0) + dv(1, 1);
  for (std::size_t al = 0; al < 2; ++al)
    for (std::size_t g = 0; g < 2; ++g) s += f.gamma[al](g, al) * v[g];
  return s;
}

}  // namespace klts
