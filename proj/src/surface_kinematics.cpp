#include "klts/surface_kinematics.hpp"

#include <cmath>

namespace klts {

namespace {

/// a_μν,γ = a_μ,γ·a_ν + a_μ·a_ν,γ; result[γ](μ, ν).
std::array<Mat2, 2> metric_partials(const SurfacePointFrame& f) {
  std::array<Mat2, 2> d;
  for (std::size_t g = 0; g < 2; ++g)
    for (std::size_t m = 0; m < 2; ++m)
      for (std::size_t v = 0; v < 2; ++v) d[g](m, v) = dot(f.da[m][g], f.a[v]) + dot(f.a[m], f.da[v][g]);
  return d;
}

std::array<Vec3, 2> duals_of(const std::array<Vec3, 2>& t) {
  Mat2 g;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) g(a, b) = dot(t[a], t[b]);
  const Mat2 gi = inverse(g);
  return {gi(0, 0) * t[0] + gi(0, 1) * t[1], gi(1, 0) * t[0] + gi(1, 1) * t[1]};
}

}  // namespace

Mat2 SurfaceDeformationState::C_sT_components() const {
  Mat2 c;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) c(a, b) = dot(a_T[a], a_T[b]);
  return c;
}

SurfaceDeformationState surface_deformation(const SurfacePointFrame& ref, const SurfacePointFrame& cur,
                                            double lambda3, const Tolerances& tol) {
  if (!(lambda3 > 0.0)) fail(ErrorKind::InvalidArgument, "thickness stretch must be positive");
  SurfaceDeformationState s;
  s.reference = ref;
  s.current = cur;
  s.lambda3 = lambda3;
  s.F_s = outer(cur.a[0], ref.a_dual[0]) + outer(cur.a[1], ref.a_dual[1]);
  s.F_hat = s.F_s + lambda3 * outer(cur.n, ref.n);
  s.C_s = transpose(s.F_s) * s.F_s;
  s.C_hat = transpose(s.F_hat) * s.F_hat;
  s.J_s = surface_det(s.F_s, ref.a[0], ref.a[1], ref.n, cur.n, tol);
  if (!(s.J_s > 0.0)) fail(ErrorKind::DegenerateTangents, "surface area ratio is not positive");
  // Until a thermal map is supplied the split is the trivial one, F̂_T = 𝟏.
  s.F_hat_T = Mat3::identity();
  s.F_sT = surface_projector(ref.n);
  s.F_hat_e = s.F_hat;
  s.F_se = s.F_s;
  s.C_hat_T = Mat3::identity();
  s.C_sT = s.F_sT;
  s.C_hat_e = s.C_hat;
  s.C_se = s.C_s;
  s.J_se = s.J_s;
  s.lambda_e3 = lambda3;
  s.n_T = ref.n;
  s.a_T = ref.a;
  return s;
}

SurfaceDeformationState thermo_split_surface(const SurfaceDeformationState& state, const Mat3& f_hat_t,
                                             const Tolerances& tol) {
  SurfaceDeformationState s = state;
  const SurfacePointFrame& ref = s.reference;
  const SurfacePointFrame& cur = s.current;
  const Vec3 v = f_hat_t * ref.n;
  s.lambda_T3 = norm(v);
  if (!(s.lambda_T3 > 0.0)) fail(ErrorKind::MalformedThermalMap, "thermal map collapses the normal");
  s.n_T = v / s.lambda_T3;
  s.a_T = {f_hat_t * ref.a[0], f_hat_t * ref.a[1]};
  const double in_plane = 1e3 * tol.absolute;
  for (const auto& t : s.a_T)
    if (std::fabs(dot(t, s.n_T)) > in_plane * norm(t))
      fail(ErrorKind::MalformedThermalMap, "F_T N has an in-plane part in the intermediate frame");
  if (!(norm(cross(s.a_T[0], s.a_T[1])) > tol.singular * norm(s.a_T[0]) * norm(s.a_T[1])))
    fail(ErrorKind::MalformedThermalMap, "intermediate tangents are degenerate");
  const auto aT_dual = duals_of(s.a_T);

  s.F_hat_T = f_hat_t;
  s.F_sT = f_hat_t - s.lambda_T3 * outer(s.n_T, ref.n);
  s.F_hat_e = s.F_hat * inverse(f_hat_t);
  s.F_se = outer(cur.a[0], aT_dual[0]) + outer(cur.a[1], aT_dual[1]);
  s.lambda_e3 = s.lambda3 / s.lambda_T3;
  s.C_hat_T = transpose(f_hat_t) * f_hat_t;
  s.C_sT = transpose(s.F_sT) * s.F_sT;
  s.C_hat_e = transpose(s.F_hat_e) * s.F_hat_e;
  s.C_se = transpose(s.F_se) * s.F_se;
  s.J_sT = surface_det(s.F_sT, ref.a[0], ref.a[1], ref.n, s.n_T, tol);
  s.J_se = surface_det(s.F_se, s.a_T[0], s.a_T[1], s.n_T, cur.n, tol);
  s.split = true;
  return s;
}

Mat3 thermal_map_from_frames(const SurfacePointFrame& ref, const SurfacePointFrame& inter, double lambda_t3) {
  return outer(inter.a[0], ref.a_dual[0]) + outer(inter.a[1], ref.a_dual[1]) + lambda_t3 * outer(inter.n, ref.n);
}

Mat2 reference_components(const SurfacePointFrame& ref, const Mat3& t) {
  Mat2 c;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) c(a, b) = dot(ref.a[a], t * ref.a[b]);
  return c;
}

Mat2 curvature_change(const SurfacePointFrame& ref, const SurfacePointFrame& cur,
                      const SurfacePointFrame& inter, const Mat3& f_s, const Mat3& f_st) {
  const Mat3 b_pull = transpose(f_s) * cur.curvature_tensor() * f_s;
  const Mat3 bt_pull = transpose(f_st) * inter.curvature_tensor() * f_st;
  return sym(reference_components(ref, b_pull - bt_pull));
}

Mat2 intermediate_curvature_from_map(const SurfacePointFrame& ref, const Mat3& m) {
  const Vec3& nn = ref.n;
  const Mat3 f_st = m * surface_projector(nn);
  const std::array<Vec3, 2> a_t{f_st * ref.a[0], f_st * ref.a[1]};
  const Vec3 n_t = normalized(cross(a_t[0], a_t[1]));
  Mat2 b;
  for (std::size_t be = 0; be < 2; ++be) {
    // F_sT,β = −M (N,β ⊗ N + N ⊗ N,β).
    const Mat3 df = -1.0 * (m * (outer(ref.dn[be], nn) + outer(nn, ref.dn[be])));
    for (std::size_t al = 0; al < 2; ++al) {
      const Vec3 da_t = df * ref.a[al] + f_st * ref.da[al][be];
      b(al, be) = dot(da_t, n_t);
    }
  }
  return sym(b);
}

SurfaceRates surface_rates(const SurfaceChart& chart, const SurfaceChart& velocity, const Vec2& xi,
                           double lambda3, double lambda3_dot, const Tolerances& tol) {
  const SurfacePointFrame f = frame(chart, xi, Config::Current, tol);
  const SurfaceJet vj = velocity.eval(xi);
  const auto dmetric = metric_partials(f);

  SurfaceRates r;
  for (std::size_t be = 0; be < 2; ++be) r.v_tan[be] = dot(vj.x, f.a_dual[be]);
  r.v_n = dot(vj.x, f.n);

  // vᵝ,α = v,α·aᵝ + v·aᵝ,α with aᵝ = aᵝᵞ a_γ.
  Mat2 dv_tan;  // dv_tan(β, α) = vᵝ,α
  Vec2 dv_n;
  for (std::size_t al = 0; al < 2; ++al) {
    const Mat2 dcontra = -1.0 * (f.a_contra * dmetric[al] * f.a_contra);
    for (std::size_t be = 0; be < 2; ++be) {
      Vec3 d_dual;
      for (std::size_t g = 0; g < 2; ++g) d_dual += dcontra(be, g) * f.a[g] + f.a_contra(be, g) * f.da[g][al];
      dv_tan(be, al) = dot(vj.d[al], f.a_dual[be]) + dot(vj.x, d_dual);
    }
    dv_n[al] = dot(vj.d[al], f.n) + dot(vj.x, f.dn[al]);
  }

  for (std::size_t al = 0; al < 2; ++al) {
    for (std::size_t be = 0; be < 2; ++be) {
      double cov = dv_tan(be, al);
      for (std::size_t g = 0; g < 2; ++g) cov += f.gamma[be](g, al) * r.v_tan[g];
      r.w_mixed(al, be) = cov - r.v_n * f.b_mixed(be, al);
    }
    r.w[al] = r.v_tan[0] * f.b_co(0, al) + r.v_tan[1] * f.b_co(1, al) + dv_n[al];
  }
  r.w_co = r.w_mixed * f.a_co;
  r.a_dot = r.w_co + transpose(r.w_co);

  // w_α = v,α·n, hence w_α,β = v,αβ·n + v,α·n,β.
  for (std::size_t al = 0; al < 2; ++al)
    for (std::size_t be = 0; be < 2; ++be) {
      double w_cov = dot(vj.dd[al][be], f.n) + dot(vj.d[al], f.dn[be]);
      for (std::size_t g = 0; g < 2; ++g) w_cov -= f.gamma[g](al, be) * r.w[g];
      double bend = 0.0;
      for (std::size_t g = 0; g < 2; ++g) bend += r.w_co(al, g) * f.b_mixed(g, be);
      r.b_dot(al, be) = bend + w_cov;
    }

  const Vec2 w_up = f.a_contra * r.w;
  r.n_dot = -1.0 * (w_up[0] * f.a[0] + w_up[1] * f.a[1]);
  Mat3 l;
  for (std::size_t al = 0; al < 2; ++al)
    for (std::size_t be = 0; be < 2; ++be) l += r.w_co(al, be) * outer(f.a_dual[be], f.a_dual[al]);
  l += outer(r.n_dot, f.n) - outer(f.n, r.n_dot) + (lambda3_dot / lambda3) * outer(f.n, f.n);
  r.l_s = l;
  return r;
}

}  // namespace klts
