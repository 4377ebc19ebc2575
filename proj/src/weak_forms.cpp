#include "klts/weak_forms.hpp"

#include <cmath>

#include "klts/surface_kinematics.hpp"
#include "klts/volume_kinematics.hpp"

namespace klts {

namespace {

void require_domain(const Box3& chart, const Box3& rule) {
  if (!contains(chart, rule)) fail(ErrorKind::QuadratureDomainMismatch, "quadrature box leaves the chart domain");
}
void require_domain(const Rect2& chart, const Rect2& rule) {
  if (!contains(chart, rule))
    fail(ErrorKind::QuadratureDomainMismatch, "quadrature rectangle leaves the chart domain");
}

template <typename F>
double value_or(const F& f, double fallback, const auto& xi) {
  return f ? f(xi) : fallback;
}

/// One face of a parameter box: ξ_d fixed, integration over the cyclic pair (j, k).
struct FacePoint {
  Vec3 xi;
  double w;
  std::size_t fixed;
  double sign;  // +1 on the upper face
};

std::vector<FacePoint> face_points(const Box3& box, int order) {
  std::vector<FacePoint> pts;
  for (std::size_t d = 0; d < 3; ++d) {
    const std::size_t j = (d + 1) % 3, k = (d + 2) % 3;
    const LineRule u = gauss_legendre(order, box.lo[j], box.hi[j]);
    const LineRule v = gauss_legendre(order, box.lo[k], box.hi[k]);
    for (int side = 0; side < 2; ++side)
      for (std::size_t a = 0; a < u.points.size(); ++a)
        for (std::size_t b = 0; b < v.points.size(); ++b) {
          Vec3 xi;
          xi[d] = side == 0 ? box.lo[d] : box.hi[d];
          xi[j] = u.points[a];
          xi[k] = v.points[b];
          pts.push_back({xi, u.weights[a] * v.weights[b], d, side == 0 ? -1.0 : 1.0});
        }
  }
  return pts;
}

/// ν ds = ±(g_j × g_k) dξʲ dξᵏ on the face ξ_d = const.
Vec3 face_area_vector(const VolumeJet& jet, const FacePoint& p) {
  return p.sign * cross(jet.d[(p.fixed + 1) % 3], jet.d[(p.fixed + 2) % 3]);
}

struct EdgePoint {
  Vec2 xi;
  double w;
  std::size_t fixed;  // 0: ξ¹ fixed, 1: ξ² fixed
  double sign;
};

std::vector<EdgePoint> edge_points(const Rect2& r, int order) {
  std::vector<EdgePoint> pts;
  for (std::size_t d = 0; d < 2; ++d) {
    const std::size_t o = 1 - d;
    const LineRule l = gauss_legendre(order, r.lo[o], r.hi[o]);
    for (int side = 0; side < 2; ++side)
      for (std::size_t a = 0; a < l.points.size(); ++a) {
        Vec2 xi;
        xi[d] = side == 0 ? r.lo[d] : r.hi[d];
        xi[o] = l.points[a];
        pts.push_back({xi, l.weights[a], d, side == 0 ? -1.0 : 1.0});
      }
  }
  return pts;
}

/// ν dl = ±(a₂ × n) dξ² on ξ¹ = const and ±(n × a₁) dξ¹ on ξ² = const.
Vec3 edge_length_vector(const SurfacePointFrame& f, const EdgePoint& e) {
  return e.fixed == 0 ? e.sign * cross(f.a[1], f.n) : e.sign * cross(f.n, f.a[0]);
}

Vec3 spatial_gradient(const BasisTriad& b, const Vec3& d) {
  return d[0] * b.contravariant(0) + d[1] * b.contravariant(1) + d[2] * b.contravariant(2);
}

void require_positive(double T) {
  if (!(T > 0.0)) fail(ErrorKind::NonpositiveTemperature, "temperature field must be positive");
}

}  // namespace

ScalarField3 constant_field3(double v) {
  return [v](const Vec3&) { return ScalarJet3{v, {}}; };
}
ScalarField2 constant_field2(double v) {
  return [v](const Vec2&) { return ScalarJet2{v, {}}; };
}

ResidualBreakdown assemble_volume_mechanical(const VolumeMechanicalInput& in, const BoxRule& rule,
                                             const Tolerances& tol) {
  if (!in.current || !in.variation || !in.sigma) fail(ErrorKind::InvalidArgument, "incomplete mechanical input");
  require_domain(in.current->domain(), rule.domain);
  require_domain(in.variation->domain(), rule.domain);
  std::vector<double> g_int, g_in, g_body, g_bnd;
  for (const auto& q : rule.points) {
    const VolumeJet jet = in.current->eval(q.xi);
    const BasisTriad b = build_basis(jet.d, Config::Current, tol);
    const double jac = det(b.tangent_matrix());
    if (!(jac > 0.0)) fail(ErrorKind::NegativeJacobian, "current chart is not orientation preserving");
    const double dv = jac * q.w;
    const VolumeJet dx = in.variation->eval(q.xi);
    Mat3 grad;
    for (std::size_t i = 0; i < 3; ++i) grad += outer(dx.d[i], b.contravariant(i));
    g_int.push_back(ddot(grad, in.sigma(q.xi)) * dv);
    const double rho = value_or(in.rho, 1.0, q.xi);
    if (in.acceleration) g_in.push_back(rho * dot(dx.x, in.acceleration(q.xi)) * dv);
    if (in.body_force) g_body.push_back(rho * dot(dx.x, in.body_force(q.xi)) * dv);
  }
  if (in.traction) {
    for (const auto& p : face_points(rule.domain, rule.order)) {
      const VolumeJet jet = in.current->eval(p.xi);
      const Vec3 a = face_area_vector(jet, p);
      const double ds = norm(a);
      g_bnd.push_back(dot(in.variation->eval(p.xi).x, in.traction(p.xi, a / ds)) * ds * p.w);
    }
  }
  ResidualBreakdown r;
  r.G_int = pairwise_sum(g_int);
  r.G_in = pairwise_sum(g_in);
  r.G_ext_body = pairwise_sum(g_body);
  r.G_ext_boundary = pairwise_sum(g_bnd);
  return r;
}

ResidualBreakdown assemble_volume_thermal(const VolumeThermalInput& in, const BoxRule& rule, const Tolerances& tol) {
  if (!in.current || !in.temperature || !in.delta_theta) fail(ErrorKind::InvalidArgument, "incomplete thermal input");
  require_domain(in.current->domain(), rule.domain);
  std::vector<double> ent, con, src, bnd;
  for (const auto& q : rule.points) {
    const VolumeJet jet = in.current->eval(q.xi);
    const BasisTriad b = build_basis(jet.d, Config::Current, tol);
    const double dv = det(b.tangent_matrix()) * q.w;
    const ScalarJet3 T = in.temperature(q.xi);
    require_positive(T.v);
    const ScalarJet3 th = in.delta_theta(q.xi);
    const Vec3 flux = fourier_flux(in.k, spatial_gradient(b, T.d));
    const double rho = value_or(in.rho, 1.0, q.xi);
    ent.push_back(th.v * rho * T.v * value_or(in.s_dot, 0.0, q.xi) * dv);
    con.push_back(dot(spatial_gradient(b, th.d), flux) * dv);
    src.push_back(th.v * rho * value_or(in.source, 0.0, q.xi) * dv);
  }
  for (const auto& p : face_points(rule.domain, rule.order)) {
    const VolumeJet jet = in.current->eval(p.xi);
    const BasisTriad b = build_basis(jet.d, Config::Current, tol);
    const ScalarJet3 T = in.temperature(p.xi);
    require_positive(T.v);
    const Vec3 flux = fourier_flux(in.k, spatial_gradient(b, T.d));
    const Vec3 a = face_area_vector(jet, p);
    bnd.push_back(in.delta_theta(p.xi).v * dot(flux, a) * p.w);
  }
  ResidualBreakdown r;
  r.entropy_rate = pairwise_sum(ent);
  r.conduction = pairwise_sum(con);
  r.source = pairwise_sum(src);
  r.boundary_flux = pairwise_sum(bnd);
  return r;
}

std::function<Mat3(const Vec3&)> constitutive_stress(VolumeChartPtr reference, VolumeChartPtr current,
                                                     ScalarField3 temperature, ThermalExpansionModel model,
                                                     VolumeMaterialParams params) {
  return [=](const Vec3& xi) {
    const TwoPointMap F = deformation_gradient(*reference, *current, xi);
    return volume_response(F.matrix(), temperature(xi).v, model, params).sigma;
  };
}

double volume_free_energy(const VolumeChart& reference, const VolumeChart& current, const ScalarField3& temperature,
                          const ThermalExpansionModel& model, const VolumeMaterialParams& params, const BoxRule& rule,
                          const Tolerances& tol) {
  require_domain(reference.domain(), rule.domain);
  require_domain(current.domain(), rule.domain);
  std::vector<double> terms;
  for (const auto& q : rule.points) {
    const VolumeJet jet = reference.eval(q.xi);
    const double dV = det(Mat3::from_columns(jet.d)) * q.w;
    const Mat3 f = deformation_gradient(reference, current, q.xi, tol).matrix();
    terms.push_back(volume_energy_of_C(transpose(f) * f, temperature(q.xi).v, model, params) * dV);
  }
  return pairwise_sum(terms);
}

ShellVariation shell_variations(const SurfacePointFrame& cur, const SurfaceJet& delta_x) {
  ShellVariation v;
  v.da = delta_x.d;
  for (std::size_t al = 0; al < 2; ++al)
    for (std::size_t be = 0; be < 2; ++be) v.da_co(al, be) = dot(v.da[al], cur.a[be]) + dot(cur.a[al], v.da[be]);
  v.dn = -1.0 * (dot(v.da[0], cur.n) * cur.a_dual[0] + dot(v.da[1], cur.n) * cur.a_dual[1]);
  for (std::size_t al = 0; al < 2; ++al)
    for (std::size_t be = 0; be < 2; ++be)
      v.db(al, be) = dot(delta_x.dd[al][be], cur.n) + dot(cur.da[al][be], v.dn);
  return v;
}

ResidualBreakdown assemble_shell_mechanical(const ShellMechanicalInput& in, const RectRule& rule,
                                            const Tolerances& tol) {
  if (!in.reference || !in.current || !in.variation) fail(ErrorKind::InvalidArgument, "incomplete shell input");
  require_domain(in.reference->domain(), rule.domain);
  require_domain(in.current->domain(), rule.domain);
  require_domain(in.variation->domain(), rule.domain);
  const double theta0 = in.thermal.in_plane.theta0;
  std::vector<double> mem, bend, g_in, g_body, g_bnd, g_mom;
  for (const auto& q : rule.points) {
    const SurfacePointFrame ref = frame(*in.reference, q.xi, Config::Reference, tol);
    const SurfacePointFrame cur = frame(*in.current, q.xi, Config::Current, tol);
    const double T = in.temperature ? in.temperature(q.xi).v : theta0;
    const ShellResponse resp = shell_response(shell_input(ref, cur, T, in.thermal), in.material);
    const SurfaceJet dx = in.variation->eval(q.xi);
    const ShellVariation var = shell_variations(cur, dx);
    const double dA = std::sqrt(ref.a_det) * q.w;
    mem.push_back(0.5 * ddot(resp.sigma_back, var.da_co) * dA);
    bend.push_back(-ddot(resp.mu_back, var.db) * dA);
    const double rho = in.material.rho0s;
    if (in.acceleration) g_in.push_back(rho * dot(dx.x, in.acceleration(q.xi)) * dA);
    if (in.body_force) g_body.push_back(rho * dot(dx.x, in.body_force(q.xi)) * dA);
  }
  if (in.traction || in.boundary_moment) {
    for (const auto& e : edge_points(rule.domain, rule.order)) {
      const SurfacePointFrame cur = frame(*in.current, e.xi, Config::Current, tol);
      const Vec3 a = edge_length_vector(cur, e);
      const double dl = norm(a);
      const Vec3 nu = a / dl;
      const SurfaceJet dx = in.variation->eval(e.xi);
      if (in.traction) g_bnd.push_back(dot(dx.x, in.traction(e.xi, nu)) * dl * e.w);
      if (in.boundary_moment) {
        const SurfacePointFrame ref = frame(*in.reference, e.xi, Config::Reference, tol);
        const double T = in.temperature ? in.temperature(e.xi).v : theta0;
        const ShellResponse resp = shell_response(shell_input(ref, cur, T, in.thermal), in.material);
        const ShellVariation var = shell_variations(cur, dx);
        // δn·μᵀν = −Mᵅᵝ (δn·a_β)(a_α·ν).
        double m = 0.0;
        for (std::size_t al = 0; al < 2; ++al)
          for (std::size_t be = 0; be < 2; ++be)
            m -= resp.M(al, be) * dot(var.dn, cur.a[be]) * dot(cur.a[al], nu);
        g_mom.push_back(m * dl * e.w);
      }
    }
  }
  ResidualBreakdown r;
  r.membrane = pairwise_sum(mem);
  r.bending = pairwise_sum(bend);
  r.G_int = r.membrane + r.bending;
  r.G_in = pairwise_sum(g_in);
  r.G_ext_body = pairwise_sum(g_body);
  r.G_ext_boundary = pairwise_sum(g_bnd);
  r.G_ext_moment = pairwise_sum(g_mom);
  return r;
}

ResidualBreakdown assemble_shell_thermal(const ShellThermalInput& in, const RectRule& rule, const Tolerances& tol) {
  if (!in.current || !in.temperature || !in.delta_theta) fail(ErrorKind::InvalidArgument, "incomplete thermal input");
  require_domain(in.current->domain(), rule.domain);
  auto flux_at = [&](const SurfacePointFrame& f, const ScalarJet2& T) {
    return surface_projector(f.n) * fourier_flux(in.k, surface_gradient(f, T.d));
  };
  std::vector<double> ent, con, src, bnd;
  for (const auto& q : rule.points) {
    const SurfacePointFrame f = frame(*in.current, q.xi, Config::Current, tol);
    const double da = std::sqrt(f.a_det) * q.w;
    const ScalarJet2 T = in.temperature(q.xi);
    require_positive(T.v);
    const ScalarJet2 th = in.delta_theta(q.xi);
    const double rho = value_or(in.rho, 1.0, q.xi);
    ent.push_back(th.v * rho * T.v * value_or(in.s_dot, 0.0, q.xi) * da);
    con.push_back(dot(surface_gradient(f, th.d), flux_at(f, T)) * da);
    src.push_back(th.v * rho * value_or(in.source, 0.0, q.xi) * da);
  }
  for (const auto& e : edge_points(rule.domain, rule.order)) {
    const SurfacePointFrame f = frame(*in.current, e.xi, Config::Current, tol);
    const ScalarJet2 T = in.temperature(e.xi);
    require_positive(T.v);
    bnd.push_back(in.delta_theta(e.xi).v * dot(flux_at(f, T), edge_length_vector(f, e)) * e.w);
  }
  ResidualBreakdown r;
  r.entropy_rate = pairwise_sum(ent);
  r.conduction = pairwise_sum(con);
  r.source = pairwise_sum(src);
  r.boundary_flux = pairwise_sum(bnd);
  return r;
}

double shell_free_energy(const SurfaceChart& reference, const SurfaceChart& current, const ScalarField2& temperature,
                         const SurfaceThermalModel& thermal, const SurfaceMaterialParams& material,
                         const RectRule& rule, const Tolerances& tol) {
  require_domain(reference.domain(), rule.domain);
  require_domain(current.domain(), rule.domain);
  std::vector<double> terms;
  for (const auto& q : rule.points) {
    const SurfacePointFrame ref = frame(reference, q.xi, Config::Reference, tol);
    const SurfacePointFrame cur = frame(current, q.xi, Config::Current, tol);
    const double T = temperature ? temperature(q.xi).v : thermal.in_plane.theta0;
    terms.push_back(shell_energy(shell_input(ref, cur, T, thermal), material).W * std::sqrt(ref.a_det) * q.w);
  }
  return pairwise_sum(terms);
}

namespace {

/// (div Aᵀ)_i = ∂A_ij/∂x_j by the five-point stencil.
Vec3 divergence(const std::function<Mat3(const Vec3&)>& a, const Vec3& x, double h) {
  Vec3 r;
  for (std::size_t j = 0; j < 3; ++j) {
    const Vec3 e = h * Vec3::unit(j);
    const Mat3 d = (-1.0 * a(x + 2.0 * e) + 8.0 * a(x + e) - 8.0 * a(x - e) + a(x - 2.0 * e)) / (12.0 * h);
    for (std::size_t i = 0; i < 3; ++i) r[i] += d(i, j);
  }
  return r;
}

}  // namespace

BalanceReport balance_diagnostics(const BalanceFields& fields, const std::vector<Vec3>& points, double h) {
  BalanceReport r;
  for (const Vec3& x : points) {
    const double rho = fields.rho ? fields.rho(x) : fields.rho0;
    if (fields.J) r.mass = std::fmax(r.mass, std::fabs(fields.rho0 - fields.J(x) * rho));
    if (fields.sigma) {
      Vec3 m = divergence(fields.sigma, x, h);
      if (fields.body_force) m += rho * fields.body_force(x);
      if (fields.acceleration) m -= rho * fields.acceleration(x);
      r.momentum = std::fmax(r.momentum, norm(m));
      Vec3 ang = permutation_contract(fields.sigma(x));
      if (fields.mu_bar) ang += divergence(fields.mu_bar, x, h);
      if (fields.body_couple) ang += rho * fields.body_couple(x);
      r.angular = std::fmax(r.angular, norm(ang));
    }
  }
  return r;
}

ShellBalanceReport shell_balance_diagnostics(const SurfaceChart& current, const Vec2& xi, const Mat2& sigma,
                                             const std::function<Mat2(const Vec2&)>& moment, double h) {
  const SurfacePointFrame f = frame(current, xi, Config::Current);
  const Mat2 M = moment(xi);
  std::array<Mat2, 2> dM;
  for (std::size_t be = 0; be < 2; ++be) {
    const Vec2 e = h * Vec2::unit(be);
    dM[be] = (moment(xi + e) - moment(xi - e)) / (2.0 * h);
  }
  ShellBalanceReport r;
  for (std::size_t al = 0; al < 2; ++al) {
    // Mᵝᵅ;β = Mᵝᵅ,β + Γᵝ_γβ Mᵞᵅ + Γᵅ_γβ Mᵝᵞ.
    double div = 0.0;
    for (std::size_t be = 0; be < 2; ++be) {
      div += dM[be](be, al);
      for (std::size_t g = 0; g < 2; ++g) div += f.gamma[be](g, be) * M(g, al) + f.gamma[al](g, be) * M(be, g);
    }
    r.S[al] = -div;
  }
  const ShellResultants res = shell_resultants(f, sigma, M);
  r.sigma_asymmetry = res.asymmetry;
  r.sigma_KL_transpose = kirchhoff_love_stress_transpose(f, res.N, r.S);
  return r;
}

}  // namespace klts
