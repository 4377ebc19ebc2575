#include <algorithm>
#include <cmath>
#include <limits>

#include "klts/linearization.hpp"
#include "klts/quadrature.hpp"
#include "klts/verify/oracles.hpp"
#include "klts/verify/suite.hpp"
#include "klts/volume_kinematics.hpp"
#include "klts/weak_forms.hpp"

namespace klts {

namespace {

const Box3 kUnitBox{Vec3{{-0.5, -0.5, -0.5}}, Vec3{{0.5, 0.5, 0.5}}};
const Rect2 kUnitRect{Vec2{{-0.5, -0.5}}, Vec2{{0.5, 0.5}}};

Mat2 random_curvature(SplitMix64& rng) {
  for (;;) {
    const Mat2 b = random_sym2(rng);
    if (std::fabs(det(b)) > 1e-2) return b;
  }
}

/// ‖R(D) − FD‖ / ‖FD‖ for a ⊕-layout table entry.
double plus_layout_error(const Tensor4<2>& d, const Tensor4<2>& fd) {
  const Tensor4<2> r = rearrange(d, Rearrangement::R);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < r.c.size(); ++i) {
    num += (r.c[i] - fd.c[i]) * (r.c[i] - fd.c[i]);
    den += fd.c[i] * fd.c[i];
  }
  return std::sqrt(num / den);
}

VolumeMaterialParams random_volume_params(SplitMix64& rng) {
  VolumeMaterialParams p;
  p.mu0 = rng.uniform(0.5, 2.0);
  p.lambda = rng.uniform(0.5, 3.0);
  p.c1 = rng.uniform(0.5, 5.0);
  p.c2 = rng.uniform(0.0, 2e-3);
  p.rho0 = rng.uniform(0.5, 2.0);
  return p;
}

SurfaceMaterialParams random_shell_params(SplitMix64& rng) {
  SurfaceMaterialParams p;
  p.K = rng.uniform(0.5, 3.0);
  p.mu_s = rng.uniform(0.5, 2.0);
  p.c1 = rng.uniform(0.5, 2.0);
  p.c3 = rng.uniform(0.05, 1.0);
  p.rho0s = rng.uniform(0.5, 2.0);
  return p;
}

SurfaceThermalModel random_shell_thermal(SplitMix64& rng) {
  SurfaceThermalModel m;
  m.in_plane.alpha = random_sym3(rng, 5e-4);
  m.in_plane.theta0 = 293.15;
  m.alpha3 = 5e-4 * rng.normal();
  return m;
}

/// T(ξ) = T₀ + g·ξ with parametric gradient g.
ScalarField3 linear_temperature3(double t0, const Vec3& g) {
  return [=](const Vec3& xi) { return ScalarJet3{t0 + dot(g, xi), g}; };
}
ScalarField2 linear_temperature2(double t0, const Vec2& g) {
  return [=](const Vec2& xi) { return ScalarJet2{t0 + dot(g, xi), g}; };
}

/// Ambient quadratic T(x) = T₀ + g·x + ½ xᵀQx.
struct AmbientQuadratic {
  double t0 = 300.0;
  Vec3 g;
  Mat3 Q;
  double value(const Vec3& x) const { return t0 + dot(g, x) + 0.5 * dot(x, Q * x); }
  Vec3 gradient(const Vec3& x) const { return g + Q * x; }
};

/// δθ(ξ) = a + b·ξ + ξᵀMξ.
template <std::size_t N>
struct ParametricQuadratic {
  double a = 0.0;
  Vec<N> b;
  Mat<N> M;
  double value(const Vec<N>& xi) const { return a + dot(b, xi) + dot(xi, M * xi); }
  Vec<N> gradient(const Vec<N>& xi) const { return b + 2.0 * (M * xi); }
};

template <std::size_t N>
ParametricQuadratic<N> random_parametric_quadratic(SplitMix64& rng) {
  ParametricQuadratic<N> q;
  q.a = rng.normal();
  for (std::size_t i = 0; i < N; ++i) q.b[i] = rng.normal();
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j <= i; ++j) q.M(i, j) = q.M(j, i) = rng.normal();
  return q;
}

}  // namespace

void register_weak_form_properties(PropertyContext& ctx) {
  auto& rng = ctx.rng();
  const int order = ctx.options().quadrature_order;

  ctx.check("linearization_table_fd", "all eight surface linearization entries against central FD in C and b", 6,
            1e-6, [&] {
              double err = 0.0;
              std::size_t n = 0;
              for (int c = 0; c < 50; ++c) {
                const Mat2 C = random_spd2(rng, 0.3);
                const Mat2 b = random_curvature(rng);
                const LinearizationTable t = surface_linearization_table(C, b);
                const double hc = component_step(C), hb = component_step(b);
                using S = std::function<double(const Mat2&)>;
                using M = std::function<Mat2(const Mat2&)>;
                const S J = [](const Mat2& x) { return std::sqrt(det(x)); };
                const S H_c = [&](const Mat2& x) { return 0.5 * trace(inverse(x) * b); };
                const S H_b = [&](const Mat2& x) { return 0.5 * trace(inverse(C) * x); };
                const S K_c = [&](const Mat2& x) { return det(b) / det(x); };
                const S K_b = [&](const Mat2& x) { return det(x) / det(C); };
                const M Cinv = [](const Mat2& x) { return inverse(x); };
                const M bs_c = [&](const Mat2& x) { return inverse(x) * b * inverse(x); };
                const M bs_b = [&](const Mat2& x) { return inverse(C) * x * inverse(C); };
                err = std::fmax(err, relative_error(t.dJ_dC, fd_gradient_sym<2>(J, C, hc)));
                err = std::fmax(err, relative_error(t.dH_dC, fd_gradient_sym<2>(H_c, C, hc)));
                err = std::fmax(err, relative_error(t.dH_db, fd_gradient_sym<2>(H_b, b, hb)));
                err = std::fmax(err, relative_error(t.dK_dC, fd_gradient_sym<2>(K_c, C, hc)));
                if (!t.dK_db) return std::pair<std::size_t, double>{n, std::numeric_limits<double>::infinity()};
                err = std::fmax(err, relative_error(*t.dK_db, fd_gradient_sym<2>(K_b, b, hb)));
                err = std::fmax(err, plus_layout_error(t.dCinv_dC, fd_jacobian_sym<2>(Cinv, C, hc)));
                err = std::fmax(err, plus_layout_error(t.dbsharp_dC, fd_jacobian_sym<2>(bs_c, C, hc)));
                err = std::fmax(err, plus_layout_error(t.dbsharp_db, fd_jacobian_sym<2>(bs_b, b, hb)));
                ++n;
              }
              return std::pair{n, err};
            });

  ctx.check("linearization_chain_rule", "d(b_sharp) = dbsharp_dC : dC + dbsharp_db : db along a random direction", 0,
            1e-6, [&] {
              double err = 0.0;
              std::size_t n = 0;
              for (int c = 0; c < 50; ++c) {
                const Mat2 C = random_spd2(rng, 0.3);
                const Mat2 b = random_curvature(rng);
                const Mat2 dC = random_sym2(rng), db = random_sym2(rng);
                const LinearizationTable t = surface_linearization_table(C, b);
                auto bs = [&](double e) {
                  const Mat2 ci = inverse(C + e * dC);
                  return ci * (b + e * db) * ci;
                };
                const double h = 1e-6;
                const Mat2 fd = (bs(h) - bs(-h)) / (2.0 * h);
                err = std::fmax(err, relative_error(apply_plus_layout(t.dbsharp_dC, dC) +
                                                        apply_plus_layout(t.dbsharp_db, db),
                                                    fd));
                ++n;
              }
              return std::pair{n, err};
            });

  ctx.check("quadrature_exactness", "Gauss-Legendre with n points integrates degree 2n-1 monomials exactly", 0, 1e-13,
            [&] {
              double err = 0.0;
              std::size_t n = 0;
              for (int m = 1; m <= 20; ++m) {
                const double lo = rng.uniform(-2.0, 0.0), hi = rng.uniform(0.5, 2.0);
                const LineRule r = gauss_legendre(m, lo, hi);
                for (int p = 0; p <= 2 * m - 1; ++p) {
                  std::vector<double> terms;
                  for (std::size_t k = 0; k < r.points.size(); ++k)
                    terms.push_back(r.weights[k] * std::pow(r.points[k], p));
                  const double exact = (std::pow(hi, p + 1) - std::pow(lo, p + 1)) / (p + 1);
                  const double scale = std::fmax(std::pow(std::fabs(hi), p + 1), std::pow(std::fabs(lo), p + 1));
                  err = std::fmax(err, std::fabs(pairwise_sum(terms) - exact) / scale);
                  ++n;
                }
              }
              return std::pair{n, err};
            },
            "error is scaled by max(|lo|, |hi|)^(p+1)");

  ctx.check("rigid_variation_volume", "G_int = 0 for dx = c and dx = W x with W skew", 8, 1e-10, [&] {
    double err = 0.0;
    std::size_t n = 0;
    const BoxRule rule = tensor_rule(kUnitBox, order);
    for (int c = 0; c < 10; ++c) {
      const auto ref = random_volume_chart(rng, 0.05);
      const auto cur = sum_volume_chart(ref, random_volume_field(rng, kUnitBox, 0.1), 1.0);
      ThermalExpansionModel model;
      model.alpha = random_sym3(rng, 5e-4);
      const auto sigma = constitutive_stress(ref, cur, linear_temperature3(rng.uniform(300.0, 400.0), random_vec3(rng, 10.0)),
                                             model, random_volume_params(rng));
      const Mat3 W = skew(random_mat3(rng));
      double scale = 0.0;
      for (const auto& q : rule.points) scale += norm(sigma(q.xi)) * det(Mat3::from_columns(cur->eval(q.xi).d)) * q.w;
      for (const auto& dx : {VolumeChartPtr(affine_volume_chart(Mat3{}, random_vec3(rng), kUnitBox)),
                             transformed_volume_chart(cur, W)}) {
        VolumeMechanicalInput in;
        in.current = cur;
        in.variation = dx;
        in.sigma = sigma;
        err = std::fmax(err, std::fabs(assemble_volume_mechanical(in, rule).G_int) / (norm(W) * scale));
        ++n;
      }
    }
    return std::pair{n, err};
  },
            "error is |G_int| / (||W|| int ||sigma|| dv)");

  ctx.check("rigid_variation_shell", "membrane + bending virtual work vanishes for dx = c and dx = W x", 8, 1e-10,
            [&] {
              double err = 0.0;
              std::size_t n = 0;
              const RectRule rule = tensor_rule(kUnitRect, order);
              for (int c = 0; c < 10; ++c) {
                ShellMechanicalInput in;
                in.reference = random_surface_chart(rng, 0.15);
                in.current = sum_surface_chart(in.reference, random_surface_field(rng, kUnitRect, 0.15), 1.0);
                in.thermal = random_shell_thermal(rng);
                in.material = random_shell_params(rng);
                in.temperature = linear_temperature2(rng.uniform(300.0, 400.0), Vec2{{rng.normal(), rng.normal()}});
                const Mat3 W = skew(random_mat3(rng));
                double scale = 0.0;
                for (const auto& q : rule.points) {
                  const SurfacePointFrame ref = frame(*in.reference, q.xi);
                  const SurfacePointFrame cur = frame(*in.current, q.xi, Config::Current);
                  const ShellResponse r =
                      shell_response(shell_input(ref, cur, in.temperature(q.xi).v, in.thermal), in.material);
                  scale += (norm(r.sigma_back) * norm(cur.a_co) + norm(r.mu_back) * norm(cur.b_co)) *
                           std::sqrt(ref.a_det) * q.w;
                }
                for (const auto& dx : {constant_surface_field(random_vec3(rng), kUnitRect),
                                       transformed_surface_chart(in.current, W)}) {
                  in.variation = dx;
                  err = std::fmax(err, std::fabs(assemble_shell_mechanical(in, rule).G_int) / (norm(W) * scale));
                  ++n;
                }
              }
              return std::pair{n, err};
            },
            "error is |G_int| / (||W|| int (|sigma||a| + |mu||b|) dA)");

  ctx.check("energy_consistency_volume", "G_int = d/de int rho0 psi(x + e dx) dV at fixed temperature", 8, 1e-6, [&] {
    double err = 0.0;
    std::size_t n = 0;
    const BoxRule rule = tensor_rule(kUnitBox, order);
    for (int c = 0; c < 10; ++c) {
      const auto ref = random_volume_chart(rng, 0.05);
      const auto cur = sum_volume_chart(ref, random_volume_field(rng, kUnitBox, 0.1), 1.0);
      const auto dx = random_volume_field(rng, kUnitBox, 0.1);
      ThermalExpansionModel model;
      model.alpha = random_sym3(rng, 5e-4);
      const VolumeMaterialParams params = random_volume_params(rng);
      const ScalarField3 T = linear_temperature3(rng.uniform(300.0, 400.0), random_vec3(rng, 10.0));
      VolumeMechanicalInput in;
      in.current = cur;
      in.variation = dx;
      in.sigma = constitutive_stress(ref, cur, T, model, params);
      const double g_int = assemble_volume_mechanical(in, rule).G_int;
      const double d_pi = five_point(
          [&](double e) { return volume_free_energy(*ref, *sum_volume_chart(cur, dx, e), T, model, params, rule); }, 0.0,
          1e-3);
      err = std::fmax(err, relative_error(g_int, d_pi));
      ++n;
    }
    return std::pair{n, err};
  });

  ctx.check("energy_consistency_shell", "G_int = d/de int W(x + e dx) dA at fixed temperature", 8, 1e-6, [&] {
    double err = 0.0;
    std::size_t n = 0;
    const RectRule rule = tensor_rule(kUnitRect, order);
    for (int c = 0; c < 10; ++c) {
      ShellMechanicalInput in;
      in.reference = random_surface_chart(rng, 0.15);
      in.current = sum_surface_chart(in.reference, random_surface_field(rng, kUnitRect, 0.15), 1.0);
      in.variation = random_surface_field(rng, kUnitRect, 0.1);
      in.thermal = random_shell_thermal(rng);
      in.material = random_shell_params(rng);
      in.temperature = linear_temperature2(rng.uniform(300.0, 400.0), Vec2{{rng.normal(), rng.normal()}});
      const double g_int = assemble_shell_mechanical(in, rule).G_int;
      const double d_pi = five_point(
          [&](double e) {
            return shell_free_energy(*in.reference, *sum_surface_chart(in.current, in.variation, e), in.temperature,
                                     in.thermal, in.material, rule);
          },
          0.0, 1e-3);
      err = std::fmax(err, relative_error(g_int, d_pi));
      ++n;
    }
    return std::pair{n, err};
  });

  ctx.check("shell_variation_fd", "da_ab, dn and db_ab against FD of the perturbed surface x + e dx", 0, 1e-6, [&] {
    double err = 0.0;
    std::size_t n = 0;
    for (int c = 0; c < 20; ++c) {
      const auto cur = random_surface_chart(rng, 0.2);
      const auto dx = random_surface_field(rng, kUnitRect, 0.5);
      for (int p = 0; p < 5; ++p) {
        const Vec2 xi = random_point(rng, kUnitRect);
        const ShellVariation v = shell_variations(frame(*cur, xi, Config::Current), dx->eval(xi));
        auto at = [&](double e) { return frame(*sum_surface_chart(cur, dx, e), xi, Config::Current); };
        const double h = 1e-3;
        auto fd = [&](auto get) { return (-1.0 * get(at(2 * h)) + 8.0 * get(at(h)) - 8.0 * get(at(-h)) + get(at(-2 * h))) / (12.0 * h); };
        err = std::fmax(err, relative_error(v.da_co, fd([](const SurfacePointFrame& f) { return f.a_co; })));
        err = std::fmax(err, relative_error(v.dn, fd([](const SurfacePointFrame& f) { return f.n; })));
        err = std::fmax(err, relative_error(v.db, fd([](const SurfacePointFrame& f) { return f.b_co; })));
        ++n;
      }
    }
    return std::pair{n, err};
  });

  ctx.check("shell_variation_normal_offset", "plane with dx = w n: db_ab = w,ab and dn = -w,a a^a", 0, 1e-12, [&] {
    double err = 0.0;
    std::size_t n = 0;
    for (int c = 0; c < 20; ++c) {
      const Vec3 u = random_vec3(rng), v = random_vec3(rng);
      if (norm(cross(u, v)) < 0.2 * norm(u) * norm(v)) continue;
      const auto plane = plane_chart(random_vec3(rng), u, v, kUnitRect);
      const Vec3 nrm = normalized(cross(u, v));
      const ParametricQuadratic<2> w = random_parametric_quadratic<2>(rng);
      const Vec2 xi = random_point(rng, kUnitRect);
      SurfaceJet jet;
      jet.x = w.value(xi) * nrm;
      const Vec2 dw = w.gradient(xi);
      for (std::size_t al = 0; al < 2; ++al) {
        jet.d[al] = dw[al] * nrm;
        for (std::size_t be = 0; be < 2; ++be) jet.dd[al][be] = (2.0 * w.M(al, be)) * nrm;
      }
      const SurfacePointFrame f = frame(*plane, xi, Config::Current);
      const ShellVariation var = shell_variations(f, jet);
      err = std::fmax(err, relative_error(var.db, 2.0 * w.M, 1.0));
      err = std::fmax(err, relative_error(var.dn, -1.0 * f.from_contra(f.a_contra * dw), 1.0));
      err = std::fmax(err, max_abs(var.da_co));
      ++n;
    }
    return std::pair{n, err};
  });

  ctx.check("divergence_volume_mechanical", "G_int = G_ext for a linear stress field with t = sigma nu, rho f = -div sigma",
            0, 1e-8, [&] {
              double err = 0.0;
              std::size_t n = 0;
              const BoxRule rule = tensor_rule(kUnitBox, order);
              for (int c = 0; c < 10; ++c) {
                const auto cur = random_volume_chart(rng, 0.1);
                const Mat3 s0 = random_sym3(rng);
                const std::array<Mat3, 3> s{random_sym3(rng), random_sym3(rng), random_sym3(rng)};
                auto sigma_x = [=](const Vec3& x) { return s0 + x[0] * s[0] + x[1] * s[1] + x[2] * s[2]; };
                Vec3 div;
                for (std::size_t i = 0; i < 3; ++i)
                  for (std::size_t j = 0; j < 3; ++j) div[i] += s[j](i, j);
                VolumeMechanicalInput in;
                in.current = cur;
                in.variation = random_volume_field(rng, kUnitBox, 1.0);
                in.sigma = [=](const Vec3& xi) { return sigma_x(cur->eval(xi).x); };
                in.body_force = [=](const Vec3&) { return -1.0 * div; };
                in.traction = [=](const Vec3& xi, const Vec3& nu) { return sigma_x(cur->eval(xi).x) * nu; };
                const ResidualBreakdown r = assemble_volume_mechanical(in, rule);
                const double scale = std::fabs(r.G_int) + std::fabs(r.G_ext_body) + std::fabs(r.G_ext_boundary);
                err = std::fmax(err, std::fabs(r.mechanical_residual()) / scale);
                ++n;
              }
              return std::pair{n, err};
            });

  ctx.check("divergence_volume_thermal", "thermal residual vanishes for rho T s_dot = -div q + rho r", 0, 1e-8, [&] {
    double err = 0.0;
    std::size_t n = 0;
    const BoxRule rule = tensor_rule(kUnitBox, order);
    for (int c = 0; c < 10; ++c) {
      const auto cur = random_volume_chart(rng, 0.1);
      const AmbientQuadratic T{300.0, random_vec3(rng, 10.0), random_sym3(rng, 5.0)};
      const Mat3 k = random_psd3(rng) + random_spd3(rng);
      const ParametricQuadratic<3> th = random_parametric_quadratic<3>(rng);
      const ParametricQuadratic<3> sd = random_parametric_quadratic<3>(rng);
      const double div_q = -ddot(k, transpose(T.Q));
      VolumeThermalInput in;
      in.current = cur;
      in.k = k;
      in.temperature = [=](const Vec3& xi) {
        const VolumeJet j = cur->eval(xi);
        const Vec3 g = T.gradient(j.x);
        return ScalarJet3{T.value(j.x), Vec3{{dot(g, j.d[0]), dot(g, j.d[1]), dot(g, j.d[2])}}};
      };
      in.delta_theta = [=](const Vec3& xi) { return ScalarJet3{th.value(xi), th.gradient(xi)}; };
      in.s_dot = [=](const Vec3& xi) { return 1e-3 * sd.value(xi); };
      in.source = [=](const Vec3& xi) { return T.value(cur->eval(xi).x) * 1e-3 * sd.value(xi) + div_q; };
      const ResidualBreakdown r = assemble_volume_thermal(in, rule);
      const double scale =
          std::fabs(r.entropy_rate) + std::fabs(r.conduction) + std::fabs(r.source) + std::fabs(r.boundary_flux);
      err = std::fmax(err, std::fabs(r.thermal_residual()) / scale);
      ++n;
    }
    return std::pair{n, err};
  });

  ctx.check("divergence_shell_thermal", "surface thermal residual vanishes with the source set to div_s q (FD)", 0,
            1e-8, [&] {
              double err = 0.0;
              std::size_t n = 0;
              // Surface integrands carry sqrt(det a) and the unit normal, so they
              // are not polynomial; a fine rule keeps quadrature error below tolerance.
              const RectRule rule = tensor_rule(kUnitRect, std::max(order, 24));
              for (int c = 0; c < 10; ++c) {
                const auto cur = random_surface_chart(rng, 0.2);
                const AmbientQuadratic T{300.0, random_vec3(rng, 10.0), random_sym3(rng, 5.0)};
                const Mat3 k = random_spd3(rng);
                const ParametricQuadratic<2> th = random_parametric_quadratic<2>(rng);
                auto t_jet = [=](const Vec2& xi) {
                  const SurfaceJet j = cur->eval(xi);
                  const Vec3 g = T.gradient(j.x);
                  return ScalarJet2{T.value(j.x), Vec2{{dot(g, j.d[0]), dot(g, j.d[1])}}};
                };
                auto q_at = [=](const Vec2& xi) {
                  const SurfacePointFrame f = frame(*cur, xi, Config::Current);
                  return surface_projector(f.n) * fourier_flux(k, surface_gradient(f, t_jet(xi).d));
                };
                ShellThermalInput in;
                in.current = cur;
                in.k = k;
                in.temperature = t_jet;
                in.delta_theta = [=](const Vec2& xi) { return ScalarJet2{th.value(xi), th.gradient(xi)}; };
                in.source = [=](const Vec2& xi) {
                  const SurfacePointFrame f = frame(*cur, xi, Config::Current);
                  std::array<Vec3, 2> dq;
                  const double h = 1e-3;
                  for (std::size_t al = 0; al < 2; ++al) {
                    const Vec2 e = h * Vec2::unit(al);
                    dq[al] = (-1.0 * q_at(xi + 2.0 * e) + 8.0 * q_at(xi + e) - 8.0 * q_at(xi - e) + q_at(xi - 2.0 * e)) /
                             (12.0 * h);
                  }
                  return surface_divergence(f, dq);
                };
                const ResidualBreakdown r = assemble_shell_thermal(in, rule);
                const double scale =
                    std::fabs(r.entropy_rate) + std::fabs(r.conduction) + std::fabs(r.source) + std::fabs(r.boundary_flux);
                err = std::fmax(err, std::fabs(r.thermal_residual()) / scale);
                ++n;
              }
              return std::pair{n, err};
            });

  ctx.check("balance_diagnostics", "mass, linear and angular momentum residuals vanish for a manufactured state", 0,
            1e-10, [&] {
              double err = 0.0;
              std::size_t n = 0;
              for (int c = 0; c < 20; ++c) {
                const Mat3 s0 = random_sym3(rng);
                const std::array<Mat3, 3> s{random_sym3(rng), random_sym3(rng), random_sym3(rng)};
                Vec3 div;
                for (std::size_t i = 0; i < 3; ++i)
                  for (std::size_t j = 0; j < 3; ++j) div[i] += s[j](i, j);
                const Mat3 F = random_deformation(rng);
                const double J = det(F);
                BalanceFields f;
                f.rho0 = rng.uniform(0.5, 2.0);
                f.sigma = [=](const Vec3& x) { return s0 + x[0] * s[0] + x[1] * s[1] + x[2] * s[2]; };
                f.rho = [=, r0 = f.rho0](const Vec3&) { return r0 / J; };
                f.J = [=](const Vec3&) { return J; };
                f.body_force = [=, r0 = f.rho0](const Vec3&) { return (-J / r0) * div; };
                std::vector<Vec3> pts;
                for (int p = 0; p < 10; ++p) pts.push_back(random_vec3(rng));
                const BalanceReport r = balance_diagnostics(f, pts);
                err = std::fmax(err, std::fmax(r.mass, std::fmax(r.momentum, r.angular)));
                ++n;
              }
              return std::pair{n, err};
            });
}

}  // namespace klts
