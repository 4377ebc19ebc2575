#include <cmath>
#include <limits>

#include "klts/constitutive.hpp"
#include "klts/surface_geometry.hpp"
#include "klts/surface_kinematics.hpp"
#include "klts/verify/oracles.hpp"
#include "klts/verify/suite.hpp"
#include "klts/volume_kinematics.hpp"

namespace klts {

namespace {

/// Fourth-order five-point derivative of s ↦ f(s) at 0.
template <typename F>
auto fd5(const F& f, double h) {
  return (-1.0 * f(2.0 * h) + 8.0 * f(h) - 8.0 * f(-h) + f(-2.0 * h)) / (12.0 * h);
}

constexpr double kRicciStep = 2.5e-4;

std::vector<VolumeChartPtr> volume_chart_family(SplitMix64& rng) {
  std::vector<VolumeChartPtr> charts;
  for (int i = 0; i < 15; ++i) charts.push_back(random_volume_chart(rng, 0.05));
  for (int i = 0; i < 5; ++i) {
    const Box3 dom{Vec3{{1.0, 0.0, -1.0}}, Vec3{{2.0, 3.0, 1.0}}};
    charts.push_back(transformed_volume_chart(cylindrical_chart(dom), random_rotation(rng), random_vec3(rng)));
  }
  return charts;
}

std::vector<SurfaceChartPtr> surface_chart_family(SplitMix64& rng) {
  std::vector<SurfaceChartPtr> charts;
  for (int i = 0; i < 12; ++i) charts.push_back(random_surface_chart(rng, 0.1));
  for (int i = 0; i < 3; ++i)
    charts.push_back(sphere_chart(rng.uniform(0.5, 3.0), Rect2{Vec2{{0.3, 0.0}}, Vec2{{2.8, 6.0}}}));
  for (int i = 0; i < 2; ++i)
    charts.push_back(torus_chart(rng.uniform(2.0, 3.0), rng.uniform(0.5, 1.0), Rect2{Vec2{{0.0, 0.0}}, Vec2{{6.0, 6.0}}}));
  for (int i = 0; i < 2; ++i)
    charts.push_back(cylinder_chart(rng.uniform(0.5, 2.0), Rect2{Vec2{{0.0, -1.0}}, Vec2{{6.0, 1.0}}}));
  charts.push_back(monge_chart({{2, 0, 0.3 * rng.normal()}, {1, 1, 0.3 * rng.normal()}, {0, 2, 0.3 * rng.normal()},
                                {3, 0, 0.2 * rng.normal()}, {1, 2, 0.2 * rng.normal()}},
                               Rect2{Vec2{{-0.5, -0.5}}, Vec2{{0.5, 0.5}}}));
  return charts;
}

}  // namespace

void register_geometry_properties(PropertyContext& ctx) {
  auto& rng = ctx.rng();

  ctx.check("ricci_volume", "G_ij||k = 0, G^ij||k = 0, G_i||j = 0, G^i||j = 0 with five-point FD partials", 2, 1e-10,
            [&] {
              double err = 0.0;
              std::size_t n = 0;
              for (const auto& chart : volume_chart_family(rng)) {
                for (int p = 0; p < 10; ++p) {
                  const Vec3 xi = random_point(rng, chart->domain(), 0.05);
                  const BasisTriad b = chart_basis(*chart, xi, Config::Reference);
                  const ChristoffelField g = christoffel(*chart, xi);
                  BasisDerivatives d;
                  for (std::size_t k = 0; k < 3; ++k) {
                    auto at = [&](double s) { return chart_basis(*chart, xi + s * Vec3::unit(k), Config::Reference); };
                    d.metric_co[k] = fd5([&](double s) { return at(s).metric_co(); }, kRicciStep);
                    d.metric_contra[k] = fd5([&](double s) { return at(s).metric_contra(); }, kRicciStep);
                    for (std::size_t i = 0; i < 3; ++i) {
                      d.tangent[i][k] = fd5([&](double s) { return at(s).covariant(i); }, kRicciStep);
                      d.dual[i][k] = fd5([&](double s) { return at(s).contravariant(i); }, kRicciStep);
                    }
                  }
                  err = std::fmax(err, ricci_residuals(b, d, g).max());
                  err = std::fmax(err, ricci_residuals(b, basis_derivatives(*chart, xi), g).max());
                  ++n;
                }
              }
              return std::pair{n, err};
            });

  ctx.check("ricci_surface", "a_ab;g = 0 and a^ab;g = 0 on the mid-surface with five-point FD partials", 2, 1e-10,
            [&] {
              double err = 0.0;
              std::size_t n = 0;
              for (const auto& chart : surface_chart_family(rng)) {
                for (int p = 0; p < 10; ++p) {
                  const Vec2 xi = random_point(rng, chart->domain(), 0.05);
                  const SurfacePointFrame f = frame(*chart, xi);
                  for (std::size_t g = 0; g < 2; ++g) {
                    auto at = [&](double s) { return frame(*chart, xi + s * Vec2::unit(g)); };
                    Mat2 co = fd5([&](double s) { return at(s).a_co; }, kRicciStep);
                    Mat2 contra = fd5([&](double s) { return at(s).a_contra; }, kRicciStep);
                    for (std::size_t al = 0; al < 2; ++al)
                      for (std::size_t be = 0; be < 2; ++be)
                        for (std::size_t d = 0; d < 2; ++d) {
                          co(al, be) -= f.gamma[d](al, g) * f.a_co(d, be) + f.gamma[d](be, g) * f.a_co(al, d);
                          contra(al, be) +=
                              f.gamma[al](d, g) * f.a_contra(d, be) + f.gamma[be](d, g) * f.a_contra(al, d);
                        }
                    err = std::fmax(err, std::fmax(max_abs(co), max_abs(contra)));
                  }
                  for (const auto& m : metric_covariant_derivative(f)) err = std::fmax(err, max_abs(m));
                  for (const auto& m : contra_metric_covariant_derivative(f)) err = std::fmax(err, max_abs(m));
                  ++n;
                }
              }
              return std::pair{n, err};
            });

  ctx.check("gauss_weingarten", "a_a,b = G^g_ab a_g + b_ab n and n,a = -b^b_a a_b with five-point FD partials", 3,
            1e-10, [&] {
              double err = 0.0;
              std::size_t n = 0;
              for (const auto& chart : surface_chart_family(rng)) {
                for (int p = 0; p < 10; ++p) {
                  const Vec2 xi = random_point(rng, chart->domain(), 0.05);
                  const SurfacePointFrame f = frame(*chart, xi);
                  for (std::size_t be = 0; be < 2; ++be) {
                    auto at = [&](double s) { return frame(*chart, xi + s * Vec2::unit(be)); };
                    for (std::size_t al = 0; al < 2; ++al) {
                      Vec3 gauss = fd5([&](double s) { return at(s).a[al]; }, kRicciStep) - f.b_co(al, be) * f.n;
                      for (std::size_t g = 0; g < 2; ++g) gauss -= f.gamma[g](al, be) * f.a[g];
                      err = std::fmax(err, max_abs(gauss));
                    }
                    Vec3 wein = fd5([&](double s) { return at(s).n; }, kRicciStep);
                    for (std::size_t g = 0; g < 2; ++g) wein += f.b_mixed(g, be) * f.a[g];
                    err = std::fmax(err, max_abs(wein));
                  }
                  const GaussWeingartenResiduals r = gauss_weingarten_residuals(f);
                  err = std::fmax(err, std::fmax(r.gauss, r.weingarten));
                  ++n;
                }
              }
              return std::pair{n, err};
            });

  ctx.check("sphere_curvature", "sphere R = 2: |H| = 1/2 and K = 1/4 from a position-only FD jet", 3, 1e-8, [&] {
    const double R = 2.0;
    const auto chart = sphere_chart(R, Rect2{Vec2{{0.3, 0.0}}, Vec2{{2.8, 6.0}}});
    double err = 0.0;
    std::size_t n = 0;
    for (int p = 0; p < 50; ++p) {
      const Vec2 xi = random_point(rng, chart->domain(), 0.1);
      const SurfacePointFrame fd = frame_from_jet(fd_surface_jet(*chart, xi, 1e-2), xi);
      const SurfacePointFrame ex = frame(*chart, xi);
      for (const auto* f : {&fd, &ex}) {
        err = std::fmax(err, std::fabs(std::fabs(f->H) - 1.0 / R));
        err = std::fmax(err, std::fabs(f->K - 1.0 / (R * R)));
      }
      ++n;
    }
    return std::pair{n, err};
  });

  ctx.check("surface_rates", "a_dot = w_ab + w_ba, b_dot = w_ag b^g_b + w_a;b, n_dot = -w^a a_a against time FD", 7,
            1e-6, [&] {
              double err = 0.0;
              std::size_t n = 0;
              const double h = 1e-5;
              for (int c = 0; c < 20; ++c) {
                const auto chart = random_surface_chart(rng, 0.15);
                const auto vel = random_surface_field(rng, chart->domain(), 0.5);
                for (int p = 0; p < 5; ++p) {
                  const Vec2 xi = random_point(rng, chart->domain(), 0.05);
                  const SurfaceRates r = surface_rates(*chart, *vel, xi);
                  const SurfacePointFrame fp = frame(*sum_surface_chart(chart, vel, h), xi);
                  const SurfacePointFrame fm = frame(*sum_surface_chart(chart, vel, -h), xi);
                  err = std::fmax(err, relative_error(r.a_dot, (fp.a_co - fm.a_co) / (2.0 * h)));
                  err = std::fmax(err, relative_error(r.b_dot, (fp.b_co - fm.b_co) / (2.0 * h)));
                  err = std::fmax(err, relative_error(r.n_dot, (fp.n - fm.n) / (2.0 * h)));
                  ++n;
                }
              }
              return std::pair{n, err};
            });

  ctx.check("layer_metric", "g_ab(xi) = a_ab - 2 xi l3 b_ab + xi^2 l3^2 b_ag a^gd b_db", 0, 1e-12, [&] {
    double err = 0.0;
    std::size_t n = 0;
    for (const auto& chart : surface_chart_family(rng)) {
      const Vec2 xi = random_point(rng, chart->domain(), 0.05);
      const SurfacePointFrame f = frame(*chart, xi);
      const double z = rng.uniform(-0.05, 0.05), l3 = rng.uniform(0.8, 1.2);
      const ShellLayerFrame l = layer_frame(f, z, l3);
      const Mat2 exact = l.metric_first_order + (z * z * l3 * l3) * (f.b_co * f.a_contra * f.b_co);
      err = std::fmax(err, relative_error(l.metric_exact, exact));
      ++n;
    }
    return std::pair{n, err};
  });

  ctx.check("surface_split", "F_se F_sT = F_s, J_s = J_se J_sT, F_e = F_se + l_e3 n (x) n_T", 0, 1e-12, [&] {
    double err = 0.0;
    std::size_t n = 0;
    for (int c = 0; c < 50; ++c) {
      const auto ref_chart = random_surface_chart(rng, 0.1);
      const auto cur_chart = sum_surface_chart(ref_chart, random_surface_field(rng, ref_chart->domain(), 0.1), 1.0);
      SurfaceThermalModel model;
      model.in_plane.alpha = random_sym3(rng, 1e-3);
      model.in_plane.theta0 = 300.0;
      model.alpha3 = 1e-3 * rng.normal();
      const double T = rng.uniform(250.0, 450.0);
      const Vec2 xi = random_point(rng, ref_chart->domain());
      const SurfacePointFrame ref = frame(*ref_chart, xi, Config::Reference);
      const SurfacePointFrame cur = frame(*cur_chart, xi, Config::Current);
      const double l3 = rng.uniform(0.8, 1.2);
      const auto s = thermo_split_surface(surface_deformation(ref, cur, l3), shell_thermal_deformation(ref, model, T));
      err = std::fmax(err, relative_error(s.F_se * s.F_sT, s.F_s));
      err = std::fmax(err, relative_error(s.J_se * s.J_sT, s.J_s));
      err = std::fmax(err, relative_error(s.F_hat_e, s.F_se + s.lambda_e3 * outer(cur.n, s.n_T)));
      err = std::fmax(err, relative_error(s.F_hat_e * s.F_hat_T, s.F_hat));
      ++n;
    }
    return std::pair{n, err};
  });

  ctx.check("curvature_change_routes", "b_T from the mapped chart equals b_T from derivatives of F_sT", 0, 1e-10, [&] {
    double err = 0.0;
    std::size_t n = 0;
    for (int c = 0; c < 50; ++c) {
      const auto ref_chart = random_surface_chart(rng, 0.15);
      const auto cur_chart = sum_surface_chart(ref_chart, random_surface_field(rng, ref_chart->domain(), 0.1), 1.0);
      const Mat3 m = sym_exp(random_sym3(rng, 0.1));
      const auto inter_chart = transformed_surface_chart(ref_chart, m);
      const Vec2 xi = random_point(rng, ref_chart->domain());
      const SurfacePointFrame ref = frame(*ref_chart, xi, Config::Reference);
      const SurfacePointFrame cur = frame(*cur_chart, xi, Config::Current);
      const SurfacePointFrame inter = frame(*inter_chart, xi, Config::Intermediate);
      const Mat2 b_t = intermediate_curvature_from_map(ref, m);
      err = std::fmax(err, relative_error(b_t, inter.b_co, 1.0));
      const auto st = surface_deformation(ref, cur);
      const Mat3 f_st = thermal_map_from_frames(ref, inter) - outer(inter.n, ref.n);
      err = std::fmax(err, relative_error(curvature_change(ref, cur, inter, st.F_s, f_st), cur.b_co - b_t, 1.0));
      ++n;
    }
    return std::pair{n, err};
  });

  ctx.check("nanson", "(F a) x (F b) = J F^-T (a x b)", 0, 1e-12, [&] {
    double err = 0.0;
    std::size_t n = 0;
    for (int c = 0; c < 200; ++c) {
      const Mat3 F = random_deformation(rng);
      const TwoPointMap f(F, Config::Reference, Config::Current);
      const Vec3 a = random_vec3(rng), b = random_vec3(rng);
      const Vec3 m = cross(a, b);
      err = std::fmax(err, relative_error(nanson(f, m / norm(m), norm(m)), cross(F * a, F * b)));
      ++n;
    }
    return std::pair{n, err};
  });

  ctx.check("velocity_split", "l = l_e + F_e l_T F_e^-1", 0, 1e-12, [&] {
    double err = 0.0;
    std::size_t n = 0;
    for (int c = 0; c < 100; ++c) {
      const TwoPointMap f(random_deformation(rng), Config::Reference, Config::Current);
      const TwoPointMap ft(random_spd3(rng, 0.1), Config::Reference, Config::Intermediate);
      const Mat3 fd = random_mat3(rng), ftd = random_sym3(rng, 0.1);
      const VelocityGradients v = velocity_gradient(f, fd, ft, ftd);
      const Mat3 fe = f.matrix() * ft.inverse();
      err = std::fmax(err, relative_error(v.l_e + fe * v.l_T * inverse(fe), v.l));
      err = std::fmax(err, relative_error(v.d + v.w, v.l));
      ++n;
    }
    return std::pair{n, err};
  });
}

}  // namespace klts
