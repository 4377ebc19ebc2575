#include <cmath>
#include <limits>

#include "klts/constitutive.hpp"
#include "klts/surface_kinematics.hpp"
#include "klts/verify/oracles.hpp"
#include "klts/verify/suite.hpp"

namespace klts {

namespace {

struct VolumeCase {
  ThermalExpansionModel model;
  VolumeMaterialParams params;
  Mat3 F;
  double T = 293.15;
};

VolumeCase random_volume_case(SplitMix64& rng) {
  VolumeCase c;
  c.model.alpha = random_sym3(rng, 5e-4);
  c.model.theta0 = 293.15;
  c.params.mu0 = rng.uniform(0.5, 2.0);
  c.params.lambda = rng.uniform(0.5, 3.0);
  c.params.c1 = rng.uniform(0.5, 5.0);
  c.params.c2 = rng.uniform(0.0, 2e-3);
  c.params.rho0 = rng.uniform(0.5, 2.0);
  c.F = random_deformation(rng, 0.3);
  c.T = rng.uniform(320.0, 450.0);
  return c;
}

struct ShellCase {
  SurfaceThermalModel model;
  SurfaceMaterialParams params;
  SurfacePointFrame ref;
  SurfacePointFrame cur;
  double T = 293.15;
};

SurfaceMaterialParams random_shell_params(SplitMix64& rng) {
  SurfaceMaterialParams p;
  p.K = rng.uniform(0.5, 3.0);
  p.mu_s = rng.uniform(0.5, 2.0);
  p.c1 = rng.uniform(0.5, 2.0);
  p.c3 = rng.uniform(0.05, 1.0);
  p.rho0s = rng.uniform(0.5, 2.0);
  return p;
}

ShellCase random_shell_case(SplitMix64& rng) {
  ShellCase c;
  c.model.in_plane.alpha = random_sym3(rng, 5e-4);
  c.model.in_plane.theta0 = 293.15;
  c.model.alpha3 = 5e-4 * rng.normal();
  c.params = random_shell_params(rng);
  const auto ref_chart = random_surface_chart(rng, 0.15);
  const auto cur_chart = sum_surface_chart(ref_chart, random_surface_field(rng, ref_chart->domain(), 0.15), 1.0);
  const Vec2 xi = random_point(rng, ref_chart->domain());
  c.ref = frame(*ref_chart, xi, Config::Reference);
  c.cur = frame(*cur_chart, xi, Config::Current);
  c.T = rng.uniform(320.0, 450.0);
  return c;
}

/// Smooth process F(t) = 𝟏 + t A + t² B, T(t) = T_a + t Ṫ.
struct Process {
  Mat3 A, B;
  double T_a = 300.0, T_dot = 0.0;
  Mat3 F(double t) const { return Mat3::identity() + t * A + (t * t) * B; }
  Mat3 F_dot(double t) const { return A + (2.0 * t) * B; }
  double T(double t) const { return T_a + t * T_dot; }
};

}  // namespace

void register_constitutive_properties(PropertyContext& ctx) {
  auto& rng = ctx.rng();

  ctx.check("zero_stress_volume", "F = F_T and F = Q F_T give S = 0 over a 20-step sweep of dT in [0, 200]", 4,
            1e-12, [&] {
              double err = 0.0;
              std::size_t n = 0;
              for (int c = 0; c < 10; ++c) {
                VolumeCase vc = random_volume_case(rng);
                const Mat3 q = random_rotation(rng);
                for (int k = 0; k < 20; ++k) {
                  const double T = vc.model.theta0 + 200.0 * k / 19.0;
                  const Mat3 ft = thermal_deformation(vc.model, T).matrix();
                  for (const Mat3& f : {ft, q * ft}) {
                    const VolumeResponse r = volume_response(f, T, vc.model, vc.params);
                    err = std::fmax(err, norm(r.S) / vc.params.mu0);
                    ++n;
                  }
                }
              }
              return std::pair{n, err};
            },
            "error is ||S|| / mu0");

  ctx.check("zero_stress_shell", "current = M(reference) gives sigma = 0 and mu = 0 over a 20-step sweep", 4, 1e-12,
            [&] {
              double err = 0.0;
              std::size_t n = 0;
              for (int c = 0; c < 10; ++c) {
                ShellCase sc = random_shell_case(rng);
                const auto ref_chart = random_surface_chart(rng, 0.15);
                const Vec2 xi = random_point(rng, ref_chart->domain());
                const SurfacePointFrame ref = frame(*ref_chart, xi, Config::Reference);
                const double scale = std::fmax(sc.params.K, std::fmax(sc.params.mu_s, sc.params.c3));
                for (int k = 0; k < 20; ++k) {
                  const double T = sc.model.in_plane.theta0 + 200.0 * k / 19.0;
                  const Mat3 m = shell_thermal_map(sc.model, T);
                  const SurfacePointFrame cur = frame(*transformed_surface_chart(ref_chart, m), xi, Config::Current);
                  const ShellResponse r = shell_response(shell_input(ref, cur, T, sc.model), sc.params);
                  err = std::fmax(err, std::fmax(norm(r.sigma_back), norm(r.mu_back)) / scale);
                  ++n;
                }
              }
              return std::pair{n, err};
            },
            "error is max(||sigma||, ||mu||) / max(K, mu_s, c3)");

  ctx.check("stress_fd_volume", "S = 2 dW/dC and S F^T = (dW/dF)^T against central FD", 5, 1e-6, [&] {
    double err = 0.0;
    std::size_t n = 0;
    for (int c = 0; c < 50; ++c) {
      const VolumeCase vc = random_volume_case(rng);
      const VolumeResponse r = volume_response(vc.F, vc.T, vc.model, vc.params);
      const Mat3 C = transpose(vc.F) * vc.F;
      const std::function<double(const Mat3&)> w_of_c = [&](const Mat3& x) {
        return volume_energy_of_C(x, vc.T, vc.model, vc.params);
      };
      err = std::fmax(err, relative_error(r.S, 2.0 * fd_gradient_sym<3>(w_of_c, C, component_step(C))));
      Mat3 dw_df;
      const double h = component_step(vc.F);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
          Mat3 e;
          e(i, j) = h;
          const Mat3 fp = vc.F + e, fm = vc.F - e;
          dw_df(i, j) = (w_of_c(transpose(fp) * fp) - w_of_c(transpose(fm) * fm)) / (2.0 * h);
        }
      err = std::fmax(err, relative_error(r.P, transpose(dw_df)));
      ++n;
    }
    return std::pair{n, err};
  });

  ctx.check("stress_fd_shell", "sigma = 2 dW/dC_s and mu = -dW/dkappa against central FD", 5, 1e-6, [&] {
    double err = 0.0;
    std::size_t n = 0;
    for (int c = 0; c < 50; ++c) {
      const ShellCase sc = random_shell_case(rng);
      const ShellInput in = shell_input(sc.ref, sc.cur, sc.T, sc.model);
      const ShellResponse r = shell_response(in, sc.params);
      const std::function<double(const Mat2&)> w_of_c = [&](const Mat2& x) {
        ShellInput y = in;
        y.c = x;
        return shell_energy(y, sc.params).W;
      };
      const std::function<double(const Mat2&)> w_of_k = [&](const Mat2& x) {
        ShellInput y = in;
        y.kappa = x;
        return shell_energy(y, sc.params).W;
      };
      err = std::fmax(err, relative_error(r.sigma_back, 2.0 * fd_gradient_sym<2>(w_of_c, in.c, component_step(in.c))));
      err = std::fmax(err,
                      relative_error(r.mu_back, -1.0 * fd_gradient_sym<2>(w_of_k, in.kappa, component_step(in.kappa))));
      err = std::fmax(err, relative_error(r.sigma * r.J_s, r.sigma_back));
      ++n;
    }
    return std::pair{n, err};
  });

  ctx.check("intermediate_stress", "J_T S_T = 2 dW/dC_e and sigma = F_e S_T F_e^T / J_e", 0, 1e-6, [&] {
    double err = 0.0;
    std::size_t n = 0;
    for (int c = 0; c < 50; ++c) {
      const VolumeCase vc = random_volume_case(rng);
      const VolumeResponse r = volume_response(vc.F, vc.T, vc.model, vc.params);
      const std::function<double(const Mat3&)> w = [&](const Mat3& x) {
        return volume_energy(x, vc.T, vc.params).W;
      };
      err = std::fmax(err, relative_error(r.J_T * r.S_T, 2.0 * fd_gradient_sym<3>(w, r.C_e, component_step(r.C_e))));
      const TwoPointMap ft = thermal_deformation(vc.model, vc.T);
      const Mat3 fe = vc.F * ft.inverse();
      err = std::fmax(err, relative_error(fe * r.S_T * transpose(fe) / det(fe), r.sigma));
      ++n;
    }
    return std::pair{n, err};
  });

  ctx.check("entropy_volume", "s = -dpsi/dT at fixed C and u = psi + T s", 0, 1e-6, [&] {
    double err = 0.0;
    std::size_t n = 0;
    for (int c = 0; c < 50; ++c) {
      const VolumeCase vc = random_volume_case(rng);
      const VolumeResponse r = volume_response(vc.F, vc.T, vc.model, vc.params);
      const Mat3 C = transpose(vc.F) * vc.F;
      const double dpsi = five_point(
          [&](double T) { return volume_energy_of_C(C, T, vc.model, vc.params) / vc.params.rho0; }, vc.T, 1e-2);
      err = std::fmax(err, relative_error(r.s, -dpsi));
      err = std::fmax(err, relative_error(r.u, r.psi + vc.T * r.s));
      ++n;
    }
    return std::pair{n, err};
  });

  ctx.check("entropy_shell", "s = -dpsi/dT at fixed current surface (metric and curvature)", 0, 1e-6, [&] {
    double err = 0.0;
    std::size_t n = 0;
    for (int c = 0; c < 50; ++c) {
      const ShellCase sc = random_shell_case(rng);
      const ShellResponse r = shell_response(shell_input(sc.ref, sc.cur, sc.T, sc.model), sc.params);
      const double dpsi = five_point(
          [&](double T) { return shell_energy(shell_input(sc.ref, sc.cur, T, sc.model), sc.params).W / sc.params.rho0s; },
          sc.T, 1e-2);
      err = std::fmax(err, relative_error(r.s, -dpsi));
      ++n;
    }
    return std::pair{n, err};
  });

  ctx.check("frame_indifference", "sigma(Q F) = Q sigma(F) Q^T, S(Q F) = S(F), psi(Q F) = psi(F)", 0, 1e-12, [&] {
    double err = 0.0;
    std::size_t n = 0;
    for (int c = 0; c < 100; ++c) {
      const VolumeCase vc = random_volume_case(rng);
      const Mat3 q = random_rotation(rng);
      const VolumeResponse a = volume_response(vc.F, vc.T, vc.model, vc.params);
      const VolumeResponse b = volume_response(q * vc.F, vc.T, vc.model, vc.params);
      err = std::fmax(err, relative_error(b.sigma, q * a.sigma * transpose(q), 1.0));
      err = std::fmax(err, relative_error(b.S, a.S, 1.0));
      err = std::fmax(err, relative_error(b.psi, a.psi, 1.0));
      ++n;
    }
    return std::pair{n, err};
  });

  ctx.check("gamma_loc_reversible", "gamma_loc = 0 along a smooth thermoelastic process without heat flux", 0, 1e-8,
            [&] {
              double err = 0.0;
              std::size_t n = 0;
              const double h = 1e-3;
              for (int c = 0; c < 30; ++c) {
                const VolumeCase vc = random_volume_case(rng);
                Process p{random_mat3(rng, 0.1), random_mat3(rng, 0.05), vc.T, rng.uniform(-50.0, 50.0)};
                auto at = [&](double t) { return volume_response(p.F(t), p.T(t), vc.model, vc.params); };
                for (double t : {0.0, 0.3, 0.6}) {
                  const VolumeResponse r = at(t);
                  LocalProductionInput in;
                  in.rho = vc.params.rho0 / r.J;
                  in.T = p.T(t);
                  in.s_dot = five_point([&](double s) { return at(s).s; }, t, h);
                  in.u_dot = five_point([&](double s) { return at(s).u; }, t, h);
                  in.sigma = r.sigma;
                  in.l = p.F_dot(t) * inverse(p.F(t));
                  const double scale = std::fabs(in.rho * in.s_dot) + std::fabs(ddot(in.sigma, in.l)) / in.T;
                  err = std::fmax(err, std::fabs(local_production(in)) / scale);
                  ++n;
                }
              }
              return std::pair{n, err};
            },
            "error is |gamma_loc| / (|rho s_dot| + |sigma:l| / T)");

  ctx.check("gamma_con_skew", "gamma_con(k + W) = gamma_con(k) for skew W", 10, 1e-14, [&] {
    double err = 0.0;
    std::size_t n = 0;
    for (int c = 0; c < 1000; ++c) {
      const Mat3 k = random_psd3(rng);
      const Mat3 w = skew(random_mat3(rng));
      const Vec3 g = random_vec3(rng);
      const double T = rng.uniform(1.0, 1000.0);
      const double a = conductive_production(fourier_flux(k, g), g, T);
      const double b = conductive_production(fourier_flux(k + w, g), g, T);
      const double pure = conductive_production(fourier_flux(w, g), g, T);
      err = std::fmax(err, std::fmax(std::fabs(a - b), std::fabs(pure)));
      ++n;
    }
    return std::pair{n, err};
  });

  ctx.check("gamma_con_nonneg", "gamma_con >= 0 for positive semidefinite k", 10, 1e-15, [&] {
    double err = 0.0;
    std::size_t n = 0;
    for (int c = 0; c < 10000; ++c) {
      const Mat3 k = random_psd3(rng, 1 + c % 3);
      const Vec3 g = random_vec3(rng, std::exp(rng.uniform(-3.0, 3.0)));
      HeatLawParams heat;
      heat.k = k;
      const VolumeResponse r = volume_response(Mat3::identity(), rng.uniform(1.0, 1000.0), {}, {}, g, heat);
      err = std::fmax(err, -r.gamma_con);
      ++n;
    }
    return std::pair{n, err};
  },
            "error is max(-gamma_con, 0)");

  ctx.check("gamma_con_spot", "k = 1, |grad T| = 1, T = 300 gives gamma_con = 1/90000", 10, 1e-14, [&] {
    double err = 0.0;
    std::size_t n = 0;
    for (int c = 0; c < 10; ++c) {
      const Vec3 g = random_unit(rng);
      err = std::fmax(err, relative_error(conductive_production(fourier_flux(Mat3::identity(), g), g, 300.0),
                                          1.0 / 90000.0));
      ++n;
    }
    return std::pair{n, err};
  });

  ctx.check("thermal_rate", "F_T_dot = T_dot alpha F_T against five-point FD in time", 0, 1e-8, [&] {
    double err = 0.0;
    std::size_t n = 0;
    for (int c = 0; c < 50; ++c) {
      ThermalExpansionModel m;
      m.alpha = random_sym3(rng, 1e-3);
      const double T = rng.uniform(250.0, 450.0), T_dot = rng.uniform(-10.0, 10.0);
      const Mat3 fd = (-1.0 * thermal_deformation(m, T + 2e-2 * T_dot).matrix() +
                       8.0 * thermal_deformation(m, T + 1e-2 * T_dot).matrix() -
                       8.0 * thermal_deformation(m, T - 1e-2 * T_dot).matrix() +
                       thermal_deformation(m, T - 2e-2 * T_dot).matrix()) /
                      (12.0 * 1e-2);
      err = std::fmax(err, relative_error(thermal_rate(m, T, T_dot), fd));
      ++n;
    }
    return std::pair{n, err};
  });

  ctx.check("structural_push_forward", "F_T L0 F_T^T = |F_T y0|^2 y_T (x) y_T and F_T^T L_co F_T = L0", 0, 1e-12,
            [&] {
              double err = 0.0;
              std::size_t n = 0;
              for (int c = 0; c < 100; ++c) {
                const Vec3 y0 = random_unit(rng);
                const Mat3 ft = random_spd3(rng, 0.1);
                const StructuralTensor s = structural_update(y0, ft);
                const double stretch2 = dot(ft * y0, ft * y0);
                err = std::fmax(err, relative_error(s.L_contra, stretch2 * s.LT));
                err = std::fmax(err, relative_error(transpose(ft) * s.L_co * ft, s.L0));
                err = std::fmax(err, relative_error(s.L_mixed * ft, ft * s.L0));
                ++n;
              }
              return std::pair{n, err};
            });

  ctx.check("resultant_symmetry", "sigma^ab = N^ab - b^b_g M^ga is symmetric for the constitutive response", 0,
            1e-12, [&] {
              double err = 0.0;
              std::size_t n = 0;
              for (int c = 0; c < 50; ++c) {
                const ShellCase sc = random_shell_case(rng);
                const ShellResponse r = shell_response(shell_input(sc.ref, sc.cur, sc.T, sc.model), sc.params);
                const ShellResultants res = shell_resultants(sc.cur, r.sigma, r.M);
                err = std::fmax(err, res.asymmetry / std::fmax(1.0, norm(r.sigma)));
                err = std::fmax(err, relative_error(res.sigma_recovered, r.sigma, 1.0));
                ++n;
              }
              return std::pair{n, err};
            });

  ctx.check("bending_law", "c3 = 1/2 and A = 1 give mu = -kappa", 0, 1e-14, [&] {
    double err = 0.0;
    std::size_t n = 0;
    SurfaceMaterialParams p = random_shell_params(rng);
    p.c3 = 0.5;
    for (int c = 0; c < 50; ++c) {
      ShellInput in;
      in.A = Mat2::identity();
      in.c = random_spd2(rng, 0.2);
      in.t = random_spd2(rng, 0.05);
      in.kappa = random_sym2(rng);
      in.T = p.T0;
      err = std::fmax(err, max_abs(shell_response(in, p).mu_back + in.kappa));
      ++n;
    }
    return std::pair{n, err};
  });

  ctx.check("boundary_fluxes", "radiation vanishes at T_s = T_rad_ref with unit view factor; convection at T_env",
            0, 1e-12, [&] {
              double err = 0.0;
              std::size_t n = 0;
              for (int c = 0; c < 50; ++c) {
                HeatLawParams p;
                p.emissivity = rng.uniform(0.1, 1.0);
                p.T_rad_ref = rng.uniform(200.0, 1500.0);
                p.h = rng.uniform(0.0, 100.0);
                p.T_env = rng.uniform(200.0, 500.0);
                const double scale = p.emissivity * kStefanBoltzmann * std::pow(p.T_rad_ref, 4);
                err = std::fmax(err, std::fabs(radiation_flux(p, p.T_rad_ref)) / scale);
                err = std::fmax(err, std::fabs(convection_flux(p, p.T_env)));
                const double Ts = 1.1 * p.T_rad_ref;
                err = std::fmax(err, relative_error(radiation_flux(p, Ts),
                                                    -p.emissivity * kStefanBoltzmann * (std::pow(Ts, 4) - std::pow(p.T_rad_ref, 4))));
                ++n;
              }
              return std::pair{n, err};
            });
}

}  // namespace klts
