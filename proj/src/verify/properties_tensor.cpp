#include <cmath>

#include "klts/tensor_core.hpp"
#include "klts/verify/oracles.hpp"
#include "klts/verify/suite.hpp"
#include "klts/volume_kinematics.hpp"

namespace klts {

namespace {

constexpr Variance kVariances[] = {Variance::Contra, Variance::Co, Variance::MixedUpDown, Variance::MixedDownUp};

BasisTriad random_basis(SplitMix64& rng, Config cfg) {
  const Mat3 g = random_deformation(rng, 0.3);
  return build_basis({g.column(0), g.column(1), g.column(2)}, cfg);
}

}  // namespace

void register_tensor_properties(PropertyContext& ctx) {
  auto& rng = ctx.rng();

  ctx.check("push_pull_roundtrip", "pull_back(push_forward(T, F), F) = T for all four variances", 1, 1e-12, [&] {
    double err = 0.0;
    std::size_t n = 0;
    for (int c = 0; c < 200; ++c) {
      const TwoPointMap f(random_deformation(rng), Config::Reference, Config::Current);
      const Mat3 m = random_mat3(rng);
      for (Variance v : kVariances) {
        const Tensor2 t(m, v, Config::Reference);
        err = std::fmax(err, max_abs(pull_back(push_forward(t, f), f).components() - m));
        const Tensor2 s(m, v, Config::Current);
        err = std::fmax(err, max_abs(push_forward(pull_back(s, f), f).components() - m));
        ++n;
      }
    }
    return std::pair{n, err};
  });

  ctx.check("push_forward_components", "push-forward keeps curvilinear components: g_i = F G_i", 0, 1e-12, [&] {
    double err = 0.0;
    std::size_t n = 0;
    for (int c = 0; c < 100; ++c) {
      const BasisTriad ref = random_basis(rng, Config::Reference);
      const Mat3 F = random_deformation(rng);
      const TwoPointMap f(F, Config::Reference, Config::Current);
      const BasisTriad cur =
          build_basis({F * ref.covariant(0), F * ref.covariant(1), F * ref.covariant(2)}, Config::Current);
      const Mat3 m = random_mat3(rng);
      for (Variance v : kVariances) {
        const Tensor2 t(assemble_cartesian(m, v, ref), v, Config::Reference);
        const Mat3 back = extract_components(push_forward(t, f).components(), v, cur);
        err = std::fmax(err, max_abs(back - m) / std::fmax(1.0, max_abs(m)));
        ++n;
      }
    }
    return std::pair{n, err};
  });

  ctx.check("metric_compatibility", "F^T 1 F has reference components g_ij; F^-T 1 F^-1 has current components G_ij",
            0, 1e-12, [&] {
              double err = 0.0;
              std::size_t n = 0;
              for (int c = 0; c < 100; ++c) {
                const BasisTriad ref = random_basis(rng, Config::Reference);
                const Mat3 F = random_deformation(rng);
                const TwoPointMap f(F, Config::Reference, Config::Current);
                const BasisTriad cur = build_basis(
                    {F * ref.covariant(0), F * ref.covariant(1), F * ref.covariant(2)}, Config::Current);
                const Mat3 pulled =
                    pull_back(Tensor2(Mat3::identity(), Variance::Co, Config::Current), f).components();
                err = std::fmax(err, relative_error(extract_components(pulled, Variance::Co, ref), cur.metric_co()));
                const Mat3 pushed =
                    push_forward(Tensor2(Mat3::identity(), Variance::Co, Config::Reference), f).components();
                err = std::fmax(err, relative_error(extract_components(pushed, Variance::Co, cur), ref.metric_co()));
                ++n;
              }
              return std::pair{n, err};
            });

  ctx.check("variance_roundtrip", "index raising/lowering is invertible and basis independent", 0, 1e-12, [&] {
    double err = 0.0;
    std::size_t n = 0;
    for (int c = 0; c < 100; ++c) {
      const BasisTriad b = random_basis(rng, Config::Reference);
      const Mat3 m = random_mat3(rng);
      for (Variance v : kVariances) {
        const Tensor2 t(m, v, Config::Reference);
        const Mat3 x = assemble_cartesian(m, v, b);
        for (Variance w : kVariances) {
          const Tensor2 u = transform_variance(t, b, w);
          err = std::fmax(err, relative_error(transform_variance(u, b, v).components(), m));
          err = std::fmax(err, relative_error(assemble_cartesian(u.components(), w, b), x));
          ++n;
        }
      }
    }
    return std::pair{n, err};
  });

  ctx.check("axial_vector", "W u = w x u and axial(spin(w)) = w", 0, 1e-13, [&] {
    double err = 0.0;
    std::size_t n = 0;
    for (int c = 0; c < 200; ++c) {
      const Vec3 w = random_vec3(rng);
      const Vec3 u = random_vec3(rng);
      const Mat3 W = spin_matrix(w);
      err = std::fmax(err, max_abs(axial_vector(W) - w) / std::fmax(1.0, norm(w)));
      err = std::fmax(err, max_abs(W * u - cross(w, u)) / std::fmax(1.0, norm(w) * norm(u)));
      err = std::fmax(err, max_abs(permutation_contract(outer(w, u)) - cross(w, u)) / std::fmax(1.0, norm(w) * norm(u)));
      ++n;
    }
    return std::pair{n, err};
  });

  ctx.check("surface_det_probes", "surface determinant is probe independent and equals J |F^-T N|", 0, 1e-11, [&] {
    double err = 0.0;
    std::size_t n = 0;
    while (n < 100) {
      const Vec3 N = random_unit(rng);
      const Mat3 F = random_deformation(rng);
      const Mat3 p = surface_projector(N);
      const Vec3 m = transpose(inverse(F)) * N;
      const Vec3 nn = normalized(m);
      const Mat3 t = F * p;
      const Vec3 y1 = p * random_vec3(rng), y2 = p * random_vec3(rng);
      if (norm(cross(y1, y2)) < 0.1 * norm(y1) * norm(y2)) continue;
      const double expected = det(F) * norm(m);
      err = std::fmax(err, relative_error(surface_det(t, y1, y2, N, nn), expected));
      err = std::fmax(err, relative_error(surface_det(t, N, nn), expected));
      ++n;
    }
    return std::pair{n, err};
  });

  ctx.check("jacobi_reconstruction", "V diag(lambda) V^T = A and V^T V = 1", 0, 1e-12, [&] {
    double err = 0.0;
    std::size_t n = 0;
    for (int c = 0; c < 200; ++c) {
      const Mat3 a = random_sym3(rng);
      const auto e = jacobi_eigen(a);
      err = std::fmax(err, relative_error(e.vectors * Mat3::diagonal(e.values) * transpose(e.vectors), a));
      err = std::fmax(err, max_abs(transpose(e.vectors) * e.vectors - Mat3::identity()));
      if (!(e.values[0] >= e.values[1] && e.values[1] >= e.values[2])) err = 1.0;
      ++n;
    }
    return std::pair{n, err};
  });

  ctx.check("seth_hill_spectral", "exp(2 E0) = C, (E1 + 1)^2 = C and E2 = (C - 1)/2, Lagrangian and Eulerian", 0,
            1e-12, [&] {
              double err = 0.0;
              std::size_t n = 0;
              for (int c = 0; c < 100; ++c) {
                const Mat3 F = random_deformation(rng);
                const TwoPointMap f(F, Config::Reference, Config::Current);
                for (StrainFrame fr : {StrainFrame::Lagrangian, StrainFrame::Eulerian}) {
                  const Mat3 C = fr == StrainFrame::Lagrangian ? transpose(F) * F : F * transpose(F);
                  const Mat3 e0 = seth_hill(f, 0.0, fr).value.components();
                  const Mat3 e1 = seth_hill(f, 1.0, fr).value.components();
                  const Mat3 e2 = seth_hill(f, 2.0, fr).value.components();
                  const Mat3 u = e1 + Mat3::identity();
                  err = std::fmax(err, relative_error(sym_exp(2.0 * e0), C));
                  err = std::fmax(err, relative_error(u * u, C));
                  err = std::fmax(err, relative_error(e2, 0.5 * (C - Mat3::identity())));
                  ++n;
                }
              }
              return std::pair{n, err};
            });

  ctx.check("hencky_coaxial_log", "coaxial stretches: ln U(F2 F1) = ln U1 + ln U2", 9, 1e-10, [&] {
    double err = 0.0;
    std::size_t n = 0;
    for (int c = 0; c < 50; ++c) {
      const Mat3 q = random_rotation(rng);
      auto stretch = [&] {
        const Vec3 d{{std::exp(0.3 * rng.normal()), std::exp(0.3 * rng.normal()), std::exp(0.3 * rng.normal())}};
        return sym(q * Mat3::diagonal(d) * transpose(q));
      };
      const TwoPointMap f1(stretch(), Config::Reference, Config::Intermediate);
      const TwoPointMap f2(stretch(), Config::Intermediate, Config::Current);
      const HenckyReport r = hencky_additivity_check(f1, f2, {0.0});
      err = std::fmax(err, r.entries.at(0).additive_defect);
      ++n;
    }
    return std::pair{n, err};
  });

  ctx.check("hencky_composition_n2",
            "E2(F2 F1) = F1^T E2(F2) F1 + E2(F1); the additive defect is nonzero and equals the transport term", 9,
            1e-12, [&] {
              double err = 0.0;
              std::size_t n = 0;
              for (int c = 0; c < 50; ++c) {
                const TwoPointMap f1(random_deformation(rng), Config::Reference, Config::Intermediate);
                const TwoPointMap f2(random_deformation(rng), Config::Intermediate, Config::Current);
                const HenckyReport r = hencky_additivity_check(f1, f2, {2.0});
                const HenckyEntry& e = r.entries.at(0);
                if (!e.composition_residual || !e.predicted_defect || e.additive_defect < 1e-6)
                  return std::pair<std::size_t, double>{n, std::numeric_limits<double>::infinity()};
                err = std::fmax(err, *e.composition_residual);
                err = std::fmax(err, std::fabs(e.additive_defect - *e.predicted_defect));
                ++n;
              }
              return std::pair{n, err};
            });
}

}  // namespace klts
