#include "klts/volume_kinematics.hpp"

#include <algorithm>
#include <cmath>

namespace klts {

BasisTriad chart_basis(const VolumeChart& chart, const Vec3& xi, Config config, const Tolerances& tol) {
  return build_basis(chart.eval(xi).d, config, tol);
}

BasisDerivatives basis_derivatives(const VolumeChart& chart, const Vec3& xi, const Tolerances& tol) {
  const VolumeJet jet = chart.eval(xi);
  const BasisTriad b = build_basis(jet.d, Config::Reference, tol);
  BasisDerivatives out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 3; ++k) out.tangent[i][k] = jet.dd[i][k];
  for (std::size_t k = 0; k < 3; ++k) {
    Mat3 dg;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        dg(i, j) = dot(jet.dd[i][k], jet.d[j]) + dot(jet.d[i], jet.dd[j][k]);
    out.metric_co[k] = dg;
    // [Gⁱʲ],k = −Gⁱᵃ [G_ab],k Gᵇʲ.
    out.metric_contra[k] = -1.0 * (b.metric_contra() * dg * b.metric_contra());
  }
  // Gⁱ = Gⁱʲ G_j, so Gⁱ,k = Gⁱʲ,k G_j + Gⁱʲ G_j,k.
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 3; ++k) {
      Vec3 v;
      for (std::size_t j = 0; j < 3; ++j)
        v += out.metric_contra[k](i, j) * jet.d[j] + b.metric_contra()(i, j) * jet.dd[j][k];
      out.dual[i][k] = v;
    }
  return out;
}

ChristoffelField christoffel(const VolumeChart& chart, const Vec3& xi, const Tolerances& tol) {
  const VolumeJet jet = chart.eval(xi);
  const BasisTriad b = build_basis(jet.d, Config::Reference, tol);
  ChristoffelField g;
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) g.gamma[k](i, j) = dot(jet.dd[i][j], b.contravariant(k));
  return g;
}

Mat3 covariant_derivative_contra(const Vec3& u, const Mat3& du, const ChristoffelField& g) {
  Mat3 r = du;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) r(i, j) += u[k] * g(i, k, j);
  return r;
}

Mat3 covariant_derivative_co(const Vec3& u, const Mat3& du, const ChristoffelField& g) {
  Mat3 r = du;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) r(i, j) -= u[k] * g(k, i, j);
  return r;
}

std::array<Mat3, 3> covariant_derivative_co(const Mat3& u, const std::array<Mat3, 3>& du,
                                            const ChristoffelField& g) {
  std::array<Mat3, 3> r = du;
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t l = 0; l < 3; ++l) r[k](i, j) -= u(l, j) * g(l, i, k) + u(i, l) * g(l, j, k);
  return r;
}

std::array<Mat3, 3> covariant_derivative_contra(const Mat3& u, const std::array<Mat3, 3>& du,
                                                const ChristoffelField& g) {
  std::array<Mat3, 3> r = du;
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t l = 0; l < 3; ++l) r[k](i, j) += u(l, j) * g(i, l, k) + u(i, l) * g(j, l, k);
  return r;
}

std::array<std::array<Vec3, 3>, 3> tangent_covariant_derivative(const BasisTriad& b,
                                                                const std::array<std::array<Vec3, 3>, 3>& dg,
                                                                const ChristoffelField& g) {
  auto r = dg;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t l = 0; l < 3; ++l) r[i][j] -= g(l, i, j) * b.covariant(l);
  return r;
}

std::array<std::array<Vec3, 3>, 3> dual_covariant_derivative(const BasisTriad& b,
                                                             const std::array<std::array<Vec3, 3>, 3>& dg,
                                                             const ChristoffelField& g) {
  auto r = dg;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t l = 0; l < 3; ++l) r[i][j] += g(i, l, j) * b.contravariant(l);
  return r;
}

double RicciResiduals::max() const { return std::max({metric_co, metric_contra, tangent, dual}); }

RicciResiduals ricci_residuals(const BasisTriad& b, const BasisDerivatives& d, const ChristoffelField& g) {
  RicciResiduals r;
  for (const auto& m : covariant_derivative_co(b.metric_co(), d.metric_co, g))
    r.metric_co = std::max(r.metric_co, max_abs(m));
  for (const auto& m : covariant_derivative_contra(b.metric_contra(), d.metric_contra, g))
    r.metric_contra = std::max(r.metric_contra, max_abs(m));
  for (const auto& row : tangent_covariant_derivative(b, d.tangent, g))
    for (const auto& v : row) r.tangent = std::max(r.tangent, max_abs(v));
  for (const auto& row : dual_covariant_derivative(b, d.dual, g))
    for (const auto& v : row) r.dual = std::max(r.dual, max_abs(v));
  return r;
}

TwoPointMap deformation_gradient(const VolumeChart& ref, const VolumeChart& cur, const Vec3& xi,
                                 const Tolerances& tol) {
  const BasisTriad gref = chart_basis(ref, xi, Config::Reference, tol);
  const BasisTriad gcur = chart_basis(cur, xi, Config::Current, tol);
  Mat3 f;
  for (std::size_t i = 0; i < 3; ++i) f += outer(gcur.covariant(i), gref.contravariant(i));
  if (!(det(f) > 0.0)) fail(ErrorKind::NegativeJacobian, "deformation gradient has det F <= 0");
  return TwoPointMap(f, Config::Reference, Config::Current, tol);
}

VolumeState thermo_split(const TwoPointMap& f, const TwoPointMap& f_t) {
  if (f.domain() != f_t.domain())
    fail(ErrorKind::ConfigurationMismatch, "F and F_T must share the reference configuration");
  if (!(f_t.det() > 0.0)) fail(ErrorKind::NegativeJacobian, "thermal map has det F_T <= 0");
  if (!(f.det() > 0.0)) fail(ErrorKind::NegativeJacobian, "deformation gradient has det F <= 0");
  const TwoPointMap fe(f.matrix() * f_t.inverse(), f_t.codomain(), f.codomain());
  const Mat3& F = f.matrix();
  const Mat3& Ft = f_t.matrix();
  const Mat3& Fe = fe.matrix();
  return VolumeState{f,
                     f_t,
                     fe,
                     Tensor2(transpose(F) * F, Variance::Co, f.domain()),
                     Tensor2(transpose(Ft) * Ft, Variance::Co, f.domain()),
                     Tensor2(transpose(Fe) * Fe, Variance::Co, f_t.codomain()),
                     f.det(),
                     f_t.det(),
                     std::nullopt};
}

VelocityGradients velocity_gradient(const TwoPointMap& f, const Mat3& f_dot, const TwoPointMap& f_t,
                                    const Mat3& f_t_dot, const Tolerances& tol) {
  if (!(f.det() > 0.0) || !(f_t.det() > 0.0))
    fail(ErrorKind::NegativeJacobian, "velocity gradient needs det F > 0 and det F_T > 0");
  VelocityGradients v;
  v.l = f_dot * f.inverse();
  v.d = sym(v.l);
  v.w = skew(v.l);
  v.wbar = axial_vector(v.w, tol);
  const Mat3 fti = f_t.inverse();
  const Mat3 fe = f.matrix() * fti;
  const Mat3 fe_dot = f_dot * fti - fe * f_t_dot * fti;
  v.l_e = fe_dot * inverse(fe);
  v.l_T = f_t_dot * fti;
  return v;
}

Vec3 nanson(const TwoPointMap& f, const Vec3& normal, double ds) {
  if (!(f.det() > 0.0)) fail(ErrorKind::NegativeJacobian, "Nanson transport needs det F > 0");
  return (f.det() * ds) * (transpose(f.inverse()) * normal);
}

SethHillStrain seth_hill(const TwoPointMap& f, double n, StrainFrame frame, const Tolerances& tol) {
  const Mat3& F = f.matrix();
  const Mat3 c = frame == StrainFrame::Lagrangian ? transpose(F) * F : F * transpose(F);
  const Config cfg = frame == StrainFrame::Lagrangian ? f.domain() : f.codomain();
  const auto eig = jacobi_eigen(c, tol.jacobi_off_diagonal, tol.jacobi_sweeps);
  if (!(eig.values[2] > 0.0)) fail(ErrorKind::NotSPD, "stretch tensor is not positive definite");
  Mat3 e;
  if (n == 2.0) {
    e = 0.5 * (c - Mat3::identity());
  } else {
    const bool log_branch = std::fabs(n) < tol.log_branch;
    for (std::size_t k = 0; k < 3; ++k) {
      const double ln_stretch = 0.5 * std::log(eig.values[k]);
      const double value = log_branch ? ln_stretch : std::expm1(n * ln_stretch) / n;
      const Vec3 v = eig.vectors.column(k);
      e += value * outer(v, v);
    }
  }
  return SethHillStrain{n, Tensor2(sym(e), Variance::Co, cfg), frame};
}

namespace {

/// Aᵖ for real p: integer powers directly, otherwise through the spectrum of a
/// symmetric positive definite A. Empty when neither applies.
std::optional<Mat3> real_power(const Mat3& a, double p, const Tolerances& tol) {
  const double rounded = std::round(p);
  if (std::fabs(p - rounded) < 1e-14) return power(a, static_cast<int>(rounded));
  if (norm(skew(a)) > tol.relative * std::max(1.0, norm(a))) return std::nullopt;
  const auto eig = jacobi_eigen(sym(a), tol.jacobi_off_diagonal, tol.jacobi_sweeps);
  if (!(eig.values[2] > 0.0)) return std::nullopt;
  return spectral_function<3>(sym(a), [p](double x) { return std::pow(x, p); });
}

}  // namespace

HenckyReport hencky_additivity_check(const TwoPointMap& f1, const TwoPointMap& f2,
                                     const std::vector<double>& orders, const Tolerances& tol) {
  const TwoPointMap f21(f2.matrix() * f1.matrix(), f1.domain(), f2.codomain(), tol);
  const auto stretch = [&](const TwoPointMap& f) {
    const Mat3 c = transpose(f.matrix()) * f.matrix();
    const auto eig = jacobi_eigen(c, tol.jacobi_off_diagonal, tol.jacobi_sweeps);
    if (!(eig.values[2] > 0.0)) fail(ErrorKind::NotSPD, "stretch tensor is not positive definite");
    return spectral_function<3>(c, [](double x) { return std::sqrt(x); });
  };
  const Mat3 u1 = stretch(f1);
  const Mat3 u2 = stretch(f2);
  HenckyReport report;
  report.commutator = norm(u1 * u2 - u2 * u1);
  report.coaxial = report.commutator <= tol.relative * std::max(1.0, norm(u1) * norm(u2));
  for (double n : orders) {
    const Mat3 e1 = seth_hill(f1, n, StrainFrame::Lagrangian, tol).value.components();
    const Mat3 e2 = seth_hill(f2, n, StrainFrame::Lagrangian, tol).value.components();
    const Mat3 e21 = seth_hill(f21, n, StrainFrame::Lagrangian, tol).value.components();
    HenckyEntry entry{n, norm(e21 - e1 - e2), std::nullopt, std::nullopt};
    const double half = std::fabs(n) < tol.log_branch ? 0.0 : 0.5 * n;
    if (const auto p = real_power(f1.matrix(), half, tol)) {
      const Mat3 transported = transpose(*p) * e2 * *p;
      entry.predicted_defect = norm(transported - e2);
      entry.composition_residual = norm(e21 - (transported + e1));
    }
    report.entries.push_back(entry);
  }
  return report;
}

}  // namespace klts
