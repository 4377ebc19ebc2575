#include "klts/tensor_core.hpp"

#include <algorithm>
#include <string>

namespace klts {

const char* to_string(Variance v) {
  switch (v) {
    case Variance::Contra: return "contra";
    case Variance::Co: return "co";
    case Variance::MixedUpDown: return "mixed-up-down";
    case Variance::MixedDownUp: return "mixed-down-up";
  }
  return "?";
}

const char* to_string(Config c) {
  switch (c) {
    case Config::Reference: return "reference";
    case Config::Intermediate: return "intermediate";
    case Config::Current: return "current";
  }
  return "?";
}

BasisTriad build_basis(const std::array<Vec3, 3>& tangents, Config config, const Tolerances& tol) {
  for (const auto& g : tangents)
    if (!all_finite(g)) fail(ErrorKind::SingularMetric, "non-finite tangent vector");
  const Mat3 rows = transpose(Mat3::from_columns(tangents));
  const double scale = max_row_norm(rows);
  const double d = det(rows);
  if (!(std::fabs(d) >= tol.singular * scale * scale * scale) || scale == 0.0)
    fail(ErrorKind::SingularMetric, "tangent triad is (nearly) linearly dependent");

  BasisTriad b;
  b.config_ = config;
  b.tangents_ = tangents;
  // Rows of the inverse of [G₁ G₂ G₃] are the duals: Gⁱ·G_j = δⁱ_j.
  const Mat3 inv = inverse(Mat3::from_columns(tangents));
  for (std::size_t i = 0; i < 3; ++i) b.duals_[i] = inv.row(i);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      b.metric_co_(i, j) = dot(tangents[i], tangents[j]);
      b.metric_contra_(i, j) = dot(b.duals_[i], b.duals_[j]);
    }
  b.metric_det_ = det(b.metric_co_);
  return b;
}

BasisTriad cartesian_basis(Config config) {
  return build_basis({Vec3::unit(0), Vec3::unit(1), Vec3::unit(2)}, config);
}

Tensor2::Tensor2(const Mat3& components, Variance variance, Config config)
    : m_(components), variance_(variance), config_(config) {
  if (!all_finite(m_)) fail(ErrorKind::InvalidArgument, "non-finite tensor components");
}

void require_compatible(const Tensor2& a, const Tensor2& b) {
  if (a.variance() != b.variance())
    fail(ErrorKind::VarianceMismatch, std::string("mixing ") + to_string(a.variance()) + " and " +
                                          to_string(b.variance()));
  if (a.config() != b.config())
    fail(ErrorKind::ConfigurationMismatch, std::string("mixing ") + to_string(a.config()) + " and " +
                                               to_string(b.config()));
}

Tensor2 operator+(const Tensor2& a, const Tensor2& b) {
  require_compatible(a, b);
  return Tensor2(a.components() + b.components(), a.variance(), a.config());
}

Tensor2 operator-(const Tensor2& a, const Tensor2& b) {
  require_compatible(a, b);
  return Tensor2(a.components() - b.components(), a.variance(), a.config());
}

Tensor2 operator*(double s, const Tensor2& a) {
  return Tensor2(s * a.components(), a.variance(), a.config());
}

Tensor2 transform_variance(const Tensor2& t, const BasisTriad& basis, Variance target) {
  if (t.config() != basis.config())
    fail(ErrorKind::ConfigurationMismatch, "tensor and basis live on different configurations");
  const Mat3& gco = basis.metric_co();
  const Mat3& gcontra = basis.metric_contra();
  const Mat3& m = t.components();
  Mat3 contra;
  switch (t.variance()) {
    case Variance::Contra: contra = m; break;
    case Variance::Co: contra = gcontra * m * gcontra; break;
    case Variance::MixedUpDown: contra = m * gcontra; break;
    case Variance::MixedDownUp: contra = gcontra * m; break;
  }
  Mat3 out;
  switch (target) {
    case Variance::Contra: out = contra; break;
    case Variance::Co: out = gco * contra * gco; break;
    case Variance::MixedUpDown: out = contra * gco; break;
    case Variance::MixedDownUp: out = gco * contra; break;
  }
  return Tensor2(out, target, t.config());
}

Mat3 assemble_cartesian(const Mat3& components, Variance v, const BasisTriad& basis) {
  const Mat3 b = basis.tangent_matrix();
  const Mat3 d = basis.dual_matrix();
  switch (v) {
    case Variance::Contra: return b * components * transpose(b);
    case Variance::Co: return d * components * transpose(d);
    case Variance::MixedUpDown: return b * components * transpose(d);
    case Variance::MixedDownUp: return d * components * transpose(b);
  }
  return {};
}

Mat3 extract_components(const Mat3& cartesian, Variance v, const BasisTriad& basis) {
  const Mat3 b = basis.tangent_matrix();
  const Mat3 d = basis.dual_matrix();
  switch (v) {
    case Variance::Contra: return transpose(d) * cartesian * d;
    case Variance::Co: return transpose(b) * cartesian * b;
    case Variance::MixedUpDown: return transpose(d) * cartesian * b;
    case Variance::MixedDownUp: return transpose(b) * cartesian * d;
  }
  return {};
}

TwoPointMap::TwoPointMap(const Mat3& m, Config domain, Config codomain, const Tolerances& tol)
    : m_(m), det_(klts::det(m)), domain_(domain), codomain_(codomain) {
  if (!all_finite(m)) fail(ErrorKind::SingularMap, "non-finite map components");
  const double scale = max_row_norm(m);
  if (scale == 0.0 || !(std::fabs(det_) >= tol.singular * scale * scale * scale))
    fail(ErrorKind::SingularMap, "two-point map is (nearly) singular");
  inv_ = klts::inverse(m);
}

TwoPointMap compose(const TwoPointMap& a, const TwoPointMap& b) {
  if (b.codomain() != a.domain())
    fail(ErrorKind::ConfigurationMismatch, "composition of maps with mismatched configurations");
  return TwoPointMap(a.matrix() * b.matrix(), b.domain(), a.codomain());
}

Tensor2 push_forward(const Tensor2& t, const TwoPointMap& f) {
  if (t.config() != f.domain())
    fail(ErrorKind::ConfigurationMismatch, std::string("push-forward of a ") + to_string(t.config()) +
                                               " tensor by a map from " + to_string(f.domain()));
  const Mat3& F = f.matrix();
  const Mat3& Fi = f.inverse();
  const Mat3& m = t.components();
  Mat3 r;
  switch (t.variance()) {
    case Variance::Contra: r = F * m * transpose(F); break;
    case Variance::Co: r = transpose(Fi) * m * Fi; break;
    case Variance::MixedUpDown: r = F * m * Fi; break;
    case Variance::MixedDownUp: r = transpose(Fi) * m * transpose(F); break;
  }
  return Tensor2(r, t.variance(), f.codomain());
}

Tensor2 pull_back(const Tensor2& t, const TwoPointMap& f) {
  if (t.config() != f.codomain())
    fail(ErrorKind::ConfigurationMismatch, std::string("pull-back of a ") + to_string(t.config()) +
                                               " tensor by a map into " + to_string(f.codomain()));
  const Mat3& F = f.matrix();
  const Mat3& Fi = f.inverse();
  const Mat3& m = t.components();
  Mat3 r;
  switch (t.variance()) {
    case Variance::Contra: r = Fi * m * transpose(Fi); break;
    case Variance::Co: r = transpose(F) * m * F; break;
    case Variance::MixedUpDown: r = Fi * m * F; break;
    case Variance::MixedDownUp: r = transpose(F) * m * transpose(Fi); break;
  }
  return Tensor2(r, t.variance(), f.domain());
}

Tensor4<3> tensor_product(const Tensor2& a, const Tensor2& b, Product kind) {
  require_compatible(a, b);
  Tensor4<3> r = tensor_product<3>(a.components(), b.components(), kind);
  r.config = a.config();
  return r;
}

Vec3 permutation_contract(const Mat3& a) {
  Vec3 r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) r[i] += permutation(i, j, k) * a(j, k);
  return r;
}

Vec3 axial_vector(const Mat3& w, const Tolerances& tol) {
  if (norm(sym(w)) > tol.skew * std::max(1.0, norm(w)))
    fail(ErrorKind::NotSkew, "spin tensor has a symmetric part");
  return 0.5 * permutation_contract(transpose(w));
}

Vec3 axial_vector(const Tensor2& w, const Tolerances& tol) { return axial_vector(w.components(), tol); }

Mat3 spin_matrix(const Vec3& wbar) {
  // W_kj = 𝔈_ijk w̄_i.
  Mat3 w;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) w(k, j) += permutation(i, j, k) * wbar[i];
  return w;
}

Tensor2 spin_from_axial(const Vec3& wbar, Config config) {
  return Tensor2(spin_matrix(wbar), Variance::MixedUpDown, config);
}

double surface_det(const Mat3& t, const Vec3& y1, const Vec3& y2, const Vec3& domain_normal,
                   const Vec3& codomain_normal, const Tolerances& tol) {
  const double n1 = norm(y1);
  const double n2 = norm(y2);
  const Vec3 c = cross(y1, y2);
  if (n1 == 0.0 || n2 == 0.0 || norm(c) <= tol.singular * n1 * n2)
    fail(ErrorKind::DegenerateProbes, "probe vectors are parallel");
  const double in_plane = 1e3 * tol.absolute;
  if (std::fabs(dot(y1, domain_normal)) > in_plane * n1 || std::fabs(dot(y2, domain_normal)) > in_plane * n2)
    fail(ErrorKind::DegenerateProbes, "probe vectors leave the domain plane");
  return dot(cross(t * y1, t * y2), codomain_normal) / dot(c, domain_normal);
}

double surface_det(const Mat3& t, const Vec3& domain_normal, const Vec3& codomain_normal,
                   const Tolerances& tol) {
  const Vec3 n = normalized(domain_normal);
  // Seed with the Cartesian axis least aligned with n.
  std::size_t k = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (std::fabs(n[i]) < std::fabs(n[k])) k = i;
  const Vec3 e = Vec3::unit(k);
  const Vec3 y1 = normalized(e - dot(e, n) * n);
  const Vec3 y2 = cross(n, y1);
  return surface_det(t, y1, y2, n, codomain_normal, tol);
}

Mat3 surface_projector(const Vec3& n) { return Mat3::identity() - outer(n, n); }

bool is_surface_tensor(const Mat3& t, const Vec3& n_in, const Vec3& n_out, const Tolerances& tol) {
  const double bound = tol.absolute * std::max(1.0, norm(t));
  return norm(t * n_in) <= bound && norm(transpose(t) * n_out) <= bound;
}

double triple_product_det(const Mat3& t, const Vec3& y1, const Vec3& y2, const Vec3& y3) {
  return dot(cross(t * y1, t * y2), t * y3) / dot(cross(y1, y2), y3);
}

}  // namespace klts
