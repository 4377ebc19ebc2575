#include "klts/constitutive.hpp"

#include <cmath>
#include <string>

#include "klts/surface_kinematics.hpp"

namespace klts {

namespace {

void require_positive_temperature(double T) {
  if (!(T > 0.0) || !std::isfinite(T)) fail(ErrorKind::NonpositiveTemperature, "temperature must be positive");
}

/// Sylvester's criterion on leading principal minors.
bool is_spd(const Mat2& a) { return a(0, 0) > 0.0 && det(a) > 0.0 && std::fabs(a(0, 1) - a(1, 0)) <= 1e-12 * norm(a); }
bool is_spd(const Mat3& a) {
  const double m2 = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  return a(0, 0) > 0.0 && m2 > 0.0 && det(a) > 0.0 && max_abs(skew(a)) <= 1e-12 * norm(a);
}

void require_symmetric(const Mat3& a, const char* what, const Tolerances& tol) {
  if (!all_finite(a) || max_abs(skew(a)) > tol.skew * std::fmax(1.0, norm(a)))
    fail(ErrorKind::InvalidArgument, std::string(what) + " must be symmetric");
}

double thermal_energy(double c1, double T, double T0) { return c1 * ((T - T0) - T * std::log(T / T0)); }

}  // namespace

void ThermalExpansionModel::validate(const Tolerances& tol) const {
  require_symmetric(alpha, "expansion tensor", tol);
  require_positive_temperature(theta0);
}

void VolumeMaterialParams::validate() const {
  if (!(mu0 > 0.0)) fail(ErrorKind::InvalidArgument, "mu0 must be positive");
  if (!(rho0 > 0.0)) fail(ErrorKind::InvalidArgument, "rho0 must be positive");
  if (!(T0 > 0.0) || !(T_ref > 0.0)) fail(ErrorKind::InvalidArgument, "reference temperatures must be positive");
  if (!std::isfinite(lambda) || !std::isfinite(c1) || !std::isfinite(c2))
    fail(ErrorKind::InvalidArgument, "material constants must be finite");
}

void SurfaceMaterialParams::validate() const {
  if (!(K > 0.0)) fail(ErrorKind::InvalidArgument, "K must be positive");
  if (!(mu_s > 0.0)) fail(ErrorKind::InvalidArgument, "mu_s must be positive");
  if (!(rho0s > 0.0)) fail(ErrorKind::InvalidArgument, "rho0s must be positive");
  if (!(T0 > 0.0)) fail(ErrorKind::InvalidArgument, "T0 must be positive");
  if (!std::isfinite(c1) || !std::isfinite(c3) || !(t0 >= 0.0))
    fail(ErrorKind::InvalidArgument, "surface constants must be finite");
}

void HeatLawParams::validate(const Tolerances& tol) const {
  if (!all_finite(k)) fail(ErrorKind::InvalidArgument, "conductivity must be finite");
  const auto e = jacobi_eigen(sym(k), tol.jacobi_off_diagonal, tol.jacobi_sweeps);
  if (e.values[2] < -tol.absolute * std::fmax(1.0, norm(k)))
    fail(ErrorKind::InvalidArgument, "sym(k) must be positive semidefinite");
  if (!(emissivity >= 0.0 && emissivity <= 1.0)) fail(ErrorKind::InvalidArgument, "emissivity must lie in [0, 1]");
  if (!(T_env > 0.0) || !(T_rad_ref > 0.0)) fail(ErrorKind::InvalidArgument, "environment temperatures must be positive");
}

TwoPointMap thermal_deformation(const ThermalExpansionModel& model, double T) {
  require_positive_temperature(T);
  model.validate();
  return TwoPointMap(sym_exp((T - model.theta0) * model.alpha), Config::Reference, Config::Intermediate);
}

Mat3 thermal_derivative(const ThermalExpansionModel& model, double T) {
  return model.alpha * thermal_deformation(model, T).matrix();
}

Mat3 thermal_rate(const ThermalExpansionModel& model, double T, double T_dot) {
  return T_dot * thermal_derivative(model, T);
}

double mu_of_T(const VolumeMaterialParams& p, double T) { return p.mu0 * std::exp(-p.c2 * (T - p.T_ref)); }

VolumeEnergy volume_energy(const Mat3& c_e, double T, const VolumeMaterialParams& p) {
  require_positive_temperature(T);
  if (!is_spd(c_e)) fail(ErrorKind::NotSPD, "elastic Cauchy-Green tensor is not SPD");
  const double ln_j = 0.5 * std::log(det(c_e));
  const double mu = mu_of_T(p, T);
  const Mat3 c_inv = inverse(c_e);
  const double shape = 0.5 * (trace(c_e) - 3.0) - ln_j;
  VolumeEnergy e;
  e.W = mu * shape + 0.5 * p.lambda * ln_j * ln_j + thermal_energy(p.c1, T, p.T0);
  e.dW_dCe = 0.5 * (mu * (Mat3::identity() - c_inv) + (p.lambda * ln_j) * c_inv);
  e.dW_dT = -p.c2 * mu * shape - p.c1 * std::log(T / p.T0);
  return e;
}

double volume_energy_of_C(const Mat3& c, double T, const ThermalExpansionModel& model,
                          const VolumeMaterialParams& p) {
  const Mat3 fti = thermal_deformation(model, T).inverse();
  return volume_energy(transpose(fti) * c * fti, T, p).W;
}

VolumeResponse volume_response(const Mat3& f, double T, const ThermalExpansionModel& model,
                               const VolumeMaterialParams& p, const Vec3& grad_T, const HeatLawParams& heat,
                               const Tolerances& tol) {
  require_positive_temperature(T);
  p.validate();
  const TwoPointMap F(f, Config::Reference, Config::Current, tol);
  if (!(F.det() > 0.0)) fail(ErrorKind::NegativeJacobian, "det F must be positive");
  const TwoPointMap FT = thermal_deformation(model, T);
  const Mat3& fti = FT.inverse();
  const Mat3 c = transpose(f) * f;
  if (!is_spd(c)) fail(ErrorKind::NotSPD, "C is not SPD");

  VolumeResponse r;
  r.C_e = transpose(fti) * c * fti;
  const VolumeEnergy e = volume_energy(r.C_e, T, p);
  r.J = F.det();
  r.J_T = FT.det();
  r.S = 2.0 * (fti * e.dW_dCe * transpose(fti));
  r.P = r.S * transpose(f);
  r.sigma = (f * r.S * transpose(f)) / r.J;
  r.S_T = (FT.matrix() * r.S * transpose(FT.matrix())) / r.J_T;

  // (F_T⁻ᵀ),_T = −F_T⁻ᵀ (F_T,_T)ᵀ F_T⁻ᵀ.
  const Mat3 dft = model.alpha * FT.matrix();
  const Mat3 d_inv_t = -1.0 * (transpose(fti) * transpose(dft) * transpose(fti));
  r.H = d_inv_t * c * fti;
  r.s = -(e.dW_dT + ddot(e.dW_dCe, r.H + transpose(r.H))) / p.rho0;
  r.psi = e.W / p.rho0;
  r.u = r.psi + T * r.s;
  r.q = fourier_flux(heat.k, grad_T);
  r.gamma_con = conductive_production(r.q, grad_T, T);
  return r;
}

Vec3 fourier_flux(const Mat3& k, const Vec3& grad_T) { return -1.0 * (k * grad_T); }

double radiation_flux(const HeatLawParams& p, double T_s) {
  require_positive_temperature(T_s);
  const double es = p.emissivity * kStefanBoltzmann;
  return -es * std::pow(T_s, 4) + p.geometry_factor * es * std::pow(p.T_rad_ref, 4);
}

double convection_flux(const HeatLawParams& p, double T) {
  require_positive_temperature(T);
  return -p.h * (T - p.T_env);
}

double conductive_production(const Vec3& q, const Vec3& grad_T, double T) {
  require_positive_temperature(T);
  return -dot(q, grad_T) / (T * T);
}

double local_production(const LocalProductionInput& in) {
  require_positive_temperature(in.T);
  const double power = ddot(transpose(in.sigma), in.l) + in.div_spin_couple + in.rho * dot(in.body_couple, in.wbar);
  return in.rho * in.s_dot - in.rho * in.u_dot / in.T + power / in.T;
}

EntropyProduction entropy_production(const LocalProductionInput& in, const Vec3& q, const Vec3& grad_T) {
  return {local_production(in), conductive_production(q, grad_T, in.T)};
}

StructuralTensor structural_update(const Vec3& y0, const Mat3& f_t, const Tolerances& tol) {
  if (!all_finite(y0) || std::fabs(norm(y0) - 1.0) > 1e-10)
    fail(ErrorKind::InvalidArgument, "preferred direction must be a unit vector");
  if (!(det(f_t) > 0.0)) fail(ErrorKind::NegativeJacobian, "det F_T must be positive");
  const TwoPointMap ft(f_t, Config::Reference, Config::Intermediate, tol);
  StructuralTensor s;
  s.y0 = y0;
  s.yT = normalized(f_t * y0);
  s.L0 = outer(y0, y0);
  s.LT = outer(s.yT, s.yT);
  s.L_contra = push_forward(Tensor2(s.L0, Variance::Contra, Config::Reference), ft).components();
  s.L_co = push_forward(Tensor2(s.L0, Variance::Co, Config::Reference), ft).components();
  s.L_mixed = push_forward(Tensor2(s.L0, Variance::MixedUpDown, Config::Reference), ft).components();
  return s;
}

// ---- shells ----------------------------------------------------------------

ShellEnergy shell_energy(const ShellInput& in, const SurfaceMaterialParams& p) {
  require_positive_temperature(in.T);
  if (!is_spd(in.c)) fail(ErrorKind::NotSPD, "current surface metric is not SPD");
  if (!is_spd(in.t)) fail(ErrorKind::NotSPD, "intermediate surface metric is not SPD");
  if (!is_spd(in.A)) fail(ErrorKind::NotSPD, "reference surface metric is not SPD");
  const Mat2 c_inv = inverse(in.c);
  const Mat2 t_inv = inverse(in.t);
  const Mat2 a_inv = inverse(in.A);

  ShellEnergy e;
  e.J = std::sqrt(det(in.c) / det(in.t));
  e.tr = ddot(in.c, t_inv);
  const double J = e.J;
  const double mu = p.mu_s;
  const Mat2 kappa_up = a_inv * in.kappa * a_inv;
  e.W = 0.25 * p.K * (J * J - 1.0 - 2.0 * std::log(J)) + 0.5 * mu * (e.tr / J - 2.0) +
        p.c3 * ddot(in.kappa, kappa_up) + thermal_energy(p.c1, in.T, p.T0);
  // ∂J/∂c = (J/2) c⁻¹, ∂J/∂t = −(J/2) t⁻¹, ∂tr/∂c = t⁻¹, ∂tr/∂t = −t⁻¹ c t⁻¹.
  const double dW_dJ = 0.25 * p.K * (2.0 * J - 2.0 / J) - 0.5 * mu * e.tr / (J * J);
  const double dW_dtr = 0.5 * mu / J;
  e.dW_dc = (0.5 * J * dW_dJ) * c_inv + dW_dtr * t_inv;
  e.dW_dt = (-0.5 * J * dW_dJ) * t_inv - dW_dtr * (t_inv * in.c * t_inv);
  e.dW_dkappa = (2.0 * p.c3) * kappa_up;
  e.dW_dT = -p.c1 * std::log(in.T / p.T0);
  return e;
}

ShellResponse shell_response(const ShellInput& in, const SurfaceMaterialParams& p) {
  p.validate();
  const ShellEnergy e = shell_energy(in, p);
  ShellResponse r;
  r.W = e.W;
  r.J_se = e.J;
  r.J_s = std::sqrt(det(in.c) / det(in.A));
  r.sigma_back = 2.0 * e.dW_dc;
  r.mu_back = -1.0 * e.dW_dkappa;
  r.sigma = r.sigma_back / r.J_s;
  r.M = e.dW_dkappa / r.J_s;
  // dW/dT along fixed c, b: t and b_T move with T, κ = b − b_T.
  const double dW_dT_total = ddot(e.dW_dt, in.dt_dT) - ddot(e.dW_dkappa, in.db_T_dT) + e.dW_dT;
  r.s = -dW_dT_total / p.rho0s;
  r.psi = e.W / p.rho0s;
  r.u = r.psi + in.T * r.s;
  return r;
}

Mat3 shell_thermal_map(const SurfaceThermalModel& model, double T) {
  return thermal_deformation(model.in_plane, T).matrix();
}

double shell_thickness_stretch(const SurfaceThermalModel& model, double T) {
  require_positive_temperature(T);
  return std::exp(model.alpha3 * (T - model.in_plane.theta0));
}

Mat2 intermediate_metric(const SurfacePointFrame& ref, const Mat3& m) {
  const Vec3 a0 = m * ref.a[0];
  const Vec3 a1 = m * ref.a[1];
  Mat2 t;
  t(0, 0) = dot(a0, a0);
  t(0, 1) = t(1, 0) = dot(a0, a1);
  t(1, 1) = dot(a1, a1);
  return t;
}

Mat2 intermediate_metric_rate(const SurfacePointFrame& ref, const SurfaceThermalModel& model, double T) {
  // M = exp(αΔT) commutes with α, so d(MᵀM)/dT = 2 M α M.
  const Mat3 m = shell_thermal_map(model, T);
  const Mat3 d = 2.0 * (m * model.in_plane.alpha * m);
  return reference_components(ref, d);
}

Mat3 shell_thermal_deformation(const SurfacePointFrame& ref, const SurfaceThermalModel& model, double T) {
  const Mat3 m = shell_thermal_map(model, T);
  const Vec3 n_t = normalized(cross(m * ref.a[0], m * ref.a[1]));
  return m * surface_projector(ref.n) + shell_thickness_stretch(model, T) * outer(n_t, ref.n);
}

ShellInput shell_input(const SurfacePointFrame& ref, const SurfacePointFrame& cur, double T,
                       const SurfaceThermalModel& model) {
  require_positive_temperature(T);
  ShellInput in;
  in.T = T;
  in.A = ref.a_co;
  in.c = cur.a_co;
  const Mat3 m = shell_thermal_map(model, T);
  in.t = intermediate_metric(ref, m);
  in.kappa = cur.b_co - intermediate_curvature_from_map(ref, m);
  in.dt_dT = intermediate_metric_rate(ref, model, T);
  const double h = 1e-5 * model.in_plane.theta0;
  in.db_T_dT = (intermediate_curvature_from_map(ref, shell_thermal_map(model, T + h)) -
                intermediate_curvature_from_map(ref, shell_thermal_map(model, T - h))) /
               (2.0 * h);
  return in;
}

ShellResultants shell_resultants(const SurfacePointFrame& cur, const Mat2& sigma, const Mat2& M) {
  Mat2 bend;  // b^β_γ Mᵞᵅ stored at (α, β)
  for (std::size_t al = 0; al < 2; ++al)
    for (std::size_t be = 0; be < 2; ++be)
      for (std::size_t g = 0; g < 2; ++g) bend(al, be) += cur.b_mixed(be, g) * M(g, al);
  ShellResultants r;
  r.N = sigma + bend;
  r.sigma_recovered = r.N - bend;
  r.asymmetry = max_abs(r.sigma_recovered - transpose(r.sigma_recovered));
  return r;
}

Mat3 kirchhoff_love_stress_transpose(const SurfacePointFrame& cur, const Mat2& N, const Vec2& S) {
  Mat3 s;
  for (std::size_t al = 0; al < 2; ++al) {
    for (std::size_t be = 0; be < 2; ++be) s += N(al, be) * outer(cur.a[be], cur.a[al]);
    s += S[al] * outer(cur.n, cur.a[al]);
  }
  return s;
}

BoundaryMoments boundary_moments(const Mat2& M, const Vec2& nu_co, const Vec2& tau_co) {
  BoundaryMoments b;
  for (std::size_t al = 0; al < 2; ++al)
    for (std::size_t be = 0; be < 2; ++be) {
      b.m_nu += M(al, be) * nu_co[al] * nu_co[be];
      b.m_tau += M(al, be) * nu_co[al] * tau_co[be];
    }
  return b;
}

}  // namespace klts
