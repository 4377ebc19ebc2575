#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <tuple>

#include "cli/cli.hpp"
#include "klts/error.hpp"
#include "klts/surface_geometry.hpp"
#include "klts/verify/oracles.hpp"
#include "klts/volume_kinematics.hpp"

namespace klts::cli {

namespace {

struct ScenarioOutput {
  CsvWriter csv;
  Json summary;
  bool pass = false;
};

using Scenario = std::function<ScenarioOutput(const Json&)>;

Json null_or(const Json& config, const char* key) { return config.contains(key) ? config.at(key) : Json(); }

/// Evenly spaced grid of interior points of a rectangle, row-major.
std::vector<Vec2> grid_points(const Rect2& r, int n) {
  std::vector<Vec2> pts;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const double u = (i + 0.5) / n, v = (k + 0.5) / n;
      pts.push_back(Vec2{{r.lo[0] + u * (r.hi[0] - r.lo[0]), r.lo[1] + v * (r.hi[1] - r.lo[1])}});
    }
  return pts;
}

ScenarioOutput thermal_expansion_zero_stress(const Json& config) {
  const std::string where = "thermal-expansion-zero-stress";
  require_keys(config, {"thermal", "alpha3", "dT_max", "steps", "volume_material", "shell_material", "chart",
                        "grid", "tolerance"},
               where);
  ThermalExpansionModel model = parse_thermal_model(null_or(config, "thermal"), where + ".thermal");
  if (!config.contains("thermal") || !config.at("thermal").contains("alpha")) model.alpha = 1e-3 * Mat3::identity();
  SurfaceThermalModel shell_model{model, get_number(config, "alpha3", 0.0, where)};
  const double dT_max = get_number(config, "dT_max", 200.0, where);
  const int steps = get_int(config, "steps", 20, where);
  if (steps < 2) fail(ErrorKind::ConfigInvalid, where + ": 'steps' must be at least 2");
  const VolumeMaterialParams vp = parse_volume_material(null_or(config, "volume_material"), where + ".volume_material");
  const SurfaceMaterialParams sp = parse_surface_material(null_or(config, "shell_material"), where + ".shell_material");
  const SurfaceChartPtr ref_chart = config.contains("chart")
                                        ? parse_surface_chart(config.at("chart"), where + ".chart")
                                        : sphere_chart(1.0, Rect2{Vec2{{0.5, 0.0}}, Vec2{{2.5, 3.0}}});
  const int grid = get_int(config, "grid", 3, where);
  const double tol = get_number(config, "tolerance", 1e-12, where);
  const double shell_scale = std::fmax(sp.K, std::fmax(sp.mu_s, sp.c3));

  ScenarioOutput o{CsvWriter({"step", "T", "dT", "volume_S_norm_over_mu0", "shell_sigma_norm_over_scale",
                              "shell_mu_norm_over_scale"}),
                   {}, true};
  double max_vol = 0.0, max_shell = 0.0;
  for (int k = 0; k < steps; ++k) {
    const double dT = dT_max * k / (steps - 1);
    const double T = model.theta0 + dT;
    const Mat3 ft = thermal_deformation(model, T).matrix();
    const double vol = norm(volume_response(ft, T, model, vp).S) / vp.mu0;
    const SurfaceChartPtr cur_chart = transformed_surface_chart(ref_chart, shell_thermal_map(shell_model, T));
    double sig = 0.0, mu = 0.0;
    for (const Vec2& xi : grid_points(ref_chart->domain(), grid)) {
      const SurfacePointFrame ref = frame(*ref_chart, xi, Config::Reference);
      const SurfacePointFrame cur = frame(*cur_chart, xi, Config::Current);
      const ShellResponse r = shell_response(shell_input(ref, cur, T, shell_model), sp);
      sig = std::fmax(sig, norm(r.sigma_back) / shell_scale);
      mu = std::fmax(mu, norm(r.mu_back) / shell_scale);
    }
    o.csv.row_numbers({static_cast<double>(k), T, dT, vol, sig, mu});
    max_vol = std::fmax(max_vol, vol);
    max_shell = std::fmax(max_shell, std::fmax(sig, mu));
  }
  o.pass = max_vol <= tol && max_shell <= tol;
  o.summary = {{"max_volume_S_norm_over_mu0", max_vol}, {"max_shell_norm_over_scale", max_shell}, {"tolerance", tol}};
  return o;
}

ScenarioOutput sphere_curvature(const Json& config) {
  const std::string where = "sphere-curvature";
  require_keys(config, {"radii", "grid", "fd_step", "tolerance"}, where);
  const std::vector<double> radii = get_numbers(config, "radii", {0.5, 1.0, 2.0, 4.0}, where);
  const int grid = get_int(config, "grid", 3, where);
  const double h = get_number(config, "fd_step", 1e-2, where);
  const double tol = get_number(config, "tolerance", 1e-8, where);
  ScenarioOutput o{CsvWriter({"radius", "theta", "phi", "abs_H_chart", "K_chart", "abs_H_fd", "K_fd",
                              "abs_H_error", "K_error"}),
                   {}, true};
  double err_h = 0.0, err_k = 0.0;
  const Rect2 dom{Vec2{{0.6, 0.0}}, Vec2{{2.5, 6.0}}};
  for (double R : radii) {
    if (!(R > 0.0)) fail(ErrorKind::ConfigInvalid, where + ": radii must be positive");
    const SurfaceChartPtr chart = sphere_chart(R, dom);
    for (const Vec2& xi : grid_points(dom, grid)) {
      const SurfacePointFrame ex = frame(*chart, xi);
      const SurfacePointFrame fd = frame_from_jet(fd_surface_jet(*chart, xi, h), xi);
      const double eh = std::fmax(std::fabs(std::fabs(ex.H) - 1.0 / R), std::fabs(std::fabs(fd.H) - 1.0 / R));
      const double ek = std::fmax(std::fabs(ex.K - 1.0 / (R * R)), std::fabs(fd.K - 1.0 / (R * R)));
      o.csv.row_numbers({R, xi[0], xi[1], std::fabs(ex.H), ex.K, std::fabs(fd.H), fd.K, eh, ek});
      err_h = std::fmax(err_h, eh);
      err_k = std::fmax(err_k, ek);
    }
  }
  o.pass = err_h <= tol && err_k <= tol;
  o.summary = {{"max_abs_H_error", err_h}, {"max_K_error", err_k}, {"tolerance", tol}};
  return o;
}

ScenarioOutput plate_bending_moment(const Json& config) {
  const std::string where = "plate-bending-moment";
  require_keys(config, {"shell_material", "kappa11", "kappa22", "tolerance"}, where);
  SurfaceMaterialParams sp;
  sp.c3 = 0.5;
  if (config.contains("shell_material")) sp = parse_surface_material(config.at("shell_material"), where + ".shell_material");
  const std::vector<double> k11 = get_numbers(config, "kappa11", {-0.4, -0.2, 0.0, 0.2, 0.4}, where);
  const double k22 = get_number(config, "kappa22", 0.0, where);
  const double tol = get_number(config, "tolerance", 1e-12, where);
  const Rect2 dom{Vec2{{-0.5, -0.5}}, Vec2{{0.5, 0.5}}};
  const SurfaceChartPtr plate = plane_chart(Vec3{}, Vec3::unit(0), Vec3::unit(1), dom);
  const SurfaceThermalModel model{ThermalExpansionModel{Mat3{}, sp.T0}, 0.0};
  ScenarioOutput o{CsvWriter({"kappa11", "kappa22", "mu11", "mu12", "mu22", "M11", "M12", "M22", "expected_mu11",
                              "expected_mu22"}),
                   {}, true};
  double err = 0.0;
  const Vec2 xi{};
  for (double k : k11) {
    // z = ½κ₁₁x² + ½κ₂₂y² has b = diag(κ₁₁, κ₂₂) and a = 𝟏 at the origin.
    const SurfaceChartPtr cur_chart = monge_chart({{2, 0, 0.5 * k}, {0, 2, 0.5 * k22}}, dom);
    const SurfacePointFrame ref = frame(*plate, xi, Config::Reference);
    const SurfacePointFrame cur = frame(*cur_chart, xi, Config::Current);
    const ShellResponse r = shell_response(shell_input(ref, cur, sp.T0, model), sp);
    const double e11 = -2.0 * sp.c3 * k, e22 = -2.0 * sp.c3 * k22;
    o.csv.row_numbers({k, k22, r.mu_back(0, 0), r.mu_back(0, 1), r.mu_back(1, 1), r.M(0, 0), r.M(0, 1), r.M(1, 1),
                       e11, e22});
    err = std::fmax(err, std::fmax(std::fabs(r.mu_back(0, 0) - e11), std::fabs(r.mu_back(1, 1) - e22)));
    err = std::fmax(err, std::fabs(r.mu_back(0, 1)));
  }
  o.pass = err <= tol;
  o.summary = {{"max_moment_error", err}, {"c3", sp.c3}, {"tolerance", tol}};
  return o;
}

ScenarioOutput heated_patch_entropy(const Json& config) {
  const std::string where = "heated-patch-entropy";
  require_keys(config, {"seed", "samples", "T_env", "amplitude", "width", "k", "random_k", "tolerance"}, where);
  SplitMix64 rng(sub_stream(require_seed(config, where), where));
  const int samples = get_int(config, "samples", 1000, where);
  const double T_env = get_number(config, "T_env", 293.15, where);
  const double amp = get_number(config, "amplitude", 300.0, where);
  const double width = get_number(config, "width", 0.25, where);
  const Mat3 k_fixed = get_mat3(config, "k", Mat3::identity(), where);
  if (config.contains("random_k") && !config.at("random_k").is_boolean())
    fail(ErrorKind::ConfigInvalid, where + ": 'random_k' must be a boolean");
  const bool random_k = config.contains("random_k") && config.at("random_k").get<bool>();
  const double tol = get_number(config, "tolerance", 1e-15, where);
  if (!(T_env > 0.0) || !(width > 0.0) || amp < 0.0)
    fail(ErrorKind::ConfigInvalid, where + ": T_env and width must be positive, amplitude non-negative");
  ScenarioOutput o{CsvWriter({"sample", "x", "y", "T", "grad_x", "grad_y", "gamma_con"}), {}, true};
  double min_gamma = std::numeric_limits<double>::infinity();
  for (int s = 0; s < samples; ++s) {
    // Gaussian hot spot T = T_env + A exp(−r²/w²) on a plate.
    const double x = rng.uniform(-1.0, 1.0), y = rng.uniform(-1.0, 1.0);
    const double g = amp * std::exp(-(x * x + y * y) / (width * width));
    const double T = T_env + g;
    const Vec3 grad{{-2.0 * x / (width * width) * g, -2.0 * y / (width * width) * g, 0.0}};
    const Mat3 k = random_k ? random_psd3(rng, 1 + s % 3) : k_fixed;
    const double gamma = conductive_production(fourier_flux(k, grad), grad, T);
    o.csv.row_numbers({static_cast<double>(s), x, y, T, grad[0], grad[1], gamma});
    min_gamma = std::fmin(min_gamma, gamma);
  }
  o.pass = min_gamma >= -tol;
  o.summary = {{"min_gamma_con", min_gamma}, {"tolerance", tol}};
  return o;
}

ScenarioOutput hencky_additivity(const Json& config) {
  const std::string where = "hencky-additivity";
  require_keys(config, {"seed", "samples", "orders", "scale", "tolerance_coaxial", "tolerance_composition"}, where);
  SplitMix64 rng(sub_stream(require_seed(config, where), where));
  const int samples = get_int(config, "samples", 50, where);
  const std::vector<double> orders = get_numbers(config, "orders", {0.0, 1.0, 2.0, -2.0}, where);
  const double scale = get_number(config, "scale", 0.3, where);
  const double tol_coax = get_number(config, "tolerance_coaxial", 1e-10, where);
  const double tol_comp = get_number(config, "tolerance_composition", 1e-12, where);
  ScenarioOutput o{CsvWriter({"sample", "kind", "n", "commutator", "additive_defect", "predicted_defect",
                              "composition_residual"}),
                   {}, true};
  double max_coax_log = 0.0, max_comp = 0.0;
  auto fmt_opt = [](const std::optional<double>& v) { return v ? format_number(*v) : std::string(); };
  for (int s = 0; s < samples; ++s) {
    const Mat3 q = random_rotation(rng);
    auto coaxial = [&] {
      const Vec3 d{{std::exp(scale * rng.normal()), std::exp(scale * rng.normal()), std::exp(scale * rng.normal())}};
      return sym(q * Mat3::diagonal(d) * transpose(q));
    };
    const Mat3 c1 = coaxial(), c2 = coaxial();
    const Mat3 g1 = random_deformation(rng, scale), g2 = random_deformation(rng, scale);
    for (const auto& [kind, a, b] : {std::tuple{"coaxial", c1, c2}, std::tuple{"general", g1, g2}}) {
      const HenckyReport r = hencky_additivity_check(TwoPointMap(a, Config::Reference, Config::Intermediate),
                                                     TwoPointMap(b, Config::Intermediate, Config::Current), orders);
      for (const HenckyEntry& e : r.entries) {
        o.csv.row({std::to_string(s), kind, format_number(e.n), format_number(r.commutator),
                   format_number(e.additive_defect), fmt_opt(e.predicted_defect), fmt_opt(e.composition_residual)});
        if (std::string(kind) == "coaxial" && std::fabs(e.n) < 1e-12)
          max_coax_log = std::fmax(max_coax_log, e.additive_defect);
        if (std::fabs(e.n - 2.0) < 1e-12 && e.predicted_defect && e.composition_residual) {
          max_comp = std::fmax(max_comp, std::fabs(e.additive_defect - *e.predicted_defect));
          max_comp = std::fmax(max_comp, *e.composition_residual);
        }
      }
    }
  }
  o.pass = max_coax_log <= tol_coax && max_comp <= tol_comp;
  o.summary = {{"max_coaxial_log_defect", max_coax_log},
               {"max_n2_composition_error", max_comp},
               {"tolerance_coaxial", tol_coax},
               {"tolerance_composition", tol_comp}};
  return o;
}

const std::map<std::string, Scenario>& registry() {
  static const std::map<std::string, Scenario> r{
      {"thermal-expansion-zero-stress", thermal_expansion_zero_stress},
      {"sphere-curvature", sphere_curvature},
      {"plate-bending-moment", plate_bending_moment},
      {"heated-patch-entropy", heated_patch_entropy},
      {"hencky-additivity", hencky_additivity},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [k, v] : registry()) n.push_back(k);
    return n;
  }();
  return names;
}

bool run_scenario(const std::string& name, const Json& config, const std::filesystem::path& out) {
  const auto it = registry().find(name);
  if (it == registry().end()) fail(ErrorKind::UnknownScenario, "unknown scenario '" + name + "'");
  Json block = config.is_null() ? Json::object() : config;
  if (block.is_object() && block.contains("scenario")) {
    if (!block.at("scenario").is_string() || block.at("scenario").get<std::string>() != name)
      fail(ErrorKind::ConfigInvalid, "config names scenario " + block.at("scenario").dump() + ", not '" + name + "'");
    block.erase("scenario");
  }
  ScenarioOutput o = it->second(block);
  Json summary;
  summary["schema"] = "klts.scenario/1";
  summary["scenario"] = name;
  summary["environment"] = environment_stamp();
  summary["pass"] = o.pass;
  summary["results"] = o.summary;
  summary["csv"] = name + ".csv";
  write_file(out / (name + ".csv"), o.csv.str());
  write_file(out / (name + ".json"), dump(summary));
  return o.pass;
}

}  // namespace klts::cli
