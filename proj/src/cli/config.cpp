#include <cmath>
#include <fstream>
#include <sstream>

#include "cli/cli.hpp"
#include "klts/error.hpp"

namespace klts::cli {

namespace {

[[noreturn]] void invalid(const std::string& where, const std::string& what) {
  fail(ErrorKind::ConfigInvalid, where + ": " + what);
}

Rect2 parse_rect(const Json& j, const Rect2& fallback, const std::string& where) {
  if (!j.contains("domain")) return fallback;
  const Json& d = j.at("domain");
  if (!d.is_array() || d.size() != 2 || !d[0].is_array() || !d[1].is_array() || d[0].size() != 2 ||
      d[1].size() != 2)
    invalid(where, "'domain' must be [[lo1, lo2], [hi1, hi2]]");
  Rect2 r;
  for (std::size_t i = 0; i < 2; ++i) {
    if (!d[0][i].is_number() || !d[1][i].is_number()) invalid(where, "'domain' entries must be numbers");
    r.lo[i] = d[0][i].get<double>();
    r.hi[i] = d[1][i].get<double>();
    if (!(r.lo[i] < r.hi[i])) invalid(where, "'domain' needs lo < hi");
  }
  return r;
}

Vec3 parse_vec3(const Json& j, const char* key, const Vec3& fallback, const std::string& where) {
  if (!j.contains(key)) return fallback;
  const Json& v = j.at(key);
  if (!v.is_array() || v.size() != 3) invalid(where, std::string("'") + key + "' must be a 3-vector");
  Vec3 r;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!v[i].is_number()) invalid(where, std::string("'") + key + "' entries must be numbers");
    r[i] = v[i].get<double>();
  }
  return r;
}

void require_units(const Json& j, const char* expected, const std::string& where) {
  if (!j.contains("c1")) return;
  if (!j.contains("c1_units") || !j.at("c1_units").is_string() || j.at("c1_units").get<std::string>() != expected)
    invalid(where, std::string("'c1' requires \"c1_units\": \"") + expected + "\"");
}

}  // namespace

Json load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) invalid(path.string(), "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const Json::parse_error& e) {
    invalid(path.string(), std::string("malformed JSON: ") + e.what());
  }
}

void require_keys(const Json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!j.is_object()) invalid(where, "expected a JSON object");
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) invalid(where, "unknown key '" + key + "'");
  }
}

double get_number(const Json& j, const char* key, double fallback, const std::string& where) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number()) invalid(where, std::string("'") + key + "' must be a number");
  const double v = j.at(key).get<double>();
  if (!std::isfinite(v)) invalid(where, std::string("'") + key + "' must be finite");
  return v;
}

int get_int(const Json& j, const char* key, int fallback, const std::string& where) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number_integer()) invalid(where, std::string("'") + key + "' must be an integer");
  return j.at(key).get<int>();
}

std::uint64_t require_seed(const Json& j, const std::string& where) {
  if (!j.contains("seed")) invalid(where, "'seed' is mandatory for randomized runs");
  if (!j.at("seed").is_number_unsigned()) invalid(where, "'seed' must be a non-negative integer");
  return j.at("seed").get<std::uint64_t>();
}

std::vector<double> get_numbers(const Json& j, const char* key, const std::vector<double>& fallback,
                                const std::string& where) {
  if (!j.contains(key)) return fallback;
  const Json& v = j.at(key);
  if (!v.is_array() || v.empty()) invalid(where, std::string("'") + key + "' must be a non-empty array");
  std::vector<double> r;
  for (const auto& x : v) {
    if (!x.is_number()) invalid(where, std::string("'") + key + "' entries must be numbers");
    r.push_back(x.get<double>());
  }
  return r;
}

Mat3 get_mat3(const Json& j, const char* key, const Mat3& fallback, const std::string& where) {
  if (!j.contains(key)) return fallback;
  const Json& v = j.at(key);
  if (v.is_number()) return v.get<double>() * Mat3::identity();
  if (!v.is_array() || v.size() != 3) invalid(where, std::string("'") + key + "' must be a number or 3x3 array");
  Mat3 m;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!v[i].is_array() || v[i].size() != 3) invalid(where, std::string("'") + key + "' must be 3x3");
    for (std::size_t k = 0; k < 3; ++k) {
      if (!v[i][k].is_number()) invalid(where, std::string("'") + key + "' entries must be numbers");
      m(i, k) = v[i][k].get<double>();
    }
  }
  return m;
}

Mat2 parse_mat2(const Json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2) invalid(where, "expected a 2x2 array");
  Mat2 m;
  for (std::size_t i = 0; i < 2; ++i) {
    if (!v[i].is_array() || v[i].size() != 2) invalid(where, "expected a 2x2 array");
    for (std::size_t k = 0; k < 2; ++k) {
      if (!v[i][k].is_number()) invalid(where, "2x2 entries must be numbers");
      m(i, k) = v[i][k].get<double>();
    }
  }
  return m;
}

VolumeMaterialParams parse_volume_material(const Json& j, const std::string& where) {
  VolumeMaterialParams p;
  if (j.is_null()) return p;
  require_keys(j, {"mu0", "lambda", "c1", "c1_units", "c2", "T_ref", "T0", "rho0"}, where);
  require_units(j, "J/(m^3*K)", where);
  p.mu0 = get_number(j, "mu0", p.mu0, where);
  p.lambda = get_number(j, "lambda", p.lambda, where);
  p.c1 = get_number(j, "c1", p.c1, where);
  p.c2 = get_number(j, "c2", p.c2, where);
  p.T_ref = get_number(j, "T_ref", p.T_ref, where);
  p.T0 = get_number(j, "T0", p.T0, where);
  p.rho0 = get_number(j, "rho0", p.rho0, where);
  try {
    p.validate();
  } catch (const Error& e) {
    invalid(where, e.what());
  }
  return p;
}

SurfaceMaterialParams parse_surface_material(const Json& j, const std::string& where) {
  SurfaceMaterialParams p;
  if (j.is_null()) return p;
  require_keys(j, {"K", "mu_s", "c1", "c1_units", "c3", "rho0s", "t0", "T0"}, where);
  require_units(j, "J/(m^2*K)", where);
  p.K = get_number(j, "K", p.K, where);
  p.mu_s = get_number(j, "mu_s", p.mu_s, where);
  p.c1 = get_number(j, "c1", p.c1, where);
  p.c3 = get_number(j, "c3", p.c3, where);
  p.rho0s = get_number(j, "rho0s", p.rho0s, where);
  p.t0 = get_number(j, "t0", p.t0, where);
  p.T0 = get_number(j, "T0", p.T0, where);
  try {
    p.validate();
  } catch (const Error& e) {
    invalid(where, e.what());
  }
  return p;
}

ThermalExpansionModel parse_thermal_model(const Json& j, const std::string& where) {
  ThermalExpansionModel m;
  m.alpha = Mat3{};
  if (j.is_null()) return m;
  require_keys(j, {"alpha", "theta0"}, where);
  m.alpha = get_mat3(j, "alpha", m.alpha, where);
  m.theta0 = get_number(j, "theta0", m.theta0, where);
  try {
    m.validate();
  } catch (const Error& e) {
    invalid(where, e.what());
  }
  return m;
}

SurfaceChartPtr parse_surface_chart(const Json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string())
    invalid(where, "chart needs a string 'type'");
  const std::string type = j.at("type").get<std::string>();
  const Rect2 unit{Vec2{{-0.5, -0.5}}, Vec2{{0.5, 0.5}}};
  if (type == "plane") {
    require_keys(j, {"type", "origin", "u", "v", "domain"}, where);
    return plane_chart(parse_vec3(j, "origin", Vec3{}, where), parse_vec3(j, "u", Vec3::unit(0), where),
                       parse_vec3(j, "v", Vec3::unit(1), where), parse_rect(j, unit, where));
  }
  if (type == "cylinder") {
    require_keys(j, {"type", "radius", "domain"}, where);
    return cylinder_chart(get_number(j, "radius", 1.0, where),
                          parse_rect(j, Rect2{Vec2{{0.0, -1.0}}, Vec2{{3.0, 1.0}}}, where));
  }
  if (type == "sphere") {
    require_keys(j, {"type", "radius", "domain"}, where);
    return sphere_chart(get_number(j, "radius", 1.0, where),
                        parse_rect(j, Rect2{Vec2{{0.5, 0.0}}, Vec2{{2.5, 3.0}}}, where));
  }
  if (type == "torus") {
    require_keys(j, {"type", "major", "minor", "domain"}, where);
    return torus_chart(get_number(j, "major", 2.0, where), get_number(j, "minor", 0.5, where),
                       parse_rect(j, Rect2{Vec2{{0.0, 0.0}}, Vec2{{3.0, 3.0}}}, where));
  }
  if (type == "monge") {
    require_keys(j, {"type", "terms", "domain"}, where);
    std::vector<MongeTerm> terms;
    if (j.contains("terms")) {
      for (const auto& t : j.at("terms")) {
        if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number_integer() ||
            !t[2].is_number())
          invalid(where, "monge 'terms' entries are [p, q, c]");
        terms.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<double>()});
      }
    }
    return monge_chart(terms, parse_rect(j, unit, where));
  }
  invalid(where, "unknown chart type '" + type + "'");
}

SuiteOptions parse_suite_options(const Json& j) {
  const std::string where = "verify config";
  SuiteOptions o;
  if (j.is_null()) return o;
  require_keys(j, {"seed", "threads", "quadrature_order", "groups", "tolerances"}, where);
  if (j.contains("seed")) o.seed = require_seed(j, where);
  const int threads = get_int(j, "threads", 0, where);
  if (threads < 0) invalid(where, "'threads' must be non-negative");
  o.threads = static_cast<unsigned>(threads);
  o.quadrature_order = get_int(j, "quadrature_order", o.quadrature_order, where);
  if (o.quadrature_order < 1 || o.quadrature_order > 64) invalid(where, "'quadrature_order' must be in 1..64");
  if (j.contains("groups")) {
    if (!j.at("groups").is_array()) invalid(where, "'groups' must be an array of names");
    for (const auto& g : j.at("groups")) {
      if (!g.is_string()) invalid(where, "'groups' must be an array of names");
      const std::string name = g.get<std::string>();
      bool known = false;
      for (const auto& n : property_group_names()) known = known || n == name;
      if (!known) invalid(where, "unknown property group '" + name + "'");
      o.groups.push_back(name);
    }
  }
  if (j.contains("tolerances")) {
    const Json& t = j.at("tolerances");
    if (!t.is_object()) invalid(where, "'tolerances' must be an object");
    for (const auto& [key, value] : t.items()) {
      if (!value.is_number() || !(value.get<double>() >= 0.0))
        invalid(where, "tolerance '" + key + "' must be a non-negative number");
      if (key == "all")
        o.override_all = value.get<double>();
      else
        o.tolerance_overrides[key] = value.get<double>();
    }
  }
  return o;
}

}  // namespace klts::cli
