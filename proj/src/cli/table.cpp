#include <cmath>
#include <string>

#include "cli/cli.hpp"
#include "klts/error.hpp"
#include "klts/linearization.hpp"
#include "klts/verify/oracles.hpp"

namespace klts::cli {

namespace {

const char* const kIdx2[] = {"1", "2"};
const char* const kIdx3[] = {"1", "2", "3"};

void add_mat2_header(std::vector<std::string>& h, const std::string& name) {
  for (const char* i : kIdx2)
    for (const char* j : kIdx2) h.push_back(name + "_" + i + j);
}
void add_mat3_header(std::vector<std::string>& h, const std::string& name) {
  for (const char* i : kIdx3)
    for (const char* j : kIdx3) h.push_back(name + "_" + i + j);
}
/// ⊕-layout entries D_abcd = ∂A_ad/∂B_bc, named by (a, b, c, d).
void add_t4_header(std::vector<std::string>& h, const std::string& name) {
  for (const char* a : kIdx2)
    for (const char* b : kIdx2)
      for (const char* c : kIdx2)
        for (const char* d : kIdx2) h.push_back(name + "_" + a + b + c + d);
}

void push(std::vector<std::string>& row, const Mat2& m) {
  for (double x : m.c) row.push_back(format_number(x));
}
void push(std::vector<std::string>& row, const Mat3& m) {
  for (double x : m.c) row.push_back(format_number(x));
}
void push(std::vector<std::string>& row, const Tensor4<2>& t) {
  for (double x : t.c) row.push_back(format_number(x));
}

std::vector<std::string> linearization_header() {
  std::vector<std::string> h{"state"};
  add_mat2_header(h, "C");
  add_mat2_header(h, "b");
  h.insert(h.end(), {"J", "H", "K"});
  add_mat2_header(h, "C_inv");
  add_mat2_header(h, "b_sharp");
  add_mat2_header(h, "dJ_dC");
  add_mat2_header(h, "dH_dC");
  add_mat2_header(h, "dH_db");
  add_mat2_header(h, "dK_dC");
  add_mat2_header(h, "dK_db");
  add_t4_header(h, "dCinv_dC");
  add_t4_header(h, "dbsharp_dC");
  add_t4_header(h, "dbsharp_db");
  return h;
}

void linearization_row(CsvWriter& csv, std::size_t state, const Mat2& C, const Mat2& b) {
  const LinearizationTable t = surface_linearization_table(C, b, {}, true);
  std::vector<std::string> row{std::to_string(state)};
  push(row, C);
  push(row, b);
  row.insert(row.end(), {format_number(t.J), format_number(t.H), format_number(t.K)});
  push(row, t.C_inv);
  push(row, t.b_sharp);
  push(row, t.dJ_dC);
  push(row, t.dH_dC);
  push(row, t.dH_db);
  push(row, t.dK_dC);
  if (t.dK_db)
    push(row, *t.dK_db);
  else
    row.insert(row.end(), 4, std::string());
  push(row, t.dCinv_dC);
  push(row, t.dbsharp_dC);
  push(row, t.dbsharp_db);
  csv.row(row);
}

std::string linearization_table(const Json& config) {
  const std::string where = "table(linearization)";
  require_keys(config, {"kind", "states"}, where);
  if (!config.contains("states") || !config.at("states").is_array() || config.at("states").empty())
    fail(ErrorKind::ConfigInvalid, where + ": 'states' must be a non-empty array of {\"C\", \"b\"}");
  CsvWriter csv(linearization_header());
  std::size_t i = 0;
  for (const auto& s : config.at("states")) {
    const std::string w = where + ".states[" + std::to_string(i) + "]";
    require_keys(s, {"C", "b"}, w);
    if (!s.contains("C") || !s.contains("b")) fail(ErrorKind::ConfigInvalid, w + ": needs 'C' and 'b'");
    linearization_row(csv, i++, parse_mat2(s.at("C"), w + ".C"), parse_mat2(s.at("b"), w + ".b"));
  }
  return csv.str();
}

std::string random_states_table(const Json& config) {
  const std::string where = "table(random-states)";
  require_keys(config, {"kind", "seed", "count", "scale"}, where);
  SplitMix64 rng(sub_stream(require_seed(config, where), "random-states"));
  const int count = get_int(config, "count", 20, where);
  const double scale = get_number(config, "scale", 0.3, where);
  if (count < 1) fail(ErrorKind::ConfigInvalid, where + ": 'count' must be positive");
  CsvWriter csv(linearization_header());
  for (int i = 0; i < count; ++i) {
    const Mat2 C = random_spd2(rng, scale);
    const Mat2 b = random_sym2(rng);
    linearization_row(csv, static_cast<std::size_t>(i), C, b);
  }
  return csv.str();
}

std::string volume_response_sweep(const Json& config) {
  const std::string where = "table(volume-response-sweep)";
  require_keys(config, {"kind", "F", "thermal", "material", "T_from", "T_to", "steps"}, where);
  const Mat3 F = get_mat3(config, "F", Mat3::identity(), where);
  const ThermalExpansionModel model = parse_thermal_model(config.contains("thermal") ? config.at("thermal") : Json(),
                                                          where + ".thermal");
  const VolumeMaterialParams p =
      parse_volume_material(config.contains("material") ? config.at("material") : Json(), where + ".material");
  const double t_from = get_number(config, "T_from", 250.0, where);
  const double t_to = get_number(config, "T_to", 450.0, where);
  const int steps = get_int(config, "steps", 21, where);
  if (steps < 2 || !(t_from > 0.0) || !(t_to > 0.0))
    fail(ErrorKind::ConfigInvalid, where + ": needs steps >= 2 and positive temperatures");
  std::vector<std::string> h{"T", "J", "J_T", "psi", "s", "u"};
  add_mat3_header(h, "S");
  add_mat3_header(h, "sigma");
  CsvWriter csv(h);
  for (int k = 0; k < steps; ++k) {
    const double T = t_from + (t_to - t_from) * k / (steps - 1);
    const VolumeResponse r = volume_response(F, T, model, p);
    std::vector<std::string> row;
    for (double x : {T, r.J, r.J_T, r.psi, r.s, r.u}) row.push_back(format_number(x));
    push(row, r.S);
    push(row, r.sigma);
    csv.row(row);
  }
  return csv.str();
}

}  // namespace

std::string build_table(const Json& config) {
  if (!config.is_object() || !config.contains("kind") || !config.at("kind").is_string())
    fail(ErrorKind::ConfigInvalid, "table config needs a string 'kind'");
  const std::string kind = config.at("kind").get<std::string>();
  if (kind == "linearization") return linearization_table(config);
  if (kind == "random-states") return random_states_table(config);
  if (kind == "volume-response-sweep") return volume_response_sweep(config);
  fail(ErrorKind::ConfigInvalid,
       "unknown table kind '" + kind + "' (linearization, random-states, volume-response-sweep)");
}

}  // namespace klts::cli
