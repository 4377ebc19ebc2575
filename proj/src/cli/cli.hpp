#pragma once

#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "klts/charts.hpp"
#include "klts/constitutive.hpp"
#include "klts/verify/suite.hpp"

namespace klts::cli {

using Json = nlohmann::ordered_json;

// ---- config ------------------------------------------------------------------

/// Parses a JSON file; throws ConfigInvalid with the parser diagnostic.
Json load_config(const std::filesystem::path& path);

/// Throws ConfigInvalid when `j` is not an object or has keys outside `allowed`.
void require_keys(const Json& j, std::initializer_list<const char*> allowed, const std::string& where);

double get_number(const Json& j, const char* key, double fallback, const std::string& where);
int get_int(const Json& j, const char* key, int fallback, const std::string& where);
std::uint64_t require_seed(const Json& j, const std::string& where);
std::vector<double> get_numbers(const Json& j, const char* key, const std::vector<double>& fallback,
                                const std::string& where);
/// Scalar s maps to s·𝟏; otherwise a nested N×N array.
Mat3 get_mat3(const Json& j, const char* key, const Mat3& fallback, const std::string& where);
Mat2 parse_mat2(const Json& j, const std::string& where);

VolumeMaterialParams parse_volume_material(const Json& j, const std::string& where);
SurfaceMaterialParams parse_surface_material(const Json& j, const std::string& where);
ThermalExpansionModel parse_thermal_model(const Json& j, const std::string& where);
/// {"type": "plane" | "cylinder" | "sphere" | "torus" | "monge", ...}.
SurfaceChartPtr parse_surface_chart(const Json& j, const std::string& where);

/// Suite options from a verify config; CLI flags are applied afterwards.
SuiteOptions parse_suite_options(const Json& j);

// ---- output ----------------------------------------------------------------------

/// Shortest round-trip decimal, '.' separator, independent of locale; −0 prints as 0.
std::string format_number(double v);

/// RFC-4180 writer with LF line endings.
class CsvWriter {
public:
  explicit CsvWriter(std::vector<std::string> header);
  void row(const std::vector<std::string>& fields);
  void row_numbers(const std::vector<double>& values);
  std::string str() const { return buffer_; }
  std::size_t columns() const { return columns_; }

private:
  void write(const std::vector<std::string>& fields);
  std::string buffer_;
  std::size_t columns_;
};

/// Compiler and language standard only, so that reports are reproducible.
Json environment_stamp();
/// Verification report; runtimes only when `timings` is set.
Json report_json(const SuiteResult& result, const SuiteOptions& options, bool timings);
/// JSON with non-finite numbers replaced by null, two-space indent, trailing LF.
std::string dump(const Json& j);
void write_file(const std::filesystem::path& path, const std::string& content);

// ---- commands --------------------------------------------------------------------

/// Names of the built-in scenarios.
const std::vector<std::string>& scenario_names();
/// Writes `<out>/<name>.csv` and `<out>/<name>.json`; returns the scenario verdict.
bool run_scenario(const std::string& name, const Json& config, const std::filesystem::path& out);

/// Builds the CSV described by a table config.
std::string build_table(const Json& config);

}  // namespace klts::cli
