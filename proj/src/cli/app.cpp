#include "klts/cli/app.hpp"

#include <CLI11.hpp>
#include <optional>
#include <ostream>

#include "cli/cli.hpp"

namespace klts {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

int cmd_verify(const std::string& config_path, const std::optional<std::uint64_t>& seed,
               const std::string& json_path, bool timings, std::ostream& out) {
  const cli::Json config = config_path.empty() ? cli::Json() : cli::load_config(config_path);
  SuiteOptions options = cli::parse_suite_options(config);
  if (seed) options.seed = *seed;
  const SuiteResult result = run_suite(options);
  const std::string report = cli::dump(cli::report_json(result, options, timings));
  if (json_path.empty()) {
    out << report;
  } else {
    cli::write_file(json_path, report);
    std::size_t failed = 0;
    for (const auto& r : result.records) {
      if (r.pass) continue;
      ++failed;
      out << "FAIL " << r.group << "/" << r.name << ": max error " << cli::format_number(r.max_error)
          << " > tolerance " << cli::format_number(r.tolerance) << "\n";
    }
    out << (result.pass ? "PASS" : "FAIL") << ": " << result.records.size() - failed << "/"
        << result.records.size() << " properties, seed " << options.seed << ", report " << json_path << "\n";
  }
  return result.pass ? kExitPass : kExitFailure;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Curvilinear thermo-elastic kernel: verification suite, scenarios and tables", "klts"};
  app.require_subcommand(1);

  std::string verify_config, verify_json;
  std::optional<std::uint64_t> verify_seed;
  bool timings = false;
  auto* verify = app.add_subcommand("verify", "Run the property suite and write a JSON report");
  verify->add_option("--config", verify_config, "Verify config (JSON)")->check(CLI::ExistingFile);
  verify->add_option("--seed", verify_seed, "Seed of the SplitMix64 streams (default 42)");
  verify->add_option("--json", verify_json, "Write the report to this file instead of stdout");
  verify->add_flag("--timings", timings, "Include per-property runtimes (breaks byte-identical reports)");

  std::string scenario_name, scenario_config, scenario_out;
  auto* scenario = app.add_subcommand("scenario", "Built-in benchmark scenarios");
  scenario->require_subcommand(1);
  auto* run = scenario->add_subcommand("run", "Run a named scenario; writes NAME.csv and NAME.json");
  run->add_option("name", scenario_name, "Scenario name")->required();
  run->add_option("--config", scenario_config, "Scenario config (JSON)")->check(CLI::ExistingFile);
  run->add_option("--out", scenario_out, "Output directory")->required();
  scenario->add_subcommand("list", "List scenario names");

  std::string table_config, table_out;
  auto* table = app.add_subcommand("table", "Write a CSV table of linearization entries or responses");
  table->add_option("--config", table_config, "Table config (JSON)")->required()->check(CLI::ExistingFile);
  table->add_option("--out", table_out, "Output CSV file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(verify_config, verify_seed, verify_json, timings, out);
    if (scenario->got_subcommand("list")) {
      for (const auto& n : cli::scenario_names()) out << n << "\n";
      return kExitPass;
    }
    if (run->parsed()) {
      const cli::Json config = scenario_config.empty() ? cli::Json() : cli::load_config(scenario_config);
      const bool pass = cli::run_scenario(scenario_name, config, scenario_out);
      out << (pass ? "PASS" : "FAIL") << ": scenario " << scenario_name << " -> " << scenario_out << "\n";
      return pass ? kExitPass : kExitFailure;
    }
    if (table->parsed()) {
      cli::write_file(table_out, cli::build_table(cli::load_config(table_config)));
      out << "wrote " << table_out << "\n";
      return kExitPass;
    }
  } catch (const std::exception& e) {
    // klts::Error messages carry their ErrorKind prefix.
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace klts
