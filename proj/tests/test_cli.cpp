#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli/cli.hpp"
#include "klts/cli/app.hpp"

namespace klts {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "klts");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("klts_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& content) const {
    const fs::path p = dir_ / name;
    std::ofstream(p, std::ios::binary) << content;
    return p;
  }
  static std::string read(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
};

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> lines;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  return lines;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> f;
  std::istringstream in(line);
  for (std::string x; std::getline(in, x, ',');) f.push_back(x);
  return f;
}

double column(const std::string& csv, const std::string& name, std::size_t row) {
  const auto lines = split_lines(csv);
  const auto header = split_fields(lines.at(0));
  const auto values = split_fields(lines.at(row + 1));
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return std::stod(values.at(i));
  ADD_FAILURE() << "missing column " << name;
  return 0.0;
}

TEST_F(CliTest, MalformedJsonIsAConfigError) {
  const CliRun r = invoke({"verify", "--config", write("bad.json", "{\"seed\": 4,").string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("ConfigInvalid"), std::string::npos);
}

TEST_F(CliTest, UnknownConfigKeyIsAConfigError) {
  const CliRun r = invoke({"verify", "--config", write("c.json", "{\"sed\": 4}").string()});
  EXPECT_EQ(r.code, 2);
}

TEST_F(CliTest, UnknownScenarioIsAConfigError) {
  const CliRun r = invoke({"scenario", "run", "no-such-scenario", "--out", dir_.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("UnknownScenario"), std::string::npos);
}

TEST_F(CliTest, MissingSubcommandIsAUsageError) { EXPECT_EQ(invoke({}).code, 2); }

TEST_F(CliTest, TightToleranceFailsWithExitOne) {
  const fs::path cfg = write("v.json", R"({"groups": ["tensor"], "tolerances": {"all": 1e-16}})");
  const CliRun r = invoke({"verify", "--config", cfg.string(), "--json", (dir_ / "report.json").string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL "), std::string::npos);
  const auto report = cli::Json::parse(read(dir_ / "report.json"));
  EXPECT_FALSE(report.at("pass").get<bool>());
  EXPECT_GT(report.at("summary").at("failed").get<int>(), 0);
}

TEST_F(CliTest, VerifyReportIsDeterministicAndTimingFree) {
  const fs::path cfg = write("v.json", R"({"groups": ["tensor"]})");
  const CliRun a = invoke({"verify", "--config", cfg.string(), "--seed", "9"});
  const CliRun b = invoke({"verify", "--config", cfg.string(), "--seed", "9"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto report = cli::Json::parse(a.out);
  EXPECT_EQ(report.at("seed").get<std::uint64_t>(), 9u);
  EXPECT_EQ(report.at("schema").get<std::string>(), "klts.verification/1");
  EXPECT_EQ(a.out.find("runtime_seconds"), std::string::npos);
  EXPECT_EQ(a.out.find('\r'), std::string::npos);
}

TEST_F(CliTest, LinearizationTableValues) {
  const fs::path cfg = write("t.json", R"({"kind": "linearization",
    "states": [{"C": [[1, 0], [0, 1]], "b": [[-0.5, 0], [0, -0.5]]}]})");
  const fs::path out = dir_ / "table.csv";
  ASSERT_EQ(invoke({"table", "--config", cfg.string(), "--out", out.string()}).code, 0);
  const std::string csv = read(out);
  EXPECT_DOUBLE_EQ(column(csv, "J", 0), 1.0);
  EXPECT_DOUBLE_EQ(column(csv, "H", 0), -0.5);
  EXPECT_DOUBLE_EQ(column(csv, "K", 0), 0.25);
  EXPECT_DOUBLE_EQ(column(csv, "dJ_dC_11", 0), 0.5);
  EXPECT_DOUBLE_EQ(column(csv, "dJ_dC_12", 0), 0.0);
  EXPECT_DOUBLE_EQ(column(csv, "dK_db_11", 0), -0.5);
  EXPECT_EQ(csv.find('\r'), std::string::npos);
}

TEST_F(CliTest, RandomStateTablesRequireSeedAndAreDeterministic) {
  const fs::path no_seed = write("n.json", R"({"kind": "random-states", "count": 3})");
  EXPECT_EQ(invoke({"table", "--config", no_seed.string(), "--out", (dir_ / "x.csv").string()}).code, 2);
  const fs::path cfg = write("r.json", R"({"kind": "random-states", "seed": 5, "count": 4})");
  ASSERT_EQ(invoke({"table", "--config", cfg.string(), "--out", (dir_ / "a.csv").string()}).code, 0);
  ASSERT_EQ(invoke({"table", "--config", cfg.string(), "--out", (dir_ / "b.csv").string()}).code, 0);
  EXPECT_EQ(read(dir_ / "a.csv"), read(dir_ / "b.csv"));
  EXPECT_EQ(split_lines(read(dir_ / "a.csv")).size(), 5u);
}

TEST_F(CliTest, PlateBendingScenarioMatchesBendingLaw) {
  const fs::path cfg = write("p.json", R"({"kappa11": [0.3], "kappa22": -0.2})");
  const CliRun r = invoke({"scenario", "run", "plate-bending-moment", "--config", cfg.string(), "--out", dir_.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string csv = read(dir_ / "plate-bending-moment.csv");
  EXPECT_NEAR(column(csv, "mu11", 0), -0.3, 1e-12);
  EXPECT_NEAR(column(csv, "mu22", 0), 0.2, 1e-12);
  EXPECT_NEAR(column(csv, "mu12", 0), 0.0, 1e-12);
  const auto summary = cli::Json::parse(read(dir_ / "plate-bending-moment.json"));
  EXPECT_TRUE(summary.at("pass").get<bool>());
}

TEST_F(CliTest, ScenarioNameInConfigMustMatch) {
  const fs::path cfg = write("s.json", R"({"scenario": "sphere-curvature"})");
  EXPECT_EQ(invoke({"scenario", "run", "plate-bending-moment", "--config", cfg.string(), "--out", dir_.string()}).code,
            2);
}

TEST_F(CliTest, HeatCapacityNeedsUnits) {
  const fs::path cfg = write("u.json", R"({"shell_material": {"c1": 2.0, "c3": 0.5}})");
  EXPECT_EQ(invoke({"scenario", "run", "plate-bending-moment", "--config", cfg.string(), "--out", dir_.string()}).code,
            2);
}

TEST(Csv, QuotesFieldsPerRfc4180) {
  cli::CsvWriter w({"a", "b,c"});
  w.row({"plain", "say \"hi\""});
  w.row({"line\nbreak", ""});
  EXPECT_EQ(w.str(), "a,\"b,c\"\nplain,\"say \"\"hi\"\"\"\n\"line\nbreak\",\n");
  EXPECT_THROW(w.row({"only one"}), Error);
}

TEST(Csv, NumbersRoundTripWithDotSeparator) {
  EXPECT_EQ(cli::format_number(0.1), "0.1");
  EXPECT_EQ(cli::format_number(-2.5e-17), "-2.5e-17");
  const double third = 1.0 / 3.0;
  EXPECT_EQ(std::stod(cli::format_number(third)), third);
}

TEST(Report, NonFiniteErrorsBecomeNull) {
  cli::Json j;
  j["x"] = std::numeric_limits<double>::infinity();
  EXPECT_EQ(cli::dump(j), "{\n  \"x\": null\n}\n");
}

}  // namespace
}  // namespace klts
