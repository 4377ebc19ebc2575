#include <charconv>
#include <cmath>
#include <fstream>

#include "cli/cli.hpp"
#include "klts/error.hpp"

namespace klts::cli {

namespace {

bool needs_quotes(const std::string& s) { return s.find_first_of(",\"\n\r") != std::string::npos; }

Json sanitize(const Json& j) {
  if (j.is_number_float() && !std::isfinite(j.get<double>())) return nullptr;
  if (j.is_array()) {
    Json r = Json::array();
    for (const auto& x : j) r.push_back(sanitize(x));
    return r;
  }
  if (j.is_object()) {
    Json r = Json::object();
    for (const auto& [k, v] : j.items()) r[k] = sanitize(v);
    return r;
  }
  return j;
}

}  // namespace

std::string format_number(double v) {
  if (v == 0.0) return "0";  // folds −0 so that signed zeros do not leak into output
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

CsvWriter::CsvWriter(std::vector<std::string> header) : columns_(header.size()) { write(header); }

void CsvWriter::row(const std::vector<std::string>& fields) {
  if (fields.size() != columns_) fail(ErrorKind::InvalidArgument, "CSV row width differs from the header");
  write(fields);
}

void CsvWriter::row_numbers(const std::vector<double>& values) {
  std::vector<std::string> f;
  f.reserve(values.size());
  for (double v : values) f.push_back(format_number(v));
  row(f);
}

void CsvWriter::write(const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) buffer_ += ',';
    if (needs_quotes(fields[i])) {
      buffer_ += '"';
      for (char c : fields[i]) {
        if (c == '"') buffer_ += '"';
        buffer_ += c;
      }
      buffer_ += '"';
    } else {
      buffer_ += fields[i];
    }
  }
  buffer_ += '\n';
}

Json environment_stamp() {
  Json e;
#if defined(__clang__)
  e["compiler"] = std::string("clang ") + __clang_version__;
#elif defined(__GNUC__)
  e["compiler"] = std::string("gcc ") + __VERSION__;
#elif defined(_MSC_VER)
  e["compiler"] = "msvc " + std::to_string(_MSC_VER);
#else
  e["compiler"] = "unknown";
#endif
  e["cxx_standard"] = static_cast<long>(__cplusplus);
  return e;
}

Json report_json(const SuiteResult& result, const SuiteOptions& options, bool timings) {
  Json r;
  r["schema"] = "klts.verification/1";
  r["seed"] = options.seed;
  r["quadrature_order"] = options.quadrature_order;
  r["environment"] = environment_stamp();
  std::size_t passed = 0;
  Json records = Json::array();
  for (const auto& p : result.records) {
    Json x;
    x["name"] = p.name;
    x["group"] = p.group;
    x["identity"] = p.identity;
    x["criterion"] = p.criterion;
    x["samples"] = p.samples;
    x["max_error"] = p.max_error;
    x["tolerance"] = p.tolerance;
    x["pass"] = p.pass;
    if (!p.note.empty()) x["note"] = p.note;
    if (timings) x["runtime_seconds"] = p.runtime_seconds;
    records.push_back(std::move(x));
    passed += p.pass ? 1 : 0;
  }
  r["summary"] = {{"total", result.records.size()}, {"passed", passed}, {"failed", result.records.size() - passed}};
  r["pass"] = result.pass;
  r["records"] = std::move(records);
  return r;
}

std::string dump(const Json& j) { return sanitize(j).dump(2) + "\n"; }

void write_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::ConfigInvalid, "cannot write " + path.string());
  out << content;
  if (!out) fail(ErrorKind::ConfigInvalid, "write failed for " + path.string());
}

}  // namespace klts::cli
