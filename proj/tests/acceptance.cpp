// Acceptance driver: one pass/fail line per criterion, exit 0 iff all pass.
// Usage: klts_acceptance <path-to-klts> <scratch-dir>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "klts/verify/suite.hpp"

namespace {

struct Criterion {
  int id;
  const char* title;
};

constexpr Criterion kCriteria[] = {
    {1, "push-forward/pull-back round trips, all four variances, <= 1e-12 in < 1 s"},
    {2, "Ricci identities for volume and surface metrics and bases, <= 1e-10"},
    {3, "Gauss/Weingarten residuals <= 1e-10; sphere R = 2 gives |H| = 0.5 and K = 0.25 within 1e-8"},
    {4, "zero stress under pure thermal deformation, volume and shell, 20-step sweep"},
    {5, "S, sigma and mu against central FD of the free energies, <= 1e-6 relative"},
    {6, "surface linearization table against FD, eight entries, <= 1e-6 relative"},
    {7, "surface rates a_dot, b_dot, n_dot against time FD, <= 1e-6 relative"},
    {8, "rigid variations give G_int = 0; virtual work matches the energy derivative"},
    {9, "Hencky n = 0 coaxial additivity; n = 2 defect equals the composition formula"},
    {10, "gamma_con: skew-k invariance, non-negativity for psd k, spot value 1/90000"},
    {11, "repeated verify --seed 42 runs produce byte-identical reports"},
};

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string quote(const std::string& s) { return "\"" + s + "\""; }

int run_verify(const std::string& cli, const std::filesystem::path& json, const std::filesystem::path& log) {
  const std::string cmd =
      quote(cli) + " verify --seed 42 --json " + quote(json.string()) + " > " + quote(log.string()) + " 2>&1";
  const int status = std::system(cmd.c_str());
#ifdef WEXITSTATUS
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
#else
  return status;
#endif
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: klts_acceptance <klts executable> <scratch dir>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::filesystem::path scratch = argv[2];
  std::filesystem::create_directories(scratch);

  klts::SuiteOptions options;
  options.seed = 42;
  const klts::SuiteResult suite = klts::run_suite(options);

  std::map<int, std::vector<const klts::PropertyRecord*>> by_criterion;
  for (const auto& r : suite.records)
    if (r.criterion > 0) by_criterion[r.criterion].push_back(&r);

  bool all = true;
  for (const Criterion& c : kCriteria) {
    bool pass = true;
    std::ostringstream detail;
    if (c.id == 11) {
      const int a = run_verify(cli, scratch / "report_a.json", scratch / "verify_a.log");
      const int b = run_verify(cli, scratch / "report_b.json", scratch / "verify_b.log");
      const std::string ra = read_file(scratch / "report_a.json");
      const std::string rb = read_file(scratch / "report_b.json");
      pass = a == 0 && b == 0 && !ra.empty() && ra == rb;
      detail << "exit codes " << a << "/" << b << ", " << ra.size() << " bytes, "
             << (ra == rb ? "identical" : "different");
    } else {
      const auto it = by_criterion.find(c.id);
      if (it == by_criterion.end()) {
        pass = false;
        detail << "no property recorded";
      } else {
        for (const auto* r : it->second) {
          pass = pass && r->pass;
          if (c.id == 1) pass = pass && r->runtime_seconds < 1.0;
          char buf[160];
          std::snprintf(buf, sizeof buf, "%s%s err %.3g/%.3g", detail.tellp() > 0 ? "; " : "", r->name.c_str(),
                        r->max_error, r->tolerance);
          detail << buf;
          if (c.id == 1) {
            std::snprintf(buf, sizeof buf, " in %.3f s", r->runtime_seconds);
            detail << buf;
          }
        }
      }
    }
    all = all && pass;
    std::cout << "criterion " << c.id << " [" << (pass ? "PASS" : "FAIL") << "] " << c.title << " (" << detail.str()
              << ")\n";
  }
  std::cout << (all ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << "\n";
  return all ? 0 : 1;
}
