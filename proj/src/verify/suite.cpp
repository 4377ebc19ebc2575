#include "klts/verify/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <thread>

#include "klts/error.hpp"

namespace klts {

PropertyContext::PropertyContext(std::string group, const SuiteOptions& options)
    : group_(std::move(group)), options_(options), rng_(sub_stream(options.seed, group_)) {}

double PropertyContext::tolerance(const std::string& name, double fallback) const {
  if (auto it = options_.tolerance_overrides.find(name); it != options_.tolerance_overrides.end()) return it->second;
  if (options_.override_all) return *options_.override_all;
  return fallback;
}

void PropertyContext::check(const std::string& name, const std::string& identity, int criterion, double tol,
                            const std::function<std::pair<std::size_t, double>()>& body, const std::string& note) {
  PropertyRecord r;
  r.name = name;
  r.group = group_;
  r.identity = identity;
  r.criterion = criterion;
  r.tolerance = tolerance(name, tol);
  r.note = note;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const auto [samples, err] = body();
    r.samples = samples;
    r.max_error = err;
    r.pass = std::isfinite(err) && err <= r.tolerance;
  } catch (const std::exception& e) {
    r.max_error = std::numeric_limits<double>::infinity();
    r.pass = false;
    r.note = std::string("exception: ") + e.what();
  }
  r.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  records_.push_back(std::move(r));
}

void PropertyContext::require(const std::string& name, const std::string& identity, int criterion,
                              const std::function<std::pair<std::size_t, bool>()>& body, const std::string& note) {
  check(
      name, identity, criterion, 0.0,
      [&] {
        const auto [samples, ok] = body();
        return std::pair<std::size_t, double>{samples, ok ? 0.0 : 1.0};
      },
      note);
}

const std::vector<std::string>& property_group_names() {
  static const std::vector<std::string> names{"tensor", "geometry", "constitutive", "weak"};
  return names;
}

namespace {

PropertyGroup group_body(const std::string& name) {
  if (name == "tensor") return register_tensor_properties;
  if (name == "geometry") return register_geometry_properties;
  if (name == "constitutive") return register_constitutive_properties;
  if (name == "weak") return register_weak_form_properties;
  fail(ErrorKind::ConfigInvalid, "unknown property group '" + name + "'");
}

}  // namespace

unsigned resolve_threads(const SuiteOptions& options) {
  if (options.threads > 0) return options.threads;
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("KLTS_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap > 0) n = std::min(n, static_cast<unsigned>(cap));
  }
  return n;
}

SuiteResult run_suite(const SuiteOptions& options) {
  std::vector<std::string> groups;
  for (const auto& g : property_group_names())
    if (options.groups.empty() || std::find(options.groups.begin(), options.groups.end(), g) != options.groups.end())
      groups.push_back(g);
  for (const auto& g : options.groups) group_body(g);  // rejects unknown names

  // Each group owns its stream and output slot; assembly below is in group order.
  std::vector<std::vector<PropertyRecord>> out(groups.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < groups.size(); i = next++) {
      PropertyContext ctx(groups[i], options);
      group_body(groups[i])(ctx);
      out[i] = std::move(ctx.records());
    }
  };
  const unsigned n = std::min<unsigned>(resolve_threads(options), static_cast<unsigned>(groups.size()));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  SuiteResult res;
  res.pass = true;
  for (auto& g : out)
    for (auto& r : g) {
      res.pass = res.pass && r.pass;
      res.records.push_back(std::move(r));
    }
  return res;
}

}  // namespace klts
