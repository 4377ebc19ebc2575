#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "klts/verify/rng.hpp"

namespace klts {

/// One verified property. `identity` names the relation under test; `criterion`
/// is the acceptance criterion number it contributes to (0 for none).
struct PropertyRecord {
  std::string name;
  std::string group;
  std::string identity;
  int criterion = 0;
  std::size_t samples = 0;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double runtime_seconds = 0.0;
  std::string note;
};

struct SuiteOptions {
  std::uint64_t seed = 42;
  std::optional<double> override_all;
  std::map<std::string, double> tolerance_overrides;
  unsigned threads = 0;  // 0: hardware concurrency capped by KLTS_THREADS
  int quadrature_order = 8;
  /// Restrict to these groups when non-empty.
  std::vector<std::string> groups;
};

/// Per-group execution context with its own random stream.
class PropertyContext {
public:
  PropertyContext(std::string group, const SuiteOptions& options);

  SplitMix64& rng() { return rng_; }
  const SuiteOptions& options() const { return options_; }
  /// Tolerance after applying overrides.
  double tolerance(const std::string& name, double fallback) const;

  /// Runs `body`, which returns (samples, max error); records pass iff the
  /// error is finite and ≤ tolerance. Exceptions become failing records.
  void check(const std::string& name, const std::string& identity, int criterion, double tolerance,
             const std::function<std::pair<std::size_t, double>()>& body, const std::string& note = {});
  /// Boolean condition recorded as error 0 (pass) or 1 (fail) with tolerance 0.
  void require(const std::string& name, const std::string& identity, int criterion,
               const std::function<std::pair<std::size_t, bool>()>& body, const std::string& note = {});

  std::vector<PropertyRecord>& records() { return records_; }

private:
  std::string group_;
  const SuiteOptions& options_;
  SplitMix64 rng_;
  std::vector<PropertyRecord> records_;
};

struct SuiteResult {
  std::vector<PropertyRecord> records;
  bool pass = false;
};

using PropertyGroup = std::function<void(PropertyContext&)>;

/// Group names in execution order.
const std::vector<std::string>& property_group_names();
SuiteResult run_suite(const SuiteOptions& options);
/// Worker count: options.threads if set, else hardware concurrency capped by KLTS_THREADS.
unsigned resolve_threads(const SuiteOptions& options);

void register_tensor_properties(PropertyContext& ctx);
void register_geometry_properties(PropertyContext& ctx);
void register_constitutive_properties(PropertyContext& ctx);
void register_weak_form_properties(PropertyContext& ctx);

}  // namespace klts
