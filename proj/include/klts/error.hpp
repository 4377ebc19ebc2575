#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace klts {

enum class ErrorKind {
  SingularMetric,
  SingularMap,
  ConfigurationMismatch,
  VarianceMismatch,
  NotSkew,
  DegenerateProbes,
  NegativeJacobian,
  NotSPD,
  DegenerateTangents,
  MalformedThermalMap,
  NonpositiveTemperature,
  SingularCurvature,
  QuadratureDomainMismatch,
  InvalidArgument,
  ConfigInvalid,
  UnknownScenario,
};

std::string_view to_string(ErrorKind kind);

/// Every library failure is reported through this type; `kind()` is stable API.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace klts
