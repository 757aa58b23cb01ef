#pragma once

#include <stdexcept>
#include <string>

namespace surfcluster {

enum class ErrorKind {
  ConditionViolated,
  WouldSelfFold,
  NotInterior,
  SameEdge,
  NonMonomialInverse,
  UnmappedVariable,
  NoUniqueLowestTerm,
  NonPerfectSquare,
  NotMinimalPosition,
  EndpointAtPuncture,
  NotBoundaryEnded,
  NonIntegerInput,
  NotLoop,
  PuncturedSurfaceUnsupported,
  IncompatibleArcs,
  NotIntegral,
  NegativePinningSum,
  UnknownEdge,
  InvalidInput,
};

const char* error_kind_name(ErrorKind k);

// Every domain failure is reported through this one exception; `what()`
// starts with the kind name so CLI output can be matched verbatim.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);
  ErrorKind kind() const { return kind_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace surfcluster
