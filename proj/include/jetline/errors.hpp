#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jetline {

enum class ErrorKind {
  PoleAtExpansionPoint,
  ZeroDenominator,
  DegreeTooLarge,
  NotUnimodular,
  ZeroVector,
  ContractionOverflow,
  PoleAtBasePoint,
  BasePointAtInfinity,
  OrderWeightMismatch,
  BadOrder,
  IndexOutOfRange,
  InconsistentPointCovector,
  NotScalar,
  DimensionMismatch,
  UnknownChart,
  UnknownSuite,
  AtlasParseError,
  UnknownOperatorKind,
  UnknownFormat,
};

std::string_view error_kind_name(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// that callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace jetline
