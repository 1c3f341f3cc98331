#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gtm {

enum class ErrorKind {
  NotSquare,
  DiagonalNonzero,
  ComplementViolation,
  RangeViolation,
  IndexOutOfRange,
  InvalidArgument,
  EmptySeed,
  SizeCapExceeded,
  SetsIntersect,
  WeightOutOfRange,
  ConflictingArcs,
  NotInseparable,
  NotIndecomposable,
  NoneFound,
  OrderMismatch,
  Order2MinorMismatch,
  PreconditionUnchecked,
  NotAClanAtStep,
  HypothesisViolated,
  NotBothLinear,
  MinorMismatch,
  InternalInvariantBroken,
  ParamOutOfRange,
  ParamIsHalf,
  ConfigError,
  ParseError,
  IoError,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::DiagonalNonzero: return "DiagonalNonzero";
    case ErrorKind::ComplementViolation: return "ComplementViolation";
    case ErrorKind::RangeViolation: return "RangeViolation";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::EmptySeed: return "EmptySeed";
    case ErrorKind::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorKind::SetsIntersect: return "SetsIntersect";
    case ErrorKind::WeightOutOfRange: return "WeightOutOfRange";
    case ErrorKind::ConflictingArcs: return "ConflictingArcs";
    case ErrorKind::NotInseparable: return "NotInseparable";
    case ErrorKind::NotIndecomposable: return "NotIndecomposable";
    case ErrorKind::NoneFound: return "NoneFound";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::Order2MinorMismatch: return "Order2MinorMismatch";
    case ErrorKind::PreconditionUnchecked: return "PreconditionUnchecked";
    case ErrorKind::NotAClanAtStep: return "NotAClanAtStep";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::NotBothLinear: return "NotBothLinear";
    case ErrorKind::MinorMismatch: return "MinorMismatch";
    case ErrorKind::InternalInvariantBroken: return "InternalInvariantBroken";
    case ErrorKind::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorKind::ParamIsHalf: return "ParamIsHalf";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

/// Every failure in the library is reported as a gtm::Error.
///
/// `indices()` carries the positional payload of the failure, 1-based:
/// (row, column) for matrix invariants, (line, column) for parse errors,
/// the step number for script failures, the offending vertices for
/// subset-valued failures.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::vector<std::size_t> indices = {})
      : std::runtime_error(message), kind_(kind), indices_(std::move(indices)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& indices() const noexcept { return indices_; }

 private:
  ErrorKind kind_;
  std::vector<std::size_t> indices_;
};

}  // namespace gtm
