#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace incidence {

enum class ErrorCode {
  IdenticalPoints,
  IdenticalLines,
  ForeignRef,
  MalformedMatrix,
  NotAPlane,
  UnsupportedOrder,
  ConstructionFailed,
  MalformedTable,
  ParseError,
  ExhaustiveOnInfinitePlane,
  BudgetZero,
  PlaneTooLarge,
  NotATranslate,
  DegenerateTriangle,
  UnknownName,
};

std::string_view error_code_name(ErrorCode code);

/// All library failures are reported through this exception; `code()` is
/// the stable classification, `what()` the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace incidence
