#include "incidence/error.hpp"

namespace incidence {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::IdenticalPoints: return "IdenticalPoints";
    case ErrorCode::IdenticalLines: return "IdenticalLines";
    case ErrorCode::ForeignRef: return "ForeignRef";
    case ErrorCode::MalformedMatrix: return "MalformedMatrix";
    case ErrorCode::NotAPlane: return "NotAPlane";
    case ErrorCode::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::ConstructionFailed: return "ConstructionFailed";
    case ErrorCode::MalformedTable: return "MalformedTable";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ExhaustiveOnInfinitePlane: return "ExhaustiveOnInfinitePlane";
    case ErrorCode::BudgetZero: return "BudgetZero";
    case ErrorCode::PlaneTooLarge: return "PlaneTooLarge";
    case ErrorCode::NotATranslate: return "NotATranslate";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::UnknownName: return "UnknownName";
  }
  return "Unknown";
}

}  // namespace incidence
