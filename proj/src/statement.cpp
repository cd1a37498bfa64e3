#include "incidence/statement.hpp"

#include "incidence/configuration.hpp"

namespace incidence {

namespace {

constexpr std::array<std::string_view, 12> kNames = {
    "D", "HD", "LD", "wLD", "cwLD", "wD", "cD", "P", "PB", "pP", "sPP", "LP"};

constexpr std::array<std::string_view, 7> kDesarguesRoles = {"S", "A", "B", "C", "A'", "B'", "C'"};
constexpr std::array<std::string_view, 7> kPerspectiveRoles = {"A", "B", "C", "A'", "B'", "C'", "S"};
constexpr std::array<std::string_view, 6> kLineRoles = {"a", "b", "c", "a'", "b'", "c'"};

}  // namespace

Family family(Statement s) {
  switch (s) {
    case Statement::P:
    case Statement::pP:
    case Statement::sPP:
    case Statement::LP:
      return Family::Pappus;
    case Statement::PB:
      return Family::DualPappus;
    default:
      return Family::Desargues;
  }
}

std::string_view name(Statement s) { return kNames[static_cast<std::size_t>(s)]; }

std::optional<Statement> parse_statement(std::string_view text) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == text) return static_cast<Statement>(i);
  }
  return std::nullopt;
}

std::span<const std::string_view> point_roles(Statement s) {
  switch (family(s)) {
    case Family::Desargues:
      return kDesarguesRoles;
    case Family::Pappus:
      if (s == Statement::pP || s == Statement::sPP) return kPerspectiveRoles;
      return std::span(kPerspectiveRoles).first(6);
    case Family::DualPappus:
      return {};
  }
  return {};
}

std::span<const std::string_view> line_roles(Statement s) {
  if (family(s) == Family::DualPappus) return kLineRoles;
  return {};
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds:
      return "holds";
    case Verdict::Fails:
      return "fails";
    case Verdict::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

}  // namespace incidence
