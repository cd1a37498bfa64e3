#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace incidence {

/// The twelve configuration statements.
enum class Statement : std::uint8_t { D, HD, LD, wLD, cwLD, wD, cD, P, PB, pP, sPP, LP };

inline constexpr std::array<Statement, 12> kAllStatements = {
    Statement::D,  Statement::HD, Statement::LD, Statement::wLD,
    Statement::cwLD, Statement::wD, Statement::cD, Statement::P,
    Statement::PB, Statement::pP, Statement::sPP, Statement::LP,
};

/// Desargues: two triangles perspective from a center. Pappus: two point
/// ranges on distinct lines. DualPappus: two line pencils.
enum class Family { Desargues, Pappus, DualPappus };

Family family(Statement s);
std::string_view name(Statement s);
std::optional<Statement> parse_statement(std::string_view text);

/// Binding role names, in Instance slot order.
std::span<const std::string_view> point_roles(Statement s);
std::span<const std::string_view> line_roles(Statement s);

// Slot indices of the Desargues family bindings.
namespace desargues {
inline constexpr int S = 0, A = 1, B = 2, C = 3, A1 = 4, B1 = 5, C1 = 6;
}
// Slot indices of the Pappus family bindings (S only for pP and sPP).
namespace pappus {
inline constexpr int A = 0, B = 1, C = 2, A1 = 3, B1 = 4, C1 = 5, S = 6;
}
// Slot indices of the dual Pappus (line pencil) bindings.
namespace pencil {
inline constexpr int a = 0, b = 1, c = 2, a1 = 3, b1 = 4, c1 = 5;
}

}  // namespace incidence
