#pragma once

#include "incidence/incidence_structure.hpp"

#include <string>
#include <string_view>

namespace incidence {

/// Parses "points=<n> lines=<m>" followed by n rows of m characters from
/// {0,1}. Trailing '\r' and a final newline are tolerated; anything else
/// raises ParseError naming the line and column.
IncidenceStructure load_incidence_matrix(std::string_view text);

/// Exact inverse of load_incidence_matrix; rows end with '\n'.
std::string export_incidence_matrix(const IncidenceStructure& s);

IncidenceStructure read_incidence_file(const std::string& path);
void write_incidence_file(const std::string& path, const IncidenceStructure& s);

}  // namespace incidence
