#include "incidence/matrix_io.hpp"

#include "incidence/error.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace incidence {

namespace {

[[noreturn]] void parse_error(std::size_t line, std::size_t column, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " +
                                         std::to_string(column) + ": " + what);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::size_t parse_count(std::string_view field, std::string_view key, std::size_t column) {
  if (field.substr(0, key.size()) != key) {
    parse_error(1, column, "expected '" + std::string(key) + "'");
  }
  const auto digits = field.substr(key.size());
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
    parse_error(1, column + key.size(), "expected a count after '" + std::string(key) + "'");
  }
  return value;
}

}  // namespace

IncidenceStructure load_incidence_matrix(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) parse_error(1, 1, "missing header");
  const auto header = lines[0];
  const auto space = header.find(' ');
  if (space == std::string_view::npos) parse_error(1, 1, "header must be 'points=<n> lines=<m>'");
  const std::size_t n = parse_count(header.substr(0, space), "points=", 1);
  const std::size_t m = parse_count(header.substr(space + 1), "lines=", space + 2);

  std::vector<std::uint8_t> matrix;
  matrix.reserve(n * m);
  for (std::size_t r = 0; r < n; ++r) {
    if (r + 1 >= lines.size()) parse_error(r + 2, 1, "missing row " + std::to_string(r + 1));
    const auto row = lines[r + 1];
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] != '0' && row[c] != '1') parse_error(r + 2, c + 1, "expected '0' or '1'");
    }
    if (row.size() != m) {
      parse_error(r + 2, std::min(row.size(), m) + 1,
                  "row has " + std::to_string(row.size()) + " entries, expected " +
                      std::to_string(m));
    }
    for (char ch : row) matrix.push_back(ch == '1' ? 1 : 0);
  }
  for (std::size_t extra = n + 1; extra < lines.size(); ++extra) {
    if (!lines[extra].empty()) parse_error(extra + 1, 1, "unexpected content after the last row");
  }
  return IncidenceStructure(n, m, std::move(matrix));
}

std::string export_incidence_matrix(const IncidenceStructure& s) {
  std::string out = "points=" + std::to_string(s.n_points()) +
                    " lines=" + std::to_string(s.n_lines()) + "\n";
  out.reserve(out.size() + s.n_points() * (s.n_lines() + 1));
  for (std::size_t p = 0; p < s.n_points(); ++p) {
    for (std::size_t l = 0; l < s.n_lines(); ++l) out.push_back(s.incident(p, l) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

IncidenceStructure read_incidence_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_incidence_matrix(buf.str());
}

void write_incidence_file(const std::string& path, const IncidenceStructure& s) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
  out << export_incidence_matrix(s);
}

}  // namespace incidence
