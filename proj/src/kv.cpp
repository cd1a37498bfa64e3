#include "incidence/kv.hpp"

namespace incidence {

std::string point_text(const FinitePlane& pl, PointRef p) { return pl.label(p); }
std::string line_text(const FinitePlane& pl, LineRef l) { return pl.label(l); }
std::string point_text(const MoultonPlane&, const MoultonPoint& p) { return to_string(p); }
std::string line_text(const MoultonPlane&, const MoultonLine& l) { return to_string(l); }

PointRef parse_point(const FinitePlane& pl, std::string_view text) {
  if (auto p = pl.find_point(text)) return *p;
  throw Error(ErrorCode::ParseError, "no point '" + std::string(text) + "' in " + pl.name());
}

LineRef parse_line(const FinitePlane& pl, std::string_view text) {
  if (auto l = pl.find_line(text)) return *l;
  throw Error(ErrorCode::ParseError, "no line '" + std::string(text) + "' in " + pl.name());
}

MoultonPoint parse_point(const MoultonPlane&, std::string_view text) {
  return parse_moulton_point(text);
}

MoultonLine parse_line(const MoultonPlane&, std::string_view text) {
  return parse_moulton_line(text);
}

std::map<std::string, std::string> parse_kv(std::string_view text) {
  std::map<std::string, std::string> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": missing '='");
    }
    auto [it, fresh] = out.emplace(std::string(line.substr(0, eq)), std::string(line.substr(eq + 1)));
    if (!fresh) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": repeated key '" + it->first + "'");
    }
  }
  return out;
}

std::string_view mode_name(const Mode& m) { return m.is_exhaustive() ? "exhaustive" : "sampled"; }

}  // namespace incidence
