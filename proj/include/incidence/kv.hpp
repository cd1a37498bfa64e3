#pragma once

#include "incidence/configuration.hpp"
#include "incidence/error.hpp"
#include "incidence/evaluate.hpp"
#include "incidence/finite_plane.hpp"
#include "incidence/moulton.hpp"

#include <map>
#include <sstream>
#include <string>
#include <string_view>

namespace incidence {

std::string point_text(const FinitePlane& pl, PointRef p);
std::string line_text(const FinitePlane& pl, LineRef l);
std::string point_text(const MoultonPlane& pl, const MoultonPoint& p);
std::string line_text(const MoultonPlane& pl, const MoultonLine& l);

PointRef parse_point(const FinitePlane& pl, std::string_view text);
LineRef parse_line(const FinitePlane& pl, std::string_view text);
MoultonPoint parse_point(const MoultonPlane& pl, std::string_view text);
MoultonLine parse_line(const MoultonPlane& pl, std::string_view text);

/// One key=value per line; blank lines ignored. Throws ParseError on a line
/// without '=' or a repeated key.
std::map<std::string, std::string> parse_kv(std::string_view text);

std::string_view mode_name(const Mode& m);

/// Witness lines, each key prefixed by `prefix`.
template <class Plane>
void write_witness(std::ostream& out, const Plane& pl, const Witness<Plane>& w,
                   std::string_view prefix = "") {
  out << prefix << "statement=" << name(w.statement) << '\n';
  out << prefix << "plane=" << w.plane << '\n';
  out << prefix << "index=" << w.instance.index << '\n';
  const auto points = point_roles(w.statement);
  for (std::size_t i = 0; i < points.size(); ++i) {
    out << prefix << "point." << points[i] << '=' << point_text(pl, w.instance.points[i]) << '\n';
  }
  const auto lines = line_roles(w.statement);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    out << prefix << "line." << lines[i] << '=' << line_text(pl, w.instance.lines[i]) << '\n';
  }
  for (const auto& [label, p] : w.derived.points) {
    out << prefix << "derived.point." << label << '=' << point_text(pl, p) << '\n';
  }
  for (const auto& [label, l] : w.derived.lines) {
    out << prefix << "derived.line." << label << '=' << line_text(pl, l) << '\n';
  }
  out << prefix << "failed=" << w.failed_conclusion << '\n';
}

template <class Plane>
std::string witness_kv(const Plane& pl, const Witness<Plane>& w) {
  std::ostringstream out;
  write_witness(out, pl, w);
  return out.str();
}

/// Reads the bindings of a witness written by write_witness and re-evaluates
/// them on `pl`; derived entries and the failure text are recomputed, not
/// trusted.
template <class Plane>
Witness<Plane> parse_witness(const Plane& pl, std::string_view text) {
  const auto kv = parse_kv(text);
  auto get = [&](const std::string& key) -> const std::string& {
    const auto it = kv.find(key);
    if (it == kv.end()) throw Error(ErrorCode::ParseError, "witness lacks key '" + key + "'");
    return it->second;
  };
  const auto st = parse_statement(get("statement"));
  if (!st) throw Error(ErrorCode::ParseError, "unknown statement '" + get("statement") + "'");
  Witness<Plane> w;
  w.statement = *st;
  w.plane = pl.name();
  w.instance.index = std::stoull(get("index"));
  const auto points = point_roles(*st);
  for (std::size_t i = 0; i < points.size(); ++i) {
    w.instance.points[i] = parse_point(pl, get("point." + std::string(points[i])));
  }
  const auto lines = line_roles(*st);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    w.instance.lines[i] = parse_line(pl, get("line." + std::string(lines[i])));
  }
  const auto out = evaluate_instance(pl, *st, w.instance);
  if (out.kind == OutcomeKind::Fails) {
    w.derived = derive(pl, *st, w.instance);
    w.failed_conclusion = std::string(out.reason);
  } else {
    w.failed_conclusion.clear();
  }
  return w;
}

template <class Plane>
void write_report(std::ostream& out, const Plane& pl, const CheckReport<Plane>& r) {
  out << "statement=" << name(r.statement) << '\n';
  out << "plane=" << r.plane << '\n';
  out << "mode=" << mode_name(r.mode) << '\n';
  if (!r.mode.is_exhaustive()) {
    out << "seed=" << r.mode.seed << '\n';
    out << "budget=" << r.mode.budget << '\n';
  }
  out << "instances_checked=" << r.instances_checked << '\n';
  out << "degenerate_skipped=" << r.degenerate_skipped << '\n';
  out << "violations_total=" << r.violations_total << '\n';
  out << "violations_stored=" << r.violations.size() << '\n';
  out << "stopped_early=" << (r.stopped_early ? "true" : "false") << '\n';
  out << "verdict=" << to_string(r.verdict) << '\n';
  for (std::size_t i = 0; i < r.violations.size(); ++i) {
    write_witness(out, pl, r.violations[i], "violation." + std::to_string(i) + ".");
  }
}

template <class Plane>
std::string report_kv(const Plane& pl, const CheckReport<Plane>& r) {
  std::ostringstream out;
  write_report(out, pl, r);
  return out.str();
}

}  // namespace incidence
