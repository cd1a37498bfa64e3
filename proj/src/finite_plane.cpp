#include "incidence/finite_plane.hpp"

#include "incidence/error.hpp"

#include <atomic>

namespace incidence {

namespace {

std::atomic<std::uint32_t> next_tag{1};

}  // namespace

std::shared_ptr<const FinitePlane> FinitePlane::create(
    IncidenceStructure s, std::string name,
    std::vector<std::string> point_labels,
    std::vector<std::string> line_labels) {
  const auto report = validate_axioms(s, 1);
  if (!report.ok()) {
    throw Error(ErrorCode::NotAPlane,
                name + " is not a projective plane: " +
                    describe(report.violations.front()));
  }
  const std::size_t np = s.n_points();
  const std::size_t nl = s.n_lines();
  if (point_labels.empty()) {
    for (std::size_t i = 0; i < np; ++i) point_labels.push_back("p" + std::to_string(i));
  }
  if (line_labels.empty()) {
    for (std::size_t j = 0; j < nl; ++j) line_labels.push_back("l" + std::to_string(j));
  }
  if (point_labels.size() != np || line_labels.size() != nl) {
    throw Error(ErrorCode::MalformedMatrix, "label count does not match " + name);
  }

  std::shared_ptr<FinitePlane> plane(new FinitePlane());
  plane->name_ = std::move(name);
  plane->tag_ = next_tag.fetch_add(1);
  plane->structure_ = std::move(s);
  const auto& st = plane->structure_;

  plane->points_on_.resize(nl);
  plane->lines_through_.resize(np);
  for (std::size_t p = 0; p < np; ++p) {
    for (std::size_t l = 0; l < nl; ++l) {
      if (!st.incident(p, l)) continue;
      plane->points_on_[l].push_back(plane->point(p));
      plane->lines_through_[p].push_back(plane->line(l));
    }
  }

  constexpr auto kNone = static_cast<std::uint32_t>(-1);
  plane->join_table_.assign(np * np, kNone);
  for (std::size_t l = 0; l < nl; ++l) {
    const auto& pts = plane->points_on_[l];
    for (auto p : pts) {
      for (auto q : pts) {
        if (p != q) plane->join_table_[p.index * np + q.index] = static_cast<std::uint32_t>(l);
      }
    }
  }
  plane->meet_table_.assign(nl * nl, kNone);
  for (std::size_t p = 0; p < np; ++p) {
    const auto& lines = plane->lines_through_[p];
    for (auto l : lines) {
      for (auto m : lines) {
        if (l != m) plane->meet_table_[l.index * nl + m.index] = static_cast<std::uint32_t>(p);
      }
    }
  }

  plane->point_labels_ = std::move(point_labels);
  plane->line_labels_ = std::move(line_labels);
  for (std::size_t i = 0; i < np; ++i) {
    plane->point_by_label_.emplace(plane->point_labels_[i], static_cast<std::uint32_t>(i));
  }
  for (std::size_t j = 0; j < nl; ++j) {
    plane->line_by_label_.emplace(plane->line_labels_[j], static_cast<std::uint32_t>(j));
  }
  return plane;
}

PointRef FinitePlane::point(std::size_t i) const {
  if (i >= n_points()) {
    throw Error(ErrorCode::ForeignRef, "point index out of range in " + name_);
  }
  return {tag_, static_cast<std::uint32_t>(i)};
}

LineRef FinitePlane::line(std::size_t j) const {
  if (j >= n_lines()) {
    throw Error(ErrorCode::ForeignRef, "line index out of range in " + name_);
  }
  return {tag_, static_cast<std::uint32_t>(j)};
}

void FinitePlane::check(PointRef p) const {
  if (p.plane != tag_ || p.index >= n_points()) {
    throw Error(ErrorCode::ForeignRef, "point does not belong to " + name_);
  }
}

void FinitePlane::check(LineRef l) const {
  if (l.plane != tag_ || l.index >= n_lines()) {
    throw Error(ErrorCode::ForeignRef, "line does not belong to " + name_);
  }
}

bool FinitePlane::incident(PointRef p, LineRef l) const {
  check(p);
  check(l);
  return structure_.incident(p.index, l.index);
}

LineRef FinitePlane::join(PointRef p, PointRef q) const {
  check(p);
  check(q);
  if (p == q) throw Error(ErrorCode::IdenticalPoints, "join of a point with itself");
  return {tag_, join_index(p.index, q.index)};
}

PointRef FinitePlane::meet(LineRef l, LineRef m) const {
  check(l);
  check(m);
  if (l == m) throw Error(ErrorCode::IdenticalLines, "meet of a line with itself");
  return {tag_, meet_index(l.index, m.index)};
}

bool FinitePlane::collinear(PointRef p, PointRef q, PointRef r) const {
  check(p);
  check(q);
  check(r);
  if (p == q || p == r) return true;
  if (q == r) return true;
  return structure_.incident(r.index, join_index(p.index, q.index));
}

std::span<const PointRef> FinitePlane::points_on(LineRef l) const {
  check(l);
  return points_on_[l.index];
}

std::span<const LineRef> FinitePlane::lines_through(PointRef p) const {
  check(p);
  return lines_through_[p.index];
}

const std::string& FinitePlane::label(PointRef p) const {
  check(p);
  return point_labels_[p.index];
}

const std::string& FinitePlane::label(LineRef l) const {
  check(l);
  return line_labels_[l.index];
}

std::optional<PointRef> FinitePlane::find_point(std::string_view label) const {
  auto it = point_by_label_.find(std::string(label));
  if (it == point_by_label_.end()) return std::nullopt;
  return PointRef{tag_, it->second};
}

std::optional<LineRef> FinitePlane::find_line(std::string_view label) const {
  auto it = line_by_label_.find(std::string(label));
  if (it == line_by_label_.end()) return std::nullopt;
  return LineRef{tag_, it->second};
}

}  // namespace incidence
