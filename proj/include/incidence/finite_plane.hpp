#pragma once

#include "incidence/incidence_structure.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace incidence {

/// Point handle scoped to one FinitePlane; `plane` is the owner's tag.
struct PointRef {
  std::uint32_t plane = 0;
  std::uint32_t index = 0;
  auto operator<=>(const PointRef&) const = default;
};

struct LineRef {
  std::uint32_t plane = 0;
  std::uint32_t index = 0;
  auto operator<=>(const LineRef&) const = default;
};

/// A validated finite projective plane with precomputed join and meet
/// tables. Immutable after construction.
class FinitePlane {
 public:
  using Point = PointRef;
  using Line = LineRef;

  /// Validates `s` (throws NotAPlane with the first violation) and builds
  /// the tables. Empty label vectors get "p<i>" / "l<j>" defaults.
  static std::shared_ptr<const FinitePlane> create(
      IncidenceStructure s, std::string name,
      std::vector<std::string> point_labels = {},
      std::vector<std::string> line_labels = {});

  const std::string& name() const { return name_; }
  const IncidenceStructure& structure() const { return structure_; }
  std::uint32_t tag() const { return tag_; }

  std::size_t n_points() const { return structure_.n_points(); }
  std::size_t n_lines() const { return structure_.n_lines(); }
  /// q for a plane with q + 1 points per line.
  std::size_t order() const { return points_on_[0].size() - 1; }

  PointRef point(std::size_t i) const;
  LineRef line(std::size_t j) const;

  bool incident(PointRef p, LineRef l) const;
  /// Throws IdenticalPoints / ForeignRef.
  LineRef join(PointRef p, PointRef q) const;
  /// Throws IdenticalLines / ForeignRef.
  PointRef meet(LineRef l, LineRef m) const;
  /// Duplicates count as collinear.
  bool collinear(PointRef p, PointRef q, PointRef r) const;

  std::span<const PointRef> points_on(LineRef l) const;
  std::span<const LineRef> lines_through(PointRef p) const;

  const std::string& label(PointRef p) const;
  const std::string& label(LineRef l) const;
  std::optional<PointRef> find_point(std::string_view label) const;
  std::optional<LineRef> find_line(std::string_view label) const;

  // Unchecked table access for the enumeration hot loops. Arguments must be
  // distinct indices of this plane.
  std::uint32_t join_index(std::uint32_t p, std::uint32_t q) const {
    return join_table_[p * n_points() + q];
  }
  std::uint32_t meet_index(std::uint32_t l, std::uint32_t m) const {
    return meet_table_[l * n_lines() + m];
  }

 private:
  FinitePlane() = default;
  void check(PointRef p) const;
  void check(LineRef l) const;

  std::string name_;
  IncidenceStructure structure_;
  std::uint32_t tag_ = 0;
  std::vector<std::uint32_t> join_table_;
  std::vector<std::uint32_t> meet_table_;
  std::vector<std::vector<PointRef>> points_on_;
  std::vector<std::vector<LineRef>> lines_through_;
  std::vector<std::string> point_labels_;
  std::vector<std::string> line_labels_;
  std::unordered_map<std::string, std::uint32_t> point_by_label_;
  std::unordered_map<std::string, std::uint32_t> line_by_label_;
};

using FinitePlanePtr = std::shared_ptr<const FinitePlane>;

}  // namespace incidence
