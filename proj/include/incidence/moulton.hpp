#pragma once

#include "incidence/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace incidence {

struct AffinePoint {
  Rational x, y;
  bool operator==(const AffinePoint&) const = default;
};

/// Ideal point of a direction class. `slope` is empty for the vertical
/// class; negative slopes name the class of bent lines with that left slope.
struct IdealPoint {
  std::optional<Rational> slope;
  bool operator==(const IdealPoint&) const = default;
};

using MoultonPoint = std::variant<AffinePoint, IdealPoint>;

struct VerticalLine {
  Rational x0;
  bool operator==(const VerticalLine&) const = default;
};

/// y = m x + b with m >= 0.
struct OrdinaryLine {
  Rational m, b;
  bool operator==(const OrdinaryLine&) const = default;
};

/// m < 0: y = m x + b for x <= 0 and y = 2 m x + b for x > 0.
struct BentLine {
  Rational m, b;
  bool operator==(const BentLine&) const = default;
};

struct LineAtInfinity {
  bool operator==(const LineAtInfinity&) const = default;
};

using MoultonLine = std::variant<VerticalLine, OrdinaryLine, BentLine, LineAtInfinity>;

MoultonPoint affine(Rational x, Rational y);
MoultonPoint ideal(Rational slope);
MoultonPoint ideal_vertical();

/// Line of direction class `slope` (Ordinary for m >= 0, Bent for m < 0).
MoultonLine line_with_slope(Rational m, Rational b);

/// The Moulton plane over the rationals, projectively completed. Stateless;
/// every operation is exact.
class MoultonPlane {
 public:
  using Point = MoultonPoint;
  using Line = MoultonLine;

  const std::string& name() const { return name_; }

  bool incident(const Point& p, const Line& l) const;
  /// Throws IdenticalPoints.
  Line join(const Point& p, const Point& q) const;
  /// Throws IdenticalLines.
  Point meet(const Line& l, const Line& m) const;
  bool collinear(const Point& p, const Point& q, const Point& r) const;

  /// The direction class (ideal point) of a non-infinite line.
  Point direction(const Line& l) const;

 private:
  std::string name_ = "moulton";
};

/// Affine join via the bent-line case analysis. Throws IdenticalPoints.
MoultonLine moulton_join(const AffinePoint& p, const AffinePoint& q);

std::string to_string(const MoultonPoint& p);
std::string to_string(const MoultonLine& l);
/// Inverse of to_string; throws ParseError.
MoultonPoint parse_moulton_point(std::string_view text);
MoultonLine parse_moulton_line(std::string_view text);

}  // namespace incidence
