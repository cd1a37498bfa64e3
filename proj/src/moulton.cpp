#include "incidence/moulton.hpp"

#include "incidence/error.hpp"

#include <utility>

namespace incidence {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Value of a non-vertical, finite line at abscissa x.
Rational y_at(const MoultonLine& l, const Rational& x) {
  if (const auto* o = std::get_if<OrdinaryLine>(&l)) return o->m * x + o->b;
  const auto& bent = std::get<BentLine>(l);
  return x <= 0 ? Rational(bent.m * x + bent.b) : Rational(2 * bent.m * x + bent.b);
}

// Nominal slope and intercept of an ordinary or bent line.
std::pair<Rational, Rational> slope_intercept(const MoultonLine& l) {
  if (const auto* o = std::get_if<OrdinaryLine>(&l)) return {o->m, o->b};
  const auto& bent = std::get<BentLine>(l);
  return {bent.m, bent.b};
}

MoultonPoint meet_sloped(const MoultonLine& l1, const MoultonLine& l2) {
  const auto [m1, b1] = slope_intercept(l1);
  const auto [m2, b2] = slope_intercept(l2);
  if (m1 == m2) return ideal(m1);
  // Left half-plane (x <= 0): both lines carry their nominal slopes.
  Rational x = (b2 - b1) / (m1 - m2);
  if (x <= 0) return affine(x, y_at(l1, x));
  // Right half-plane: bent lines double their slope.
  const Rational k1 = std::holds_alternative<BentLine>(l1) ? Rational(2 * m1) : m1;
  const Rational k2 = std::holds_alternative<BentLine>(l2) ? Rational(2 * m2) : m2;
  x = (b2 - b1) / (k1 - k2);
  return affine(x, y_at(l1, x));
}

std::string_view strip(std::string_view s, std::string_view prefix,
                       std::string_view suffix) {
  if (s.size() < prefix.size() + suffix.size() || s.substr(0, prefix.size()) != prefix ||
      s.substr(s.size() - suffix.size()) != suffix) {
    return {};
  }
  return s.substr(prefix.size(), s.size() - prefix.size() - suffix.size());
}

std::pair<Rational, Rational> parse_pair(std::string_view inner, std::string_view whole) {
  const auto comma = inner.find(',');
  if (comma == std::string_view::npos) {
    throw Error(ErrorCode::ParseError, "expected a pair in '" + std::string(whole) + "'");
  }
  return {parse_rational(inner.substr(0, comma)), parse_rational(inner.substr(comma + 1))};
}

}  // namespace

MoultonPoint affine(Rational x, Rational y) {
  return AffinePoint{std::move(x), std::move(y)};
}

MoultonPoint ideal(Rational slope) { return IdealPoint{std::move(slope)}; }

MoultonPoint ideal_vertical() { return IdealPoint{std::nullopt}; }

MoultonLine line_with_slope(Rational m, Rational b) {
  if (m >= 0) return OrdinaryLine{std::move(m), std::move(b)};
  return BentLine{std::move(m), std::move(b)};
}

MoultonLine moulton_join(const AffinePoint& p, const AffinePoint& q) {
  if (p == q) throw Error(ErrorCode::IdenticalPoints, "join of a point with itself");
  if (p.x == q.x) return VerticalLine{p.x};
  const auto& [x1, y1] = p.x < q.x ? p : q;
  const auto& [x2, y2] = p.x < q.x ? q : p;
  const Rational k = (y2 - y1) / (x2 - x1);
  if (k >= 0) return OrdinaryLine{k, y1 - k * x1};
  if (x2 <= 0) return BentLine{k, y1 - k * x1};
  if (x1 >= 0) {
    // Both on the right piece, whose slope is twice the nominal one.
    const Rational m = k / 2;
    return BentLine{m, y1 - k * x1};
  }
  // Straddling the axis: y1 = m x1 + b and y2 = 2 m x2 + b.
  const Rational m = (y2 - y1) / (2 * x2 - x1);
  return BentLine{m, y1 - m * x1};
}

bool MoultonPlane::incident(const Point& p, const Line& l) const {
  if (const auto* a = std::get_if<AffinePoint>(&p)) {
    return std::visit(
        overloaded{
            [&](const VerticalLine& v) { return a->x == v.x0; },
            [&](const LineAtInfinity&) { return false; },
            [&](const auto&) { return a->y == y_at(l, a->x); },
        },
        l);
  }
  const auto& slope = std::get<IdealPoint>(p).slope;
  return std::visit(
      overloaded{
          [&](const VerticalLine&) { return !slope.has_value(); },
          [&](const OrdinaryLine& o) { return slope.has_value() && *slope == o.m; },
          [&](const BentLine& b) { return slope.has_value() && *slope == b.m; },
          [&](const LineAtInfinity&) { return true; },
      },
      l);
}

MoultonPlane::Line MoultonPlane::join(const Point& p, const Point& q) const {
  if (p == q) throw Error(ErrorCode::IdenticalPoints, "join of a point with itself");
  const auto* a = std::get_if<AffinePoint>(&p);
  const auto* b = std::get_if<AffinePoint>(&q);
  if (a && b) return moulton_join(*a, *b);
  if (!a && !b) return LineAtInfinity{};
  const auto& pt = a ? *a : *b;
  const auto& slope = std::get<IdealPoint>(a ? q : p).slope;
  if (!slope) return VerticalLine{pt.x};
  const Rational& m = *slope;
  if (m >= 0) return OrdinaryLine{m, pt.y - m * pt.x};
  const Rational k = pt.x <= 0 ? m : Rational(2 * m);
  return BentLine{m, pt.y - k * pt.x};
}

MoultonPlane::Point MoultonPlane::direction(const Line& l) const {
  return std::visit(
      overloaded{
          [](const VerticalLine&) { return ideal_vertical(); },
          [](const OrdinaryLine& o) { return ideal(o.m); },
          [](const BentLine& b) { return ideal(b.m); },
          [](const LineAtInfinity&) -> MoultonPoint {
            throw Error(ErrorCode::IdenticalLines, "the line at infinity has no direction");
          },
      },
      l);
}

MoultonPlane::Point MoultonPlane::meet(const Line& l, const Line& m) const {
  if (l == m) throw Error(ErrorCode::IdenticalLines, "meet of a line with itself");
  if (std::holds_alternative<LineAtInfinity>(l)) return direction(m);
  if (std::holds_alternative<LineAtInfinity>(m)) return direction(l);
  const auto* vl = std::get_if<VerticalLine>(&l);
  const auto* vm = std::get_if<VerticalLine>(&m);
  if (vl && vm) return ideal_vertical();
  if (vl) return affine(vl->x0, y_at(m, vl->x0));
  if (vm) return affine(vm->x0, y_at(l, vm->x0));
  return meet_sloped(l, m);
}

bool MoultonPlane::collinear(const Point& p, const Point& q, const Point& r) const {
  if (p == q || p == r || q == r) return true;
  return incident(r, join(p, q));
}

std::string to_string(const MoultonPoint& p) {
  if (const auto* a = std::get_if<AffinePoint>(&p)) {
    return "(" + to_string(a->x) + "," + to_string(a->y) + ")";
  }
  const auto& slope = std::get<IdealPoint>(p).slope;
  return slope ? "ideal(" + to_string(*slope) + ")" : std::string("ideal(vertical)");
}

std::string to_string(const MoultonLine& l) {
  return std::visit(
      overloaded{
          [](const VerticalLine& v) { return "vertical(" + to_string(v.x0) + ")"; },
          [](const OrdinaryLine& o) {
            return "ordinary(" + to_string(o.m) + "," + to_string(o.b) + ")";
          },
          [](const BentLine& b) {
            return "bent(" + to_string(b.m) + "," + to_string(b.b) + ")";
          },
          [](const LineAtInfinity&) { return std::string("infinity"); },
      },
      l);
}

MoultonPoint parse_moulton_point(std::string_view text) {
  if (text == "ideal(vertical)") return ideal_vertical();
  if (auto inner = strip(text, "ideal(", ")"); !inner.empty()) {
    return ideal(parse_rational(inner));
  }
  if (auto inner = strip(text, "(", ")"); !inner.empty()) {
    auto [x, y] = parse_pair(inner, text);
    return affine(std::move(x), std::move(y));
  }
  throw Error(ErrorCode::ParseError, "not a Moulton point: '" + std::string(text) + "'");
}

MoultonLine parse_moulton_line(std::string_view text) {
  if (text == "infinity") return LineAtInfinity{};
  if (auto inner = strip(text, "vertical(", ")"); !inner.empty()) {
    return VerticalLine{parse_rational(inner)};
  }
  if (auto inner = strip(text, "ordinary(", ")"); !inner.empty()) {
    auto [m, b] = parse_pair(inner, text);
    if (m < 0) throw Error(ErrorCode::ParseError, "ordinary line with negative slope");
    return OrdinaryLine{std::move(m), std::move(b)};
  }
  if (auto inner = strip(text, "bent(", ")"); !inner.empty()) {
    auto [m, b] = parse_pair(inner, text);
    if (m >= 0) throw Error(ErrorCode::ParseError, "bent line needs a negative slope");
    return BentLine{std::move(m), std::move(b)};
  }
  throw Error(ErrorCode::ParseError, "not a Moulton line: '" + std::string(text) + "'");
}

}  // namespace incidence
