#pragma once

#include "incidence/rational.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace incidence {

struct Vec2 {
  Rational x, y;
  bool operator==(const Vec2&) const = default;
};

Vec2 operator+(const Vec2& a, const Vec2& b);
Vec2 operator-(const Vec2& a, const Vec2& b);
Vec2 operator-(const Vec2& a);
Vec2 operator*(const Rational& k, const Vec2& a);
/// z-component of the planar cross product.
Rational cross(const Vec2& a, const Vec2& b);

/// Vertices A, B, C of a Euclidean triangle with rational coordinates.
struct RationalTriangle {
  std::array<Vec2, 3> v;
  bool operator==(const RationalTriangle&) const = default;
};

RationalTriangle translate(const RationalTriangle& t, const Vec2& d);
bool degenerate(const RationalTriangle& t);

/// Which triangle of a consecutive pair supplies the vertex.
enum class Owner { Previous, Next };

/// Vertex `vertex` (0 = A, 1 = B, 2 = C) of `owner` lies on the side line of
/// the other triangle joining the images of the remaining two vertices.
struct Certificate {
  Owner owner = Owner::Next;
  int vertex = 0;
  bool operator==(const Certificate&) const = default;
};

std::string describe(const Certificate& c);
/// True iff the incidence named by `c` holds exactly.
bool certificate_holds(const RationalTriangle& prev, const RationalTriangle& next, const Certificate& c);

struct ChainStep {
  Vec2 translation;
  Certificate certificate;
};

struct TranslationChain {
  RationalTriangle base;
  std::vector<ChainStep> steps;
  Vec2 total;
};

/// Tries the six vertex/side incidences in a fixed order and returns the
/// first that holds. Throws NotATranslate unless `next` is a translate of
/// `prev`.
std::optional<Certificate> verify_wld_condition(const RationalTriangle& prev,
                                                const RationalTriangle& next);

/// Chain of translates from `base` to `base + target`. Every step lies on the
/// boundary of the hexagon spanned by ±(B-A), ±(C-A), ±(C-B), which is
/// exactly the set of translations meeting one of the six incidences.
/// Throws DegenerateTriangle.
TranslationChain build_chain(const RationalTriangle& base, const Vec2& target);

/// 2 * ceil(|target| / h) + 2 with h the shortest height of `base`.
mpz_class chain_length_bound(const RationalTriangle& base, const Vec2& target);

struct ChainReport {
  bool ok = true;
  std::size_t length = 0;
  std::optional<std::size_t> failed_step;
  std::string reason;
};

/// Exact re-check of every step certificate and of the total.
ChainReport verify_chain(const TranslationChain& chain);

std::string to_string(const Vec2& v);
std::string to_string(const RationalTriangle& t);
/// "x,y"; throws ParseError.
Vec2 parse_vec2(std::string_view text);
/// "ax,ay;bx,by;cx,cy"; throws ParseError.
RationalTriangle parse_triangle(std::string_view text);

/// key=value lines: base, target, length, bound, and one line per step.
std::string chain_kv(const TranslationChain& chain);

}  // namespace incidence
