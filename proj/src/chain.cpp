#include "incidence/chain.hpp"

#include "incidence/error.hpp"

#include <sstream>

namespace incidence {

Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
Vec2 operator*(const Rational& k, const Vec2& a) { return {k * a.x, k * a.y}; }
Rational cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

RationalTriangle translate(const RationalTriangle& t, const Vec2& d) {
  return {{t.v[0] + d, t.v[1] + d, t.v[2] + d}};
}

bool degenerate(const RationalTriangle& t) {
  return cross(t.v[1] - t.v[0], t.v[2] - t.v[0]) == 0;
}

std::string describe(const Certificate& c) {
  static constexpr const char* kVertex[] = {"A", "B", "C"};
  static constexpr const char* kSide[] = {"BC", "CA", "AB"};
  const bool next = c.owner == Owner::Next;
  return std::string(next ? "next " : "previous ") + kVertex[c.vertex] + " on " +
         (next ? "previous " : "next ") + kSide[c.vertex];
}

bool certificate_holds(const RationalTriangle& prev, const RationalTriangle& next,
                       const Certificate& c) {
  const auto& from = c.owner == Owner::Next ? next : prev;
  const auto& other = c.owner == Owner::Next ? prev : next;
  const auto& p = from.v[c.vertex];
  const auto& q = other.v[(c.vertex + 1) % 3];
  const auto& r = other.v[(c.vertex + 2) % 3];
  return cross(r - q, p - q) == 0;
}

std::optional<Certificate> verify_wld_condition(const RationalTriangle& prev,
                                                const RationalTriangle& next) {
  const Vec2 d = next.v[0] - prev.v[0];
  if (next.v[1] - prev.v[1] != d || next.v[2] - prev.v[2] != d) {
    throw Error(ErrorCode::NotATranslate, "second triangle is not a translate of the first");
  }
  for (Owner owner : {Owner::Next, Owner::Previous}) {
    for (int vertex = 0; vertex < 3; ++vertex) {
      const Certificate c{owner, vertex};
      if (certificate_holds(prev, next, c)) return c;
    }
  }
  return std::nullopt;
}

namespace {

// Hexagon vertices in cyclic order, V[k+1] = V[k] + V[k+2], and the
// certificate of the edge [V[k], V[k+1]].
struct Hexagon {
  std::array<Vec2, 6> v;
  static constexpr std::array<Certificate, 6> kEdge = {{
      {Owner::Next, 0},
      {Owner::Previous, 2},
      {Owner::Next, 1},
      {Owner::Previous, 0},
      {Owner::Next, 2},
      {Owner::Previous, 1},
  }};

  explicit Hexagon(const RationalTriangle& t) {
    const Vec2 u = t.v[1] - t.v[0];
    const Vec2 w = t.v[2] - t.v[0];
    v = {u, w, w - u, -u, -w, u - w};
  }
};

}  // namespace

TranslationChain build_chain(const RationalTriangle& base, const Vec2& target) {
  if (degenerate(base)) throw Error(ErrorCode::DegenerateTriangle, "base triangle is degenerate");
  TranslationChain chain{base, {}, target};
  if (target == Vec2{}) return chain;

  const Hexagon hex(base);
  for (int k = 0; k < 6; ++k) {
    const Vec2& p = hex.v[k];
    const Vec2& q = hex.v[(k + 1) % 6];
    const Vec2& r = hex.v[(k + 2) % 6];
    const Rational det = cross(p, q);
    // target = a p + b q
    const Rational a = cross(target, q) / det;
    const Rational b = cross(p, target) / det;
    if (a < 0 || b < 0) continue;
    // p and q are the endpoints of edge k.
    const Certificate on_edge = Hexagon::kEdge[k];
    const mpz_class na = floor_of(a);
    const mpz_class nb = floor_of(b);
    for (mpz_class i = 0; i < na; ++i) chain.steps.push_back({p, on_edge});
    for (mpz_class i = 0; i < nb; ++i) chain.steps.push_back({q, on_edge});
    const Rational fa = a - Rational(na);
    const Rational fb = b - Rational(nb);
    if (fa == 0 && fb == 0) return chain;
    if (fa + fb == 1) {
      chain.steps.push_back({fa * p + fb * q, on_edge});
      return chain;
    }
    // Close on the edges [q, r] and [-r, p].
    chain.steps.push_back({r + fa * p, Hexagon::kEdge[(k + 1) % 6]});
    chain.steps.push_back({fb * q - r, Hexagon::kEdge[(k + 5) % 6]});
    return chain;
  }
  throw Error(ErrorCode::DegenerateTriangle, "no hexagon cone contains the target");
}

mpz_class chain_length_bound(const RationalTriangle& base, const Vec2& target) {
  const Rational area2 = cross(base.v[1] - base.v[0], base.v[2] - base.v[0]);
  if (area2 == 0) throw Error(ErrorCode::DegenerateTriangle, "base triangle is degenerate");
  auto norm2 = [](const Vec2& d) -> Rational { return d.x * d.x + d.y * d.y; };
  Rational longest = 0;
  for (int i = 0; i < 3; ++i) {
    const Rational side = norm2(base.v[(i + 1) % 3] - base.v[i]);
    if (side > longest) longest = side;
  }
  // (|target| / h)^2 with h = |area2| / longest side.
  const Rational ratio2 = norm2(target) * longest / (area2 * area2);
  return 2 * ceil_sqrt(ratio2) + 2;
}

ChainReport verify_chain(const TranslationChain& chain) {
  ChainReport rep;
  rep.length = chain.steps.size();
  if (degenerate(chain.base)) {
    rep.ok = false;
    rep.reason = "degenerate base";
    return rep;
  }
  RationalTriangle prev = chain.base;
  Vec2 sum;
  for (std::size_t i = 0; i < chain.steps.size(); ++i) {
    const auto& step = chain.steps[i];
    const RationalTriangle next = translate(prev, step.translation);
    if (step.translation == Vec2{}) {
      rep.ok = false;
      rep.failed_step = i;
      rep.reason = "zero translation";
      return rep;
    }
    if (!certificate_holds(prev, next, step.certificate)) {
      rep.ok = false;
      rep.failed_step = i;
      rep.reason = "certificate fails: " + describe(step.certificate);
      return rep;
    }
    sum = sum + step.translation;
    prev = next;
  }
  if (sum != chain.total) {
    rep.ok = false;
    rep.reason = "total mismatch";
  }
  return rep;
}

std::string to_string(const Vec2& v) { return to_string(v.x) + "," + to_string(v.y); }

std::string to_string(const RationalTriangle& t) {
  return to_string(t.v[0]) + ";" + to_string(t.v[1]) + ";" + to_string(t.v[2]);
}

Vec2 parse_vec2(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
    throw Error(ErrorCode::ParseError, "expected 'x,y', got '" + std::string(text) + "'");
  }
  return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

RationalTriangle parse_triangle(std::string_view text) {
  RationalTriangle t;
  for (int i = 0; i < 3; ++i) {
    const auto semi = text.find(';');
    if ((i < 2) != (semi != std::string_view::npos)) {
      throw Error(ErrorCode::ParseError, "expected 'ax,ay;bx,by;cx,cy'");
    }
    t.v[i] = parse_vec2(text.substr(0, semi));
    if (i < 2) text.remove_prefix(semi + 1);
  }
  return t;
}

std::string chain_kv(const TranslationChain& chain) {
  std::ostringstream out;
  out << "base=" << to_string(chain.base) << '\n';
  out << "target=" << to_string(chain.total) << '\n';
  out << "length=" << chain.steps.size() << '\n';
  out << "bound=" << chain_length_bound(chain.base, chain.total).get_str() << '\n';
  for (std::size_t i = 0; i < chain.steps.size(); ++i) {
    out << "step." << i << ".translation=" << to_string(chain.steps[i].translation) << '\n';
    out << "step." << i << ".certificate=" << describe(chain.steps[i].certificate) << '\n';
  }
  return out.str();
}

}  // namespace incidence
