#pragma once

#include "incidence/configuration.hpp"

#include <optional>

namespace incidence {

namespace detail {

template <class Plane>
std::optional<typename Plane::Line> try_join(const Plane& pl, const typename Plane::Point& p,
                                             const typename Plane::Point& q) {
  if (p == q) return std::nullopt;
  return pl.join(p, q);
}

template <class Plane>
std::optional<typename Plane::Point> try_meet(const Plane& pl, const typename Plane::Line& l,
                                              const typename Plane::Line& m) {
  if (l == m) return std::nullopt;
  return pl.meet(l, m);
}

template <class T, std::size_t N>
bool pairwise_distinct(const std::array<T, N>& v, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      if (v[i] == v[j]) return false;
    }
  }
  return true;
}

// Lines l, m, n through one point. Duplicates count as concurrent.
template <class Plane>
bool concurrent(const Plane& pl, const typename Plane::Line& l, const typename Plane::Line& m,
                const typename Plane::Line& n) {
  if (l == m || l == n || m == n) return true;
  return pl.incident(pl.meet(l, m), n);
}

// Common point of lines pq and rs, assuming all four points distinct where
// joined and the two lines distinct.
template <class Plane>
std::optional<typename Plane::Point> cross(const Plane& pl, const typename Plane::Point& p,
                                           const typename Plane::Point& q,
                                           const typename Plane::Point& r,
                                           const typename Plane::Point& s) {
  auto l = try_join(pl, p, q);
  auto m = try_join(pl, r, s);
  if (!l || !m) return std::nullopt;
  return try_meet(pl, *l, *m);
}

template <class Plane>
Outcome desargues_hypotheses(const Plane& pl, Statement st, const Instance<Plane>& in) {
  using namespace desargues;
  const auto& p = in.points;
  auto col = [&](int i, int j, int k) { return pl.collinear(p[i], p[j], p[k]); };

  if (!pairwise_distinct(p, 7)) return Outcome::degenerate("points not pairwise distinct");
  if (col(A, B, C)) return Outcome::degenerate("triangle ABC collinear");
  if (col(A1, B1, C1)) return Outcome::degenerate("triangle A'B'C' collinear");
  if (st == Statement::cwLD) {
    if (!col(S, A, A1) || !col(S, B, B1)) {
      return Outcome::degenerate("hypothesis: S is not the meet of AA' and BB'");
    }
    const auto aa = pl.join(p[A], p[A1]);
    const auto bb = pl.join(p[B], p[B1]);
    const auto cc = pl.join(p[C], p[C1]);
    if (aa == bb || aa == cc || bb == cc) return Outcome::degenerate("lines AA', BB', CC' not distinct");
  } else {
    if (!col(S, A, A1) || !col(S, B, B1) || !col(S, C, C1)) {
      return Outcome::degenerate("hypothesis: AA', BB', CC' not concurrent at S");
    }
    if (col(S, A, B) || col(S, A, C) || col(S, B, C)) {
      return Outcome::degenerate("lines AA', BB', CC' not distinct");
    }
  }
  if (pl.join(p[A], p[B]) == pl.join(p[A1], p[B1]) || pl.join(p[A], p[C]) == pl.join(p[A1], p[C1]) ||
      pl.join(p[B], p[C]) == pl.join(p[B1], p[C1])) {
    return Outcome::degenerate("corresponding sides coincide");
  }

  if (st == Statement::D) return Outcome::holds();
  if (st == Statement::wD) {
    return col(A1, B, C) ? Outcome::holds() : Outcome::degenerate("hypothesis: A', B, C not collinear");
  }
  if (st == Statement::cD) {
    const auto z = *cross(pl, p[B], p[C], p[B1], p[C1]);
    return pl.collinear(p[A], p[A1], z) ? Outcome::holds()
                                        : Outcome::degenerate("hypothesis: A, A', Z not collinear");
  }

  const auto x = *cross(pl, p[A], p[B], p[A1], p[B1]);
  const auto y = *cross(pl, p[A], p[C], p[A1], p[C1]);
  const bool sxy = pl.collinear(p[S], x, y);
  switch (st) {
    case Statement::HD:
      return sxy ? Outcome::degenerate("hypothesis: S, X, Y collinear") : Outcome::holds();
    case Statement::LD:
      return sxy ? Outcome::holds() : Outcome::degenerate("hypothesis: S, X, Y not collinear");
    case Statement::wLD:
      if (!sxy) return Outcome::degenerate("hypothesis: S, X, Y not collinear");
      return col(A1, B, C) ? Outcome::holds() : Outcome::degenerate("hypothesis: A', B, C not collinear");
    case Statement::cwLD: {
      if (!col(A1, B, C)) return Outcome::degenerate("hypothesis: A', B, C not collinear");
      const auto z = *cross(pl, p[B], p[C], p[B1], p[C1]);
      if (!sxy || !pl.collinear(x, y, z)) return Outcome::degenerate("hypothesis: S, X, Y, Z not collinear");
      return Outcome::holds();
    }
    default:
      return Outcome::holds();
  }
}

template <class Plane>
Outcome pappus_hypotheses(const Plane& pl, Statement st, const Instance<Plane>& in) {
  using namespace pappus;
  const auto& p = in.points;
  auto col = [&](int i, int j, int k) { return pl.collinear(p[i], p[j], p[k]); };

  if (!pairwise_distinct(p, 6)) return Outcome::degenerate("points not pairwise distinct");
  if (!col(A, B, C) || !col(A1, B1, C1)) return Outcome::degenerate("hypothesis: ranges not collinear");
  if (col(A, B, A1)) return Outcome::degenerate("ranges lie on one line");
  if (col(A, B, B1) || col(A, B, C1) || col(A1, B1, A) || col(A1, B1, B) || col(A1, B1, C)) {
    return Outcome::degenerate("range point at the common point M");
  }
  if (st == Statement::pP || st == Statement::sPP) {
    if (col(A, B, S) || col(A1, B1, S)) return Outcome::degenerate("S on a range line");
    if (!col(S, A, A1) || !col(S, B, B1) || !col(S, C, C1)) {
      return Outcome::degenerate("hypothesis: ranges not perspective from S");
    }
  }
  if (st == Statement::LP) {
    const auto m = *cross(pl, p[A], p[B], p[A1], p[B1]);
    const auto c2 = *cross(pl, p[A], p[B1], p[A1], p[B]);
    const auto a2 = *cross(pl, p[B], p[C1], p[B1], p[C]);
    if (!pl.collinear(m, c2, a2)) return Outcome::degenerate("hypothesis: M, C'', A'' not collinear");
  }
  return Outcome::holds();
}

template <class Plane>
Outcome pencil_hypotheses(const Plane& pl, const Instance<Plane>& in) {
  using namespace pencil;
  const auto& l = in.lines;
  if (!pairwise_distinct(l, 6)) return Outcome::degenerate("lines not pairwise distinct");
  if (!concurrent(pl, l[a], l[b], l[c]) || !concurrent(pl, l[a1], l[b1], l[c1])) {
    return Outcome::degenerate("hypothesis: pencils not concurrent");
  }
  const auto o = pl.meet(l[a], l[b]);
  const auto o1 = pl.meet(l[a1], l[b1]);
  if (o == o1) return Outcome::degenerate("pencils share their center");
  if (pl.incident(o1, l[a]) || pl.incident(o1, l[b]) || pl.incident(o1, l[c]) ||
      pl.incident(o, l[a1]) || pl.incident(o, l[b1]) || pl.incident(o, l[c1])) {
    return Outcome::degenerate("pencil line through both centers");
  }
  return Outcome::holds();
}

}  // namespace detail

/// Holds when every hypothesis and the non-degeneracy profile are met;
/// otherwise Degenerate with the first failing clause.
template <class Plane>
Outcome check_hypotheses(const Plane& pl, Statement st, const Instance<Plane>& in) {
  switch (family(st)) {
    case Family::Desargues:
      return detail::desargues_hypotheses(pl, st, in);
    case Family::Pappus:
      return detail::pappus_hypotheses(pl, st, in);
    case Family::DualPappus:
      return detail::pencil_hypotheses(pl, in);
  }
  return Outcome::holds();
}

/// Conclusion only; the instance must already satisfy check_hypotheses.
template <class Plane>
Outcome evaluate_conclusion(const Plane& pl, Statement st, const Instance<Plane>& in) {
  using detail::cross;
  const auto& p = in.points;
  const auto undefined = Outcome::degenerate("derivation: undefined join or meet");
  switch (family(st)) {
    case Family::Desargues: {
      using namespace desargues;
      if (st == Statement::cwLD) {
        return pl.collinear(p[S], p[C], p[C1]) ? Outcome::holds()
                                               : Outcome::fails("S not incident with CC'");
      }
      const auto x = cross(pl, p[A], p[B], p[A1], p[B1]);
      const auto y = cross(pl, p[A], p[C], p[A1], p[C1]);
      const auto z = cross(pl, p[B], p[C], p[B1], p[C1]);
      if (!x || !y || !z) return undefined;
      if (st == Statement::HD || st == Statement::LD || st == Statement::wLD) {
        const auto axis = detail::try_join(pl, *x, *y);
        if (!axis) return undefined;
        return pl.incident(*z, *axis) ? Outcome::holds() : Outcome::fails("Z not incident with XY");
      }
      return pl.collinear(*x, *y, *z) ? Outcome::holds() : Outcome::fails("X, Y, Z not collinear");
    }
    case Family::Pappus: {
      using namespace pappus;
      const auto c2 = cross(pl, p[A], p[B1], p[A1], p[B]);
      const auto a2 = cross(pl, p[B], p[C1], p[B1], p[C]);
      if (!c2 || !a2) return undefined;
      if (st == Statement::sPP) {
        const auto m = cross(pl, p[A], p[B], p[A1], p[B1]);
        if (!m) return undefined;
        return pl.collinear(*m, *c2, *a2) ? Outcome::holds()
                                          : Outcome::fails("M, C'', A'' not collinear");
      }
      const auto b2 = cross(pl, p[A], p[C1], p[A1], p[C]);
      if (!b2) return undefined;
      return pl.collinear(*a2, *b2, *c2) ? Outcome::holds()
                                         : Outcome::fails("A'', B'', C'' not collinear");
    }
    case Family::DualPappus: {
      using namespace pencil;
      const auto& l = in.lines;
      auto side = [&](int i, int j, int k, int m) -> std::optional<typename Plane::Line> {
        auto u = detail::try_meet(pl, l[i], l[j]);
        auto v = detail::try_meet(pl, l[k], l[m]);
        if (!u || !v) return std::nullopt;
        return detail::try_join(pl, *u, *v);
      };
      const auto c2 = side(a, b1, a1, b);
      const auto b2 = side(a, c1, a1, c);
      const auto a2 = side(b, c1, b1, c);
      if (!c2 || !b2 || !a2) return undefined;
      return detail::concurrent(pl, *a2, *b2, *c2) ? Outcome::holds()
                                                    : Outcome::fails("a'', b'', c'' not concurrent");
    }
  }
  return Outcome::holds();
}

/// Hypotheses, then conclusion.
template <class Plane>
Outcome evaluate_instance(const Plane& pl, Statement st, const Instance<Plane>& in) {
  const auto hyp = check_hypotheses(pl, st, in);
  if (hyp.kind != OutcomeKind::Holds) return hyp;
  return evaluate_conclusion(pl, st, in);
}

/// Named auxiliary points (and lines for PB) of a hypothesis-valid instance,
/// for reports.
template <class Plane>
Derived<Plane> derive(const Plane& pl, Statement st, const Instance<Plane>& in) {
  using detail::cross;
  Derived<Plane> out;
  const auto& p = in.points;
  auto add = [&](const char* name, const auto& pt) {
    if (pt) out.points.emplace_back(name, *pt);
  };
  switch (family(st)) {
    case Family::Desargues: {
      using namespace desargues;
      const auto x = cross(pl, p[A], p[B], p[A1], p[B1]);
      const auto y = cross(pl, p[A], p[C], p[A1], p[C1]);
      add("X", x);
      add("Y", y);
      add("Z", cross(pl, p[B], p[C], p[B1], p[C1]));
      if (x && y && !(*x == *y)) out.lines.emplace_back("s", pl.join(*x, *y));
      break;
    }
    case Family::Pappus: {
      using namespace pappus;
      add("M", cross(pl, p[A], p[B], p[A1], p[B1]));
      add("A''", cross(pl, p[B], p[C1], p[B1], p[C]));
      add("B''", cross(pl, p[A], p[C1], p[A1], p[C]));
      add("C''", cross(pl, p[A], p[B1], p[A1], p[B]));
      break;
    }
    case Family::DualPappus: {
      using namespace pencil;
      const auto& l = in.lines;
      auto side = [&](const char* name, int i, int j, int k, int m) {
        auto u = detail::try_meet(pl, l[i], l[j]);
        auto v = detail::try_meet(pl, l[k], l[m]);
        if (u && v && !(*u == *v)) out.lines.emplace_back(name, pl.join(*u, *v));
      };
      if (auto o = detail::try_meet(pl, l[a], l[b])) out.points.emplace_back("O", *o);
      if (auto o = detail::try_meet(pl, l[a1], l[b1])) out.points.emplace_back("O'", *o);
      side("a''", b, c1, b1, c);
      side("b''", a, c1, a1, c);
      side("c''", a, b1, a1, b);
      break;
    }
  }
  return out;
}

}  // namespace incidence
