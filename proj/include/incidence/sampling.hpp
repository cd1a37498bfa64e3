#pragma once

#include "incidence/configuration.hpp"
#include "incidence/evaluate.hpp"
#include "incidence/finite_plane.hpp"
#include "incidence/moulton.hpp"

#include <cstdint>
#include <optional>
#include <limits>
#include <random>

namespace incidence {

using Rng = std::mt19937_64;

/// Platform-independent uniform draw in [0, n), n > 0.
std::uint64_t uniform_below(Rng& rng, std::uint64_t n);

/// Seed for block `block` of a sampled stream with seed `seed`.
std::uint64_t block_seed(std::uint64_t seed, std::uint64_t block);

/// Moulton samples use rationals p/q with |p| <= 64 and 1 <= q <= 64.
inline constexpr long kSampleBound = 64;

Rational random_rational(Rng& rng);

PointRef random_point(const FinitePlane& pl, Rng& rng);
PointRef random_point_on(const FinitePlane& pl, LineRef l, Rng& rng);
LineRef random_line_through(const FinitePlane& pl, PointRef p, Rng& rng);

/// Random affine point.
MoultonPoint random_point(const MoultonPlane& pl, Rng& rng);
MoultonPoint random_point_on(const MoultonPlane& pl, const MoultonLine& l, Rng& rng);
MoultonLine random_line_through(const MoultonPlane& pl, const MoultonPoint& p, Rng& rng);

namespace detail {

template <class Plane>
std::optional<typename Plane::Line> random_line(const Plane& pl, Rng& rng) {
  auto p = random_point(pl, rng);
  auto q = random_point(pl, rng);
  if (p == q) return std::nullopt;
  return pl.join(p, q);
}

}  // namespace detail

/// One constructive random draw: free parameters first, constrained points
/// solved by join/meet so the statement's extra collinearities hold by
/// construction. Returns false if a construction step had identical
/// arguments. The result still has to pass check_hypotheses.
template <class Plane>
bool draw_instance(const Plane& pl, Statement st, Rng& rng, Instance<Plane>& in) {
  using Point = typename Plane::Point;
  using Line = typename Plane::Line;
  using detail::try_join;
  using detail::try_meet;

  auto& p = in.points;
  switch (family(st)) {
    case Family::Desargues: {
      using namespace desargues;
      p[S] = random_point(pl, rng);
      p[A] = random_point(pl, rng);
      const auto la = try_join(pl, p[S], p[A]);
      if (!la) return false;
      p[A1] = random_point_on(pl, *la, rng);
      p[B] = random_point(pl, rng);
      const auto lb = try_join(pl, p[S], p[B]);
      if (!lb) return false;
      p[B1] = random_point_on(pl, *lb, rng);

      // Axis through S and X = AB ∩ A'B', used by the LD-type constructions.
      auto axis = [&]() -> std::optional<Line> {
        const auto x = detail::cross(pl, p[A], p[B], p[A1], p[B1]);
        if (!x) return std::nullopt;
        return try_join(pl, p[S], *x);
      };
      // C' = A'Y ∩ lc with Y = AC ∩ axis.
      auto solve_c1 = [&](const Line& lc) -> bool {
        const auto s = axis();
        if (!s) return false;
        const auto ac = try_join(pl, p[A], p[C]);
        if (!ac) return false;
        const auto y = try_meet(pl, *ac, *s);
        if (!y) return false;
        const auto ay = try_join(pl, p[A1], *y);
        if (!ay) return false;
        const auto c1 = try_meet(pl, *ay, lc);
        if (!c1) return false;
        p[C1] = *c1;
        return true;
      };

      switch (st) {
        case Statement::D:
        case Statement::HD: {
          p[C] = random_point(pl, rng);
          const auto lc = try_join(pl, p[S], p[C]);
          if (!lc) return false;
          p[C1] = random_point_on(pl, *lc, rng);
          return true;
        }
        case Statement::LD: {
          p[C] = random_point(pl, rng);
          const auto lc = try_join(pl, p[S], p[C]);
          return lc && solve_c1(*lc);
        }
        case Statement::wLD:
        case Statement::wD: {
          const auto lc = random_line_through(pl, p[S], rng);
          const auto ab = try_join(pl, p[A1], p[B]);
          if (!ab) return false;
          const auto c = try_meet(pl, *ab, lc);
          if (!c) return false;
          p[C] = *c;
          if (st == Statement::wLD) return solve_c1(lc);
          p[C1] = random_point_on(pl, lc, rng);
          return true;
        }
        case Statement::cD: {
          p[C] = random_point(pl, rng);
          const auto lc = try_join(pl, p[S], p[C]);
          const auto bc = try_join(pl, p[B], p[C]);
          if (!lc || !bc) return false;
          const auto z = try_meet(pl, *bc, *la);
          if (!z) return false;
          const auto bz = try_join(pl, p[B1], *z);
          if (!bz) return false;
          const auto c1 = try_meet(pl, *bz, *lc);
          if (!c1) return false;
          p[C1] = *c1;
          return true;
        }
        case Statement::cwLD: {
          const auto ab = try_join(pl, p[A1], p[B]);
          if (!ab) return false;
          p[C] = random_point_on(pl, *ab, rng);
          const auto s = axis();
          const auto ac = try_join(pl, p[A], p[C]);
          if (!s || !ac) return false;
          const auto y = try_meet(pl, *ac, *s);
          const auto z = try_meet(pl, *ab, *s);
          if (!y || !z) return false;
          const auto ay = try_join(pl, p[A1], *y);
          const auto bz = try_join(pl, p[B1], *z);
          if (!ay || !bz) return false;
          const auto c1 = try_meet(pl, *ay, *bz);
          if (!c1) return false;
          p[C1] = *c1;
          return true;
        }
        default:
          return false;
      }
    }
    case Family::Pappus: {
      using namespace pappus;
      const auto l1 = detail::random_line(pl, rng);
      const auto l2 = detail::random_line(pl, rng);
      if (!l1 || !l2 || *l1 == *l2) return false;
      for (int i : {A, B, C}) p[i] = random_point_on(pl, *l1, rng);
      if (st == Statement::P) {
        for (int i : {A1, B1, C1}) p[i] = random_point_on(pl, *l2, rng);
        return true;
      }
      if (st == Statement::LP) {
        p[A1] = random_point_on(pl, *l2, rng);
        p[B1] = random_point_on(pl, *l2, rng);
        const auto m = pl.meet(*l1, *l2);
        const auto c2 = detail::cross(pl, p[A], p[B1], p[A1], p[B]);
        if (!c2) return false;
        const auto mc = try_join(pl, m, *c2);
        const auto bc = try_join(pl, p[B1], p[C]);
        if (!mc || !bc) return false;
        const auto a2 = try_meet(pl, *bc, *mc);
        if (!a2) return false;
        const auto ba = try_join(pl, p[B], *a2);
        if (!ba) return false;
        const auto c1 = try_meet(pl, *ba, *l2);
        if (!c1) return false;
        p[C1] = *c1;
        return true;
      }
      p[S] = random_point(pl, rng);
      for (auto [from, to] : {std::pair{A, A1}, std::pair{B, B1}, std::pair{C, C1}}) {
        const auto ray = try_join(pl, p[S], p[from]);
        if (!ray) return false;
        const auto image = try_meet(pl, *ray, *l2);
        if (!image) return false;
        p[to] = *image;
      }
      return true;
    }
    case Family::DualPappus: {
      using namespace pencil;
      const Point o = random_point(pl, rng);
      const Point o1 = random_point(pl, rng);
      for (int i : {a, b, c}) in.lines[i] = random_line_through(pl, o, rng);
      for (int i : {a1, b1, c1}) in.lines[i] = random_line_through(pl, o1, rng);
      return true;
    }
  }
  return false;
}

}  // namespace incidence
