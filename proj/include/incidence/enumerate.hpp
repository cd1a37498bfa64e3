#pragma once

#include "incidence/configuration.hpp"
#include "incidence/finite_plane.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace incidence {

/// Number of independent chunks the exhaustive sweep of `st` splits into:
/// one per center S (Desargues family), per first range line (Pappus
/// family) or per first pencil center (PB).
std::size_t exhaustive_chunks(const FinitePlane& pl, Statement st);

/// Upper bound on the candidates the exhaustive sweep emits.
std::uint64_t exhaustive_estimate(const FinitePlane& pl, Statement st);

namespace detail {

// Ordered triples of distinct entries.
template <class T, class F>
void for_each_triple(const std::vector<T>& v, F&& f) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (j == i) continue;
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (k == i || k == j) continue;
        f(v[i], v[j], v[k]);
      }
    }
  }
}

}  // namespace detail

/// Sweeps every parameter choice of chunk `chunk`, calling `emit(instance)`
/// for each candidate; `emit` returns false to stop. Constrained points are
/// solved by join/meet, so the candidates are exactly the hypothesis-valid
/// instances plus degenerate ones (which check_hypotheses rejects). Each
/// valid instance is produced once across all chunks.
template <class Emit>
void enumerate_chunk(const FinitePlane& pl, Statement st, std::size_t chunk, Emit&& emit) {
  Instance<FinitePlane> in;
  auto& p = in.points;
  const std::size_t n = pl.n_points();
  bool go = true;
  auto send = [&] { go = emit(in); };

  switch (family(st)) {
    case Family::Desargues: {
      using namespace desargues;
      p[S] = pl.point(chunk);
      for (std::size_t ia = 0; ia < n && go; ++ia) {
        p[A] = pl.point(ia);
        if (p[A] == p[S]) continue;
        const auto la = pl.join(p[S], p[A]);
        for (auto a1 : pl.points_on(la)) {
          if (!go) return;
          if (a1 == p[S] || a1 == p[A]) continue;
          p[A1] = a1;
          for (std::size_t ib = 0; ib < n && go; ++ib) {
            p[B] = pl.point(ib);
            if (pl.incident(p[B], la)) continue;
            const auto lb = pl.join(p[S], p[B]);
            for (auto b1 : pl.points_on(lb)) {
              if (!go) return;
              if (b1 == p[S] || b1 == p[B]) continue;
              p[B1] = b1;
              const auto ab = pl.join(p[A], p[B]);
              const auto ab1 = pl.join(p[A1], p[B1]);
              const auto x = pl.meet(ab, ab1);
              const auto a1b = pl.join(p[A1], p[B]);

              switch (st) {
                case Statement::D:
                case Statement::HD:
                  for (std::size_t ic = 0; ic < n && go; ++ic) {
                    p[C] = pl.point(ic);
                    if (pl.incident(p[C], la) || pl.incident(p[C], lb)) continue;
                    const auto lc = pl.join(p[S], p[C]);
                    for (auto c1 : pl.points_on(lc)) {
                      if (c1 == p[S] || c1 == p[C]) continue;
                      p[C1] = c1;
                      send();
                      if (!go) return;
                    }
                  }
                  break;
                case Statement::LD:
                case Statement::cD:
                  for (std::size_t ic = 0; ic < n && go; ++ic) {
                    p[C] = pl.point(ic);
                    if (pl.incident(p[C], la) || pl.incident(p[C], lb)) continue;
                    const auto lc = pl.join(p[S], p[C]);
                    if (st == Statement::LD) {
                      // Y = AC ∩ SX, C' = A'Y ∩ SC
                      if (x == p[S]) continue;
                      const auto axis = pl.join(p[S], x);
                      const auto ac = pl.join(p[A], p[C]);
                      if (ac == axis) continue;
                      const auto y = pl.meet(ac, axis);
                      if (y == p[A1]) continue;
                      const auto a1y = pl.join(p[A1], y);
                      if (a1y == lc) continue;
                      p[C1] = pl.meet(a1y, lc);
                    } else {
                      // Z = BC ∩ AA', C' = B'Z ∩ SC
                      const auto bc = pl.join(p[B], p[C]);
                      if (bc == la) continue;
                      const auto z = pl.meet(bc, la);
                      if (z == p[B1]) continue;
                      const auto b1z = pl.join(p[B1], z);
                      if (b1z == lc) continue;
                      p[C1] = pl.meet(b1z, lc);
                    }
                    send();
                  }
                  break;
                case Statement::wLD:
                case Statement::wD:
                  for (auto lc : pl.lines_through(p[S])) {
                    if (!go) return;
                    if (lc == la || lc == lb || lc == a1b) continue;
                    p[C] = pl.meet(a1b, lc);
                    if (st == Statement::wD) {
                      for (auto c1 : pl.points_on(lc)) {
                        if (c1 == p[S] || c1 == p[C]) continue;
                        p[C1] = c1;
                        send();
                        if (!go) return;
                      }
                      continue;
                    }
                    if (x == p[S] || p[C] == p[A]) continue;
                    const auto axis = pl.join(p[S], x);
                    const auto ac = pl.join(p[A], p[C]);
                    if (ac == axis) continue;
                    const auto y = pl.meet(ac, axis);
                    if (y == p[A1]) continue;
                    const auto a1y = pl.join(p[A1], y);
                    if (a1y == lc) continue;
                    p[C1] = pl.meet(a1y, lc);
                    send();
                  }
                  break;
                case Statement::cwLD: {
                  if (x == p[S]) break;
                  const auto axis = pl.join(p[S], x);
                  if (a1b == axis) break;
                  const auto z = pl.meet(a1b, axis);
                  if (z == p[B1]) break;
                  const auto b1z = pl.join(p[B1], z);
                  for (auto c : pl.points_on(a1b)) {
                    if (!go) return;
                    if (c == p[A1] || c == p[B] || c == p[A]) continue;
                    p[C] = c;
                    const auto ac = pl.join(p[A], c);
                    if (ac == axis) continue;
                    const auto y = pl.meet(ac, axis);
                    if (y == p[A1]) continue;
                    const auto a1y = pl.join(p[A1], y);
                    if (a1y == b1z) continue;
                    p[C1] = pl.meet(a1y, b1z);
                    send();
                  }
                  break;
                }
                default:
                  break;
              }
            }
          }
        }
      }
      break;
    }
    case Family::Pappus: {
      using namespace pappus;
      const auto l1 = pl.line(chunk);
      for (std::size_t j = 0; j < pl.n_lines() && go; ++j) {
        const auto l2 = pl.line(j);
        if (l2 == l1) continue;
        const auto m = pl.meet(l1, l2);
        std::vector<PointRef> r1, r2;
        for (auto q : pl.points_on(l1)) {
          if (q != m) r1.push_back(q);
        }
        for (auto q : pl.points_on(l2)) {
          if (q != m) r2.push_back(q);
        }
        detail::for_each_triple(r1, [&](PointRef a, PointRef b, PointRef c) {
          if (!go) return;
          p[A] = a;
          p[B] = b;
          p[C] = c;
          if (st == Statement::P) {
            detail::for_each_triple(r2, [&](PointRef a1, PointRef b1, PointRef c1) {
              if (!go) return;
              p[A1] = a1;
              p[B1] = b1;
              p[C1] = c1;
              send();
            });
          } else if (st == Statement::LP) {
            // A'' = B'C ∩ MC'', C' = BA'' ∩ l2
            for (auto a1 : r2) {
              for (auto b1 : r2) {
                if (!go) return;
                if (a1 == b1) continue;
                p[A1] = a1;
                p[B1] = b1;
                const auto c2 = pl.meet(pl.join(a, b1), pl.join(a1, b));
                if (c2 == m) continue;
                const auto mc = pl.join(m, c2);
                const auto b1c = pl.join(b1, c);
                if (mc == b1c) continue;
                const auto a2 = pl.meet(b1c, mc);
                if (a2 == b) continue;
                const auto ba2 = pl.join(b, a2);
                if (ba2 == l2) continue;
                p[C1] = pl.meet(ba2, l2);
                send();
              }
            }
          } else {
            for (std::size_t is = 0; is < n && go; ++is) {
              p[S] = pl.point(is);
              if (pl.incident(p[S], l1) || pl.incident(p[S], l2)) continue;
              p[A1] = pl.meet(pl.join(p[S], a), l2);
              p[B1] = pl.meet(pl.join(p[S], b), l2);
              p[C1] = pl.meet(pl.join(p[S], c), l2);
              send();
            }
          }
        });
      }
      break;
    }
    case Family::DualPappus: {
      using namespace pencil;
      const auto o = pl.point(chunk);
      for (std::size_t j = 0; j < n && go; ++j) {
        const auto o1 = pl.point(j);
        if (o1 == o) continue;
        const auto shared = pl.join(o, o1);
        std::vector<LineRef> r1, r2;
        for (auto l : pl.lines_through(o)) {
          if (l != shared) r1.push_back(l);
        }
        for (auto l : pl.lines_through(o1)) {
          if (l != shared) r2.push_back(l);
        }
        auto& l = in.lines;
        detail::for_each_triple(r1, [&](LineRef x, LineRef y, LineRef z) {
          if (!go) return;
          l[a] = x;
          l[b] = y;
          l[c] = z;
          detail::for_each_triple(r2, [&](LineRef x1, LineRef y1, LineRef z1) {
            if (!go) return;
            l[a1] = x1;
            l[b1] = y1;
            l[c1] = z1;
            send();
          });
        });
      }
      break;
    }
  }
}

}  // namespace incidence
