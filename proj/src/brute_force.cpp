#include "incidence/brute_force.hpp"

#include "incidence/error.hpp"

#include <string>

namespace incidence {

namespace {

// Incidence-matrix geometry, independent of the precomputed tables.
class Oracle {
 public:
  explicit Oracle(const IncidenceStructure& s) : s_(s), n_(s.n_points()) {}

  std::uint32_t size() const { return static_cast<std::uint32_t>(n_); }
  bool on(std::uint32_t p, std::uint32_t l) const { return s_.incident(p, l); }

  std::uint32_t line(std::uint32_t p, std::uint32_t q) const {
    for (std::uint32_t l = 0; l < s_.n_lines(); ++l) {
      if (on(p, l) && on(q, l)) return l;
    }
    return kNone;
  }
  std::uint32_t point(std::uint32_t l, std::uint32_t m) const {
    for (std::uint32_t p = 0; p < n_; ++p) {
      if (on(p, l) && on(p, m)) return p;
    }
    return kNone;
  }
  bool col(std::uint32_t p, std::uint32_t q, std::uint32_t r) const {
    if (p == q || p == r || q == r) return true;
    return on(r, line(p, q));
  }
  bool through(std::uint32_t l, std::uint32_t m, std::uint32_t k) const {
    if (l == m || l == k || m == k) return true;
    return on(point(l, m), k);
  }
  // Meet of pq and rs.
  std::uint32_t cross(std::uint32_t p, std::uint32_t q, std::uint32_t r, std::uint32_t s) const {
    return point(line(p, q), line(r, s));
  }

  static constexpr std::uint32_t kNone = ~0u;

 private:
  const IncidenceStructure& s_;
  std::size_t n_;
};

bool distinct_prefix(const Tuple& t, std::size_t slot, const std::initializer_list<std::size_t>& earlier) {
  for (auto e : earlier) {
    if (t[e] == t[slot]) return false;
  }
  return true;
}

struct Walker {
  const Oracle& g;
  Statement st;
  const std::function<void(const Tuple&)>& visit;
  BruteForceResult result;

  void accept(const Tuple& t, bool holds) {
    ++result.count;
    if (!holds) ++result.violations;
    if (visit) visit(t);
  }
};

// Desargues family. Slots: S=0 A=1 B=2 C=3 A'=4 B'=5 C'=6.
void walk_desargues(Walker& w) {
  const Oracle& g = w.g;
  const Statement st = w.st;
  const bool cw = st == Statement::cwLD;
  const bool through_a1bc = st == Statement::wLD || st == Statement::wD || cw;
  const std::uint32_t n = g.size();
  Tuple t{};
  auto& [s, a, b, c, a1, b1, c1] = t;

  for (s = 0; s < n; ++s)
  for (a = 0; a < n; ++a) {
    if (a == s) continue;
    for (a1 = 0; a1 < n; ++a1) {
      if (!distinct_prefix(t, 4, {0, 1}) || !g.col(s, a, a1)) continue;
      for (b = 0; b < n; ++b) {
        if (g.col(s, a, b)) continue;
        for (b1 = 0; b1 < n; ++b1) {
          if (!distinct_prefix(t, 5, {0, 1, 2, 4}) || !g.col(s, b, b1)) continue;
          if (g.line(a, b) == g.line(a1, b1)) continue;
          for (c = 0; c < n; ++c) {
            if (!distinct_prefix(t, 3, {0, 1, 2, 4, 5})) continue;
            if (g.col(a, b, c)) continue;
            if (!cw && (g.col(s, a, c) || g.col(s, b, c))) continue;
            if (through_a1bc && !g.col(a1, b, c)) continue;
            for (c1 = 0; c1 < n; ++c1) {
              if (!distinct_prefix(t, 6, {0, 1, 2, 3, 4, 5})) continue;
              if (g.col(a1, b1, c1)) continue;
              if (g.line(a, c) == g.line(a1, c1) || g.line(b, c) == g.line(b1, c1)) continue;
              if (cw) {
                const auto aa = g.line(a, a1), bb = g.line(b, b1), cc = g.line(c, c1);
                if (aa == cc || bb == cc) continue;
              } else if (!g.col(s, c, c1)) {
                continue;
              }
              const auto x = g.cross(a, b, a1, b1);
              const auto y = g.cross(a, c, a1, c1);
              const auto z = g.cross(b, c, b1, c1);
              const bool sxy = g.col(s, x, y);
              bool holds = true;
              switch (st) {
                case Statement::D:
                case Statement::wD:
                  holds = g.col(x, y, z);
                  break;
                case Statement::cD:
                  if (!g.col(a, a1, z)) continue;
                  holds = g.col(x, y, z);
                  break;
                case Statement::HD:
                  if (sxy) continue;
                  holds = g.col(x, y, z);
                  break;
                case Statement::LD:
                case Statement::wLD:
                  if (!sxy) continue;
                  holds = g.col(x, y, z);
                  break;
                case Statement::cwLD:
                  if (!sxy || !g.col(x, y, z)) continue;
                  holds = g.col(s, c, c1);
                  break;
                default:
                  break;
              }
              w.accept(t, holds);
            }
          }
        }
      }
    }
  }
}

// Pappus family. Slots: A=0 B=1 C=2 A'=3 B'=4 C'=5 S=6.
void walk_pappus(Walker& w) {
  const Oracle& g = w.g;
  const Statement st = w.st;
  const bool centered = st == Statement::pP || st == Statement::sPP;
  const std::uint32_t n = g.size();
  Tuple t{};
  auto& [a, b, c, a1, b1, c1, s] = t;

  auto finish = [&] {
    const auto m = g.cross(a, b, a1, b1);
    const auto c2 = g.cross(a, b1, a1, b);
    const auto a2 = g.cross(b, c1, b1, c);
    const auto b2 = g.cross(a, c1, a1, c);
    if (st == Statement::LP && !g.col(m, c2, a2)) return;
    const bool holds = st == Statement::sPP ? g.col(m, c2, a2) : g.col(a2, b2, c2);
    w.accept(t, holds);
  };

  for (a = 0; a < n; ++a)
  for (b = 0; b < n; ++b) {
    if (b == a) continue;
    for (c = 0; c < n; ++c) {
      if (!distinct_prefix(t, 2, {0, 1}) || !g.col(a, b, c)) continue;
      for (a1 = 0; a1 < n; ++a1) {
        if (g.col(a, b, a1)) continue;
        for (b1 = 0; b1 < n; ++b1) {
          if (g.col(a, b, b1) || b1 == a1) continue;
          // Neither range may contain M, the meet of the two range lines.
          if (g.col(a1, b1, a) || g.col(a1, b1, b) || g.col(a1, b1, c)) continue;
          for (c1 = 0; c1 < n; ++c1) {
            if (!distinct_prefix(t, 5, {3, 4}) || !g.col(a1, b1, c1) || g.col(a, b, c1)) continue;
            if (!centered) {
              finish();
              continue;
            }
            for (s = 0; s < n; ++s) {
              if (g.col(a, b, s) || g.col(a1, b1, s)) continue;
              if (!g.col(s, a, a1) || !g.col(s, b, b1) || !g.col(s, c, c1)) continue;
              finish();
            }
          }
        }
      }
    }
  }
}

// Pencils. Slots: a=0 b=1 c=2 a'=3 b'=4 c'=5.
void walk_pencils(Walker& w) {
  const Oracle& g = w.g;
  const std::uint32_t n = g.size();
  Tuple t{};
  auto& [a, b, c, a1, b1, c1, unused] = t;
  (void)unused;

  for (a = 0; a < n; ++a)
  for (b = 0; b < n; ++b) {
    if (b == a) continue;
    const auto o = g.point(a, b);
    for (c = 0; c < n; ++c) {
      if (!distinct_prefix(t, 2, {0, 1}) || !g.on(o, c)) continue;
      for (a1 = 0; a1 < n; ++a1) {
        if (!distinct_prefix(t, 3, {0, 1, 2}) || g.on(o, a1)) continue;
        for (b1 = 0; b1 < n; ++b1) {
          if (!distinct_prefix(t, 4, {0, 1, 2, 3}) || g.on(o, b1)) continue;
          const auto o1 = g.point(a1, b1);
          if (g.on(o1, a) || g.on(o1, b) || g.on(o1, c)) continue;
          for (c1 = 0; c1 < n; ++c1) {
            if (!distinct_prefix(t, 5, {0, 1, 2, 3, 4}) || !g.on(o1, c1) || g.on(o, c1)) continue;
            auto side = [&](std::uint32_t i, std::uint32_t j, std::uint32_t k, std::uint32_t l) {
              return g.line(g.point(i, j), g.point(k, l));
            };
            const auto c2 = side(a, b1, a1, b);
            const auto b2 = side(a, c1, a1, c);
            const auto a2 = side(b, c1, b1, c);
            w.accept(t, g.through(a2, b2, c2));
          }
        }
      }
    }
  }
}

}  // namespace

BruteForceResult brute_force_enumerate(const FinitePlane& pl, Statement st,
                                       const std::function<void(const Tuple&)>& visit) {
  if (pl.n_points() > kBruteForceMaxPoints) {
    throw Error(ErrorCode::PlaneTooLarge, "brute force is limited to " +
                                              std::to_string(kBruteForceMaxPoints) + " points, plane has " +
                                              std::to_string(pl.n_points()));
  }
  const Oracle g(pl.structure());
  Walker w{g, st, visit, {}};
  switch (family(st)) {
    case Family::Desargues:
      walk_desargues(w);
      break;
    case Family::Pappus:
      walk_pappus(w);
      break;
    case Family::DualPappus:
      walk_pencils(w);
      break;
  }
  w.result.verdict = w.result.violations > 0 ? Verdict::Fails : Verdict::Holds;
  return w.result;
}

}  // namespace incidence
