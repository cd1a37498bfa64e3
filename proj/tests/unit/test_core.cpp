#include "fixtures.hpp"

#include "incidence/error.hpp"
#include "incidence/finite_plane.hpp"
#include "incidence/incidence_structure.hpp"
#include "incidence/plane.hpp"
#include "incidence/projective_plane.hpp"
#include "incidence/quasifield.hpp"

#include <doctest.h>

#include <algorithm>

using namespace incidence;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an incidence::Error");
  return ErrorCode::UnknownName;
}

}  // namespace

TEST_CASE("IncidenceStructure rejects malformed matrices") {
  CHECK(code_of([] { IncidenceStructure(2, 2, {1, 0, 1}); }) == ErrorCode::MalformedMatrix);
  CHECK(code_of([] { IncidenceStructure(1, 2, {1, 2}); }) == ErrorCode::MalformedMatrix);
}

TEST_CASE("Fano plane passes all three axioms") {
  const auto s = fixtures::fano();
  CHECK(s.n_points() == 7);
  CHECK(s.n_lines() == 7);
  const auto r = validate_axioms(s);
  CHECK(r.pi1_ok);
  CHECK(r.pi2_ok);
  CHECK(r.pi3_ok);
  CHECK(r.violations.empty());
}

TEST_CASE("two lines sharing two points are reported") {
  const auto r = validate_axioms(fixtures::doubled_line());
  CHECK_FALSE(r.pi1_ok);
  CHECK_FALSE(r.pi2_ok);
  REQUIRE_FALSE(r.violations.empty());
  bool saw_pair = false;
  for (const auto& v : r.violations) {
    if (v.axiom == Axiom::PI1 && v.first == 0 && v.second == 1) saw_pair = v.common == 2;
  }
  CHECK(saw_pair);
}

TEST_CASE("affine plane of order 2 has parallel lines") {
  const auto r = validate_axioms(fixtures::affine2());
  CHECK(r.pi1_ok);
  CHECK_FALSE(r.pi2_ok);
  CHECK_FALSE(r.violations.empty());
}

TEST_CASE("violation list is capped but counted") {
  const auto r = validate_axioms(fixtures::affine2(), 1);
  CHECK(r.violations.size() == 1);
  CHECK(r.violations_total >= 3);
}

TEST_CASE("a structure without a quadrilateral fails PI3") {
  // One line through three points, plus nothing else.
  const IncidenceStructure s(3, 1, {1, 1, 1});
  const auto r = validate_axioms(s);
  CHECK_FALSE(r.pi3_ok);
}

TEST_CASE("dualize transposes and is an involution") {
  const auto fano = fixtures::fano();
  const auto d = dualize(fano);
  CHECK(d.n_points() == 7);
  CHECK(validate_axioms(d).ok());
  CHECK(dualize(d) == fano);

  const auto pg3 = build_pg(3)->structure();
  const auto d3 = dualize(pg3);
  CHECK(d3.n_points() == 13);
  CHECK(d3.n_lines() == 13);
  CHECK(validate_axioms(d3).ok());

  const auto pg2 = build_pg(2)->structure();
  CHECK(dualize(dualize(pg2)).matrix() == pg2.matrix());

  CHECK(code_of([] { dualize(fixtures::affine2()); }) == ErrorCode::NotAPlane);
}

TEST_CASE("dualize swaps PI1 and PI2 witnesses") {
  const auto bad = fixtures::doubled_line();
  const auto r = validate_axioms(bad);
  const auto rt = validate_axioms(bad.transposed());
  CHECK(r.pi1_ok == rt.pi2_ok);
  CHECK(r.pi2_ok == rt.pi1_ok);
  CHECK(r.pi3_ok == rt.pi3_ok);
}

TEST_CASE("FinitePlane::create refuses non-planes") {
  CHECK(code_of([] { FinitePlane::create(fixtures::affine2(), "affine2"); }) == ErrorCode::NotAPlane);
}

TEST_CASE("join, meet and collinear on PG(2,2)") {
  const auto pg = build_pg(2);
  const auto p = *pg->find_point("(1:0:0)");
  const auto q = *pg->find_point("(0:1:0)");
  const auto r = *pg->find_point("(0:0:1)");
  const auto l = pg->join(p, q);
  std::vector<std::string> on;
  for (auto x : pg->points_on(l)) on.push_back(pg->label(x));
  std::sort(on.begin(), on.end());
  CHECK(on == std::vector<std::string>{"(0:1:0)", "(1:0:0)", "(1:1:0)"});

  CHECK_FALSE(pg->collinear(p, q, r));
  CHECK(pg->collinear(p, p, q));
  CHECK(pg->collinear(p, q, *pg->find_point("(1:1:0)")));

  CHECK(code_of([&] { pg->join(p, p); }) == ErrorCode::IdenticalPoints);
  CHECK(code_of([&] { pg->meet(l, l); }) == ErrorCode::IdenticalLines);
}

TEST_CASE("meet of two lines through a point on PG(2,3)") {
  const auto pg = build_pg(3);
  const auto p = *pg->find_point("(1:0:0)");
  const auto lines = pg->lines_through(p);
  REQUIRE(lines.size() == 4);
  CHECK(pg->meet(lines[0], lines[1]) == p);
  CHECK(pg->meet(lines[2], lines[3]) == p);
}

TEST_CASE("Fano collinearity follows the table rows") {
  const auto plane = FinitePlane::create(fixtures::fano(), "fano");
  for (std::size_t j = 0; j < plane->n_lines(); ++j) {
    const auto pts = plane->points_on(plane->line(j));
    CHECK(plane->collinear(pts[0], pts[1], pts[2]));
  }
}

TEST_CASE("refs from another plane are rejected") {
  const auto a = build_pg(3);
  const auto b = build_pg(3);
  CHECK(a->tag() != b->tag());
  const auto p = a->point(0);
  const auto q = b->point(1);
  CHECK(code_of([&] { a->join(p, q); }) == ErrorCode::ForeignRef);
  CHECK(code_of([&] { a->incident(p, b->line(0)); }) == ErrorCode::ForeignRef);
  CHECK(code_of([&] { a->collinear(p, a->point(1), q); }) == ErrorCode::ForeignRef);
  CHECK(code_of([&] { a->meet(a->line(0), b->line(1)); }) == ErrorCode::ForeignRef);
}

namespace {

// Join and meet by scanning the incidence matrix.
std::size_t scan_join(const IncidenceStructure& s, std::size_t p, std::size_t q) {
  for (std::size_t l = 0; l < s.n_lines(); ++l) {
    if (s.incident(p, l) && s.incident(q, l)) return l;
  }
  return s.n_lines();
}

std::size_t scan_meet(const IncidenceStructure& s, std::size_t l, std::size_t m) {
  for (std::size_t p = 0; p < s.n_points(); ++p) {
    if (s.incident(p, l) && s.incident(p, m)) return p;
  }
  return s.n_points();
}

void check_tables(const FinitePlane& pl) {
  const auto& s = pl.structure();
  for (std::size_t p = 0; p < pl.n_points(); ++p) {
    for (std::size_t q = 0; q < pl.n_points(); ++q) {
      if (p == q) continue;
      const auto l = pl.join(pl.point(p), pl.point(q));
      REQUIRE(l.index == scan_join(s, p, q));
      REQUIRE(pl.incident(pl.point(p), l));
      REQUIRE(pl.incident(pl.point(q), l));
    }
  }
  for (std::size_t l = 0; l < pl.n_lines(); ++l) {
    for (std::size_t m = 0; m < pl.n_lines(); ++m) {
      if (l == m) continue;
      REQUIRE(pl.meet(pl.line(l), pl.line(m)).index == scan_meet(s, l, m));
    }
  }
}

}  // namespace

TEST_CASE("precomputed tables agree with matrix search") {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    CAPTURE(q);
    check_tables(*build_pg(q));
  }
  check_tables(*build_hall9());
}

TEST_CASE("join/meet round trip") {
  const auto pg = build_pg(4);
  for (std::size_t i = 0; i < pg->n_points(); ++i) {
    for (std::size_t j = 0; j < pg->n_points(); ++j) {
      if (i == j) continue;
      const auto p = pg->point(i);
      const auto pq = pg->join(p, pg->point(j));
      for (auto l : pg->lines_through(p)) {
        if (l != pq) REQUIRE(pg->meet(l, pq) == p);
      }
    }
  }
}

TEST_CASE("dual plane relabels and validates") {
  const auto pg = build_pg(3);
  const auto d = dual_plane(*pg);
  CHECK(d->name() == "dual:pg3");
  CHECK(d->find_point("[1:0:0]").has_value());
  CHECK(d->find_line("(1:0:0)").has_value());
  const auto plane = make_plane("dual:pg3");
  CHECK(plane.descriptor() == "dual:pg3");
}

TEST_CASE("make_plane rejects unknown names") {
  CHECK(code_of([] { make_plane("pg"); }) == ErrorCode::UnknownName);
  CHECK(code_of([] { make_plane("euclid"); }) == ErrorCode::UnknownName);
  CHECK(code_of([] { make_plane("pg6"); }) == ErrorCode::UnsupportedOrder);
  CHECK(code_of([] { make_plane("dual:moulton"); }) == ErrorCode::UnknownName);
}
