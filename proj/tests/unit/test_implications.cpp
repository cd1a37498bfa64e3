#include "incidence/implications.hpp"
#include "incidence/projective_plane.hpp"

#include <doctest.h>

#include <algorithm>

using namespace incidence;
using S = Statement;

namespace {

bool has_edge(const std::vector<ImplicationEdge>& edges, S from, S to) {
  return std::any_of(edges.begin(), edges.end(), [&](const auto& e) { return e.from == from && e.to == to; });
}

std::size_t ix(S s) { return static_cast<std::size_t>(s); }

TruthVector all_holds(const std::string& plane) {
  TruthVector tv;
  tv.plane = plane;
  for (auto& e : tv.entries) e = {Verdict::Holds, Mode::exhaustive(), 1};
  return tv;
}

}  // namespace

TEST_CASE("the edge set") {
  const auto edges = implication_edges();
  CHECK(edges.size() == 20);
  for (const auto& e : edges) CHECK_FALSE(e.provenance.empty());

  const std::vector<std::pair<S, S>> expected = {
      {S::D, S::HD},    {S::D, S::LD},   {S::D, S::wLD},   {S::D, S::cD},   {S::HD, S::LD},
      {S::LD, S::wD},   {S::wD, S::LD},  {S::wD, S::cD},   {S::cD, S::wD},  {S::LD, S::wLD},
      {S::wLD, S::sPP}, {S::sPP, S::wLD}, {S::wLD, S::cwLD}, {S::wLD, S::LP}, {S::sPP, S::pP},
      {S::P, S::D},     {S::P, S::PB},   {S::PB, S::P},    {S::D, S::pP},   {S::D, S::LP},
  };
  for (const auto& [a, b] : expected) {
    CAPTURE(name(a));
    CAPTURE(name(b));
    CHECK(has_edge(edges, a, b));
  }
  CHECK_FALSE(has_edge(edges, S::LD, S::HD));
  CHECK_FALSE(has_edge(edges, S::wLD, S::LD));
}

TEST_CASE("closure") {
  const auto edges = implication_edges();
  const auto r = closure(edges);
  CHECK(r[ix(S::D)][ix(S::LP)]);
  CHECK(r[ix(S::D)][ix(S::pP)]);
  CHECK(r[ix(S::P)][ix(S::cwLD)]);
  CHECK(r[ix(S::cD)][ix(S::LD)]);
  CHECK_FALSE(r[ix(S::wLD)][ix(S::LD)]);
  CHECK_FALSE(r[ix(S::LP)][ix(S::wLD)]);
  CHECK_FALSE(r[ix(S::LD)][ix(S::HD)]);

  // Idempotent: closing the closure changes nothing.
  std::vector<ImplicationEdge> closed;
  for (S a : kAllStatements)
    for (S b : kAllStatements)
      if (r[ix(a)][ix(b)]) closed.push_back({a, b, "closure"});
  CHECK(closure(closed) == r);
}

TEST_CASE("D reaches LP and pP along two routes") {
  const auto edges = implication_edges();
  // Direct edge, plus a route through wLD that avoids the direct edge.
  std::vector<ImplicationEdge> without_direct;
  for (const auto& e : edges) {
    if (e.from == S::D && (e.to == S::LP || e.to == S::pP)) continue;
    without_direct.push_back(e);
  }
  const auto r = closure(without_direct);
  CHECK(r[ix(S::D)][ix(S::LP)]);
  CHECK(r[ix(S::D)][ix(S::pP)]);
  CHECK(r[ix(S::D)][ix(S::wLD)]);
}

TEST_CASE("acyclic after collapsing the equivalence classes") {
  const auto r = closure(implication_edges());
  auto cls = [](S s) {
    switch (s) {
      case S::wD:
      case S::cD:
        return ix(S::LD);
      case S::sPP:
        return ix(S::wLD);
      case S::PB:
        return ix(S::P);
      default:
        return ix(s);
    }
  };
  for (S a : kAllStatements) {
    for (S b : kAllStatements) {
      if (cls(a) == cls(b)) continue;
      CAPTURE(name(a));
      CAPTURE(name(b));
      CHECK_FALSE((r[ix(a)][ix(b)] && r[ix(b)][ix(a)]));
    }
  }
}

TEST_CASE("check_lattice flags only exhaustive premises") {
  auto tv = all_holds("synthetic");
  tv.at(S::LD).verdict = Verdict::Fails;
  const auto rep = check_lattice({tv});
  bool hd_ld = false;
  for (const auto& v : rep.violations) hd_ld = hd_ld || (v.from == S::HD && v.to == S::LD);
  CHECK(hd_ld);

  // With only HD and LD recorded, exactly one violation.
  TruthVector only;
  only.plane = "two";
  only.at(S::HD) = {Verdict::Holds, Mode::exhaustive(), 1};
  only.at(S::LD) = {Verdict::Fails, Mode::exhaustive(), 1};
  const auto one = check_lattice({only});
  REQUIRE(one.violations.size() == 1);
  CHECK(one.violations[0].from == S::HD);
  CHECK(one.violations[0].to == S::LD);
  CHECK(one.violations[0].plane == "two");

  // A sampled "holds" never convicts.
  only.at(S::HD) = {Verdict::Holds, Mode::sampled(1, 10), 10};
  CHECK(check_lattice({only}).ok());
  only.at(S::HD) = {Verdict::Inconclusive, Mode::sampled(1, 10), 10};
  CHECK(check_lattice({only}).ok());
}

TEST_CASE("all-holds vectors are consistent and evidence is recorded") {
  const auto rep = check_lattice({all_holds("a"), all_holds("b")});
  CHECK(rep.ok());
  REQUIRE(rep.evidence.size() == 2);
  CHECK(rep.evidence[0].lp == Verdict::Holds);
}

TEST_CASE("truth vector of PG(2,3) is all holds, exhaustively") {
  TruthOptions opt;
  const auto tv = truth_vector(PlaneHandle(build_pg(3)), opt);
  CHECK(tv.plane == "pg3");
  for (S st : kAllStatements) {
    CAPTURE(name(st));
    CHECK(tv.at(st).verdict == Verdict::Holds);
    CHECK(tv.at(st).mode.is_exhaustive());
  }
}

TEST_CASE("Moulton truth vector under sampling") {
  TruthOptions opt;
  opt.budget = 100000;
  const auto tv = truth_vector(build_moulton(), opt);
  CHECK(tv.at(S::D).verdict == Verdict::Fails);
  CHECK(tv.at(S::sPP).verdict == Verdict::Fails);
  for (S st : kAllStatements) CHECK_FALSE(tv.at(st).mode.is_exhaustive());
}

TEST_CASE("choose_mode respects the limit") {
  const PlaneHandle pg5(build_pg(5));
  TruthOptions opt;
  CHECK(choose_mode(pg5, S::P, opt).is_exhaustive());
  CHECK_FALSE(choose_mode(pg5, S::D, opt).is_exhaustive());
  opt.exhaustive_limit = ~0ULL;
  CHECK(choose_mode(pg5, S::D, opt).is_exhaustive());
  CHECK_FALSE(choose_mode(build_moulton(), S::P, opt).is_exhaustive());
}

TEST_CASE("rendering") {
  auto tv = all_holds("pgx");
  tv.at(S::D).verdict = Verdict::Fails;
  tv.at(S::D).mode = Mode::sampled(1, 5);
  const auto rep = check_lattice({tv});
  const auto text = render_matrix({tv}, rep);
  CHECK(text.find("plane") == 0);
  CHECK(text.find("lattice violations:") != std::string::npos);
  const auto kv = lattice_kv({tv}, rep);
  CHECK(kv.find("plane.0.D=fails,sampled\n") != std::string::npos);
  CHECK(kv.find("violations=" + std::to_string(rep.violations.size())) != std::string::npos);
}
