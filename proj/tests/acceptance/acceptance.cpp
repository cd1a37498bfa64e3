// End-to-end criteria. Prints one PASS/FAIL line per criterion and exits
// non-zero if any line is FAIL.

#include "fixtures.hpp"
#include "pinned.hpp"

#include "incidence/brute_force.hpp"
#include "incidence/chain.hpp"
#include "incidence/check.hpp"
#include "incidence/cli.hpp"
#include "incidence/error.hpp"
#include "incidence/implications.hpp"
#include "incidence/kv.hpp"
#include "incidence/plane.hpp"
#include "incidence/projective_plane.hpp"
#include "incidence/quasifield.hpp"
#include "incidence/sampling.hpp"

#include <chrono>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace incidence;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fixed(double s) {
  std::ostringstream o;
  o.precision(2);
  o << std::fixed << s << " s";
  return o.str();
}

int failures = 0;

void report(int n, const std::string& title, const Outcome& o) {
  if (!o.ok) ++failures;
  std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << n << ": " << title;
  if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
  std::cout << std::endl;
}

template <class F>
void guarded(int n, const std::string& title, F&& body) {
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  report(n, title, o);
}

// Exhaustive reports of every statement on PG(2,2..5), shared by 2, 6 and 7.
std::map<unsigned, std::vector<CheckReport<FinitePlane>>> pg_reports;
double pg5_desargues_seconds = 0;

void criterion1() {
  guarded(1, "incidence axioms on the library and the violation fixtures", [](Outcome& o) {
    const auto t0 = Clock::now();
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
      const auto pl = build_pg(q);
      if (!validate_axioms(pl->structure()).ok()) o.fail("pg" + std::to_string(q) + " rejected");
    }
    const auto h = build_hall9();
    const auto& hs = h->structure();
    if (!validate_axioms(hs).ok()) o.fail("hall9 rejected");
    if (hs.n_points() != 91 || hs.n_lines() != 91) o.fail("hall9 has the wrong size");
    for (std::size_t l = 0; l < hs.n_lines(); ++l) {
      std::size_t on = 0;
      for (std::size_t p = 0; p < hs.n_points(); ++p) on += hs.incident(p, l) ? 1 : 0;
      if (on != 10) o.fail("hall9 line " + std::to_string(l) + " has " + std::to_string(on) + " points");
    }

    const auto doubled = validate_axioms(fixtures::doubled_line());
    if (doubled.pi1_ok || doubled.pi2_ok || !doubled.pi3_ok) o.fail("doubled-line flags wrong");
    const auto affine = validate_axioms(fixtures::affine2());
    if (affine.pi2_ok || affine.ok()) o.fail("affine plane flags wrong");

    const double dt = seconds_since(t0);
    if (dt >= 10) o.fail("took " + fixed(dt));
    if (o.ok) o.detail = fixed(dt);
  });
}

void criterion2() {
  guarded(2, "all twelve statements hold exhaustively on PG(2,2..5)", [](Outcome& o) {
    for (unsigned q : {2u, 3u, 4u, 5u}) {
      const auto pl = build_pg(q);
      auto& out = pg_reports[q];
      for (Statement st : kAllStatements) {
        CheckOptions opt;
        opt.mode = Mode::exhaustive();
        const auto t0 = Clock::now();
        out.push_back(check_statement(*pl, st, opt));
        if (q == 5 && st == Statement::D) pg5_desargues_seconds = seconds_since(t0);
        const auto& r = out.back();
        if (r.verdict != Verdict::Holds || r.violations_total != 0) {
          o.fail(std::string(name(st)) + " on pg" + std::to_string(q) + " gave " + std::string(to_string(r.verdict)));
        }
      }
    }
    if (pg5_desargues_seconds >= 300) o.fail("pg5 D took " + fixed(pg5_desargues_seconds));
    if (o.ok) {
      o.detail = "pg5 D: " + std::to_string(pg_reports[5][0].instances_checked) + " instances in " +
                 fixed(pg5_desargues_seconds);
    }
  });
}

void criterion3() {
  guarded(3, "exhaustive generator matches the brute-force oracle on PG(2,2) and PG(2,3)", [](Outcome& o) {
    std::uint64_t total = 0;
    for (unsigned q : {2u, 3u}) {
      const auto pl = build_pg(q);
      for (Statement st : kAllStatements) {
        std::uint64_t generated = 0;
        generate_instances(*pl, st, Mode::exhaustive(), [&](const auto&) { ++generated; });
        const auto oracle = brute_force_enumerate(*pl, st);
        if (generated != oracle.count) {
          o.fail(std::string(name(st)) + " on pg" + std::to_string(q) + ": " + std::to_string(generated) +
                 " vs " + std::to_string(oracle.count));
        }
        total += generated;
      }
    }
    if (o.ok) o.detail = std::to_string(total) + " instances matched";
  });
}

void criterion4() {
  guarded(4, "Moulton counterexamples to D and sPP, seed 1, pinned", [](Outcome& o) {
    const MoultonPlane m;
    const std::pair<Statement, const std::string*> cases[] = {{Statement::D, &pinned::kMoultonD},
                                                              {Statement::sPP, &pinned::kMoultonSPP}};
    for (const auto& [st, pin] : cases) {
      const auto w = find_counterexample(m, st, 1'000'000, 1);
      if (!w) {
        o.fail(std::string("no ") + std::string(name(st)) + " counterexample");
        continue;
      }
      if (witness_kv(m, *w) != *pin) o.fail(std::string(name(st)) + " witness drifted");
      const auto back = parse_witness(m, *pin);
      if (evaluate_instance(m, st, back.instance).kind != OutcomeKind::Fails) {
        o.fail(std::string(name(st)) + " pin no longer fails");
      }
      if (witness_kv(m, back) != *pin) o.fail(std::string(name(st)) + " pin does not round-trip");
    }
  });
}

void criterion5() {
  guarded(5, "hall9 counterexample to D within budget 1e8, pinned", [](Outcome& o) {
    const auto h = build_hall9();
    const auto w = find_counterexample(*h, Statement::D, 100'000'000, 1);
    if (!w) {
      o.fail("no counterexample");
      return;
    }
    if (witness_kv(*h, *w) != pinned::kHall9D) o.fail("witness drifted");
    const auto back = parse_witness(*h, pinned::kHall9D);
    if (evaluate_instance(*h, Statement::D, back.instance).kind != OutcomeKind::Fails) o.fail("pin no longer fails");
    if (o.ok) o.detail = "index " + std::to_string(w->instance.index);
  });
}

TruthVector from_reports(const std::string& plane, const std::vector<CheckReport<FinitePlane>>& reports) {
  TruthVector tv;
  tv.plane = plane;
  for (const auto& r : reports) tv.at(r.statement) = {r.verdict, r.mode, r.instances_checked};
  return tv;
}

void criterion6() {
  guarded(6, "truth vectors of the library respect the implication lattice", [](Outcome& o) {
    std::vector<TruthVector> vectors;
    for (unsigned q : {2u, 3u, 4u, 5u}) {
      if (pg_reports[q].size() != kAllStatements.size()) {
        o.fail("missing exhaustive reports for pg" + std::to_string(q));
        return;
      }
      vectors.push_back(from_reports("pg" + std::to_string(q), pg_reports[q]));
    }
    TruthOptions opt;
    opt.exhaustive_limit = 0;  // sampled for the non-Desarguesian planes
    opt.budget = 100'000;
    vectors.push_back(truth_vector(build_moulton(), opt));
    vectors.push_back(truth_vector(PlaneHandle(build_hall9()), opt));

    const auto rep = check_lattice(vectors);
    for (const auto& v : rep.violations) {
      o.fail(std::string(name(v.from)) + "->" + std::string(name(v.to)) + " on " + v.plane);
    }
    const auto r = closure(implication_edges());
    using S = Statement;
    auto reach = [&](S a, S b) { return r[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
    const std::pair<S, S> named[] = {{S::HD, S::LD},  {S::wLD, S::sPP}, {S::sPP, S::wLD}, {S::wLD, S::LP},
                                     {S::wLD, S::cwLD}, {S::P, S::D},   {S::LD, S::wD},   {S::wD, S::cD},
                                     {S::cD, S::LD}};
    for (const auto& [a, b] : named) {
      if (!reach(a, b)) o.fail(std::string(name(a)) + "->" + std::string(name(b)) + " missing from closure");
    }
    if (o.ok) o.detail = std::to_string(vectors.size()) + " planes, 0 violations";
  });
}

Verdict exhaustive_verdict(const FinitePlane& pl, Statement st, bool first) {
  CheckOptions opt;
  opt.mode = Mode::exhaustive();
  opt.stop_at_first_violation = first;
  return check_statement(pl, st, opt).verdict;
}

void criterion7() {
  guarded(7, "P and PB agree on each finite plane and through its dual", [](Outcome& o) {
    const std::vector<std::string> names = {"pg2", "pg3", "pg4", "pg5", "hall9"};
    std::ostringstream seen;
    for (const auto& n : names) {
      const auto handle = make_plane(n);
      const auto dual = make_plane("dual:" + n);
      const FinitePlane& pl = *handle.finite();
      const FinitePlane& dl = *dual.finite();
      const bool first = n == "hall9";
      const Verdict p = exhaustive_verdict(pl, Statement::P, first);
      const Verdict pb = exhaustive_verdict(pl, Statement::PB, first);
      const Verdict routed = exhaustive_verdict(dl, Statement::PB, first);
      if (p != pb) o.fail(n + ": P and PB differ");
      if (p != routed) o.fail(n + ": P and dual-routed PB differ");
      seen << n << '=' << to_string(p) << ' ';
    }
    if (o.ok) {
      o.detail = seen.str();
      o.detail.pop_back();
    }
  });
}

void criterion8() {
  guarded(8, "translation chains build, verify and respect the bound", [](Outcome& o) {
    Rng rng(20240601);
    auto coord = [&] {
      const long den = static_cast<long>(uniform_below(rng, 6)) + 1;
      const long num = static_cast<long>(uniform_below(rng, 40 * den + 1)) - 20 * den;
      return make_rational(num, den);
    };
    int built = 0;
    std::size_t longest = 0;
    while (built < 100) {
      RationalTriangle base;
      for (auto& v : base.v) v = {coord(), coord()};
      if (degenerate(base)) continue;
      const Vec2 target{coord(), coord()};
      const auto ch = build_chain(base, target);
      const auto rep = verify_chain(ch);
      if (!rep.ok) o.fail("case " + std::to_string(built) + ": " + rep.reason);
      if (mpz_class(ch.steps.size()) > chain_length_bound(base, target)) {
        o.fail("case " + std::to_string(built) + " exceeds the bound");
      }
      longest = std::max(longest, ch.steps.size());
      ++built;
    }

    const RationalTriangle t{{Vec2{make_rational(0, 1), make_rational(0, 1)},
                              Vec2{make_rational(2, 1), make_rational(0, 1)},
                              Vec2{make_rational(0, 1), make_rational(2, 1)}}};
    const auto zero = build_chain(t, Vec2{});
    if (!zero.steps.empty() || !verify_chain(zero).ok) o.fail("zero target is not the empty chain");

    const auto ch = build_chain(t, Vec2{make_rational(-5, 1), make_rational(-5, 1)});
    if (ch.steps.size() != pinned::kChainLength) o.fail("pinned length changed");
    for (std::size_t i = 0; i < ch.steps.size(); ++i) {
      auto bad = ch;
      bad.steps[i].translation.y -= make_rational(1, 1'000'000);
      const auto rep = verify_chain(bad);
      if (rep.ok || !rep.failed_step || *rep.failed_step != i) {
        o.fail("tampering at step " + std::to_string(i) + " not located");
      }
    }
    if (o.ok) o.detail = "100 cases, longest " + std::to_string(longest);
  });
}

void criterion9() {
  guarded(9, "kv reports are identical for --jobs 1 and --jobs 8", [](Outcome& o) {
    const std::vector<std::vector<std::string>> runs = {
        {"check", "--plane", "pg4", "--statement", "D", "--mode", "exhaustive"},
        {"check", "--plane", "moulton", "--statement", "sPP", "--seed", "7", "--budget", "50000"},
        {"check", "--plane", "hall9", "--statement", "LD", "--mode", "sampled", "--seed", "3", "--budget", "20000",
         "--max-violations", "16"},
    };
    for (const auto& base : runs) {
      std::string outputs[2];
      int status[2];
      const char* jobs[] = {"1", "8"};
      for (int k = 0; k < 2; ++k) {
        auto args = base;
        args.insert(args.end(), {"--format", "kv", "--jobs", jobs[k]});
        std::ostringstream out, err;
        status[k] = cli::run(args, out, err);
        outputs[k] = out.str();
      }
      if (status[0] == cli::kUsage) o.fail(base[2] + " run was rejected");
      if (status[0] != status[1] || outputs[0] != outputs[1]) o.fail(base[2] + " " + base[4] + " differs");
    }
  });
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
