#include "incidence/implications.hpp"

#include "incidence/check.hpp"
#include "incidence/kv.hpp"

#include <iomanip>
#include <sstream>

namespace incidence {

namespace {

std::size_t idx(Statement s) { return static_cast<std::size_t>(s); }

char cell(const TruthEntry& e) {
  switch (e.verdict) {
    case Verdict::Holds:
      return 'H';
    case Verdict::Fails:
      return 'F';
    case Verdict::Inconclusive:
      return '?';
  }
  return '?';
}

}  // namespace

std::vector<ImplicationEdge> implication_edges() {
  using S = Statement;
  auto both = [](std::vector<ImplicationEdge>& v, S a, S b, const std::string& why) {
    v.push_back({a, b, why});
    v.push_back({b, a, why});
  };
  std::vector<ImplicationEdge> e = {
      {S::D, S::HD, "restriction: HD adds a hypothesis to D"},
      {S::D, S::LD, "restriction: LD adds a hypothesis to D"},
      {S::D, S::wLD, "restriction: wLD adds hypotheses to D"},
      {S::D, S::cD, "restriction: cD adds a hypothesis to D"},
      {S::HD, S::LD, "homologous Desargues implies little Desargues"},
      {S::LD, S::wLD, "restriction: wLD adds a hypothesis to LD"},
  };
  both(e, S::LD, S::wD, "Stevenson: LD, wD and cD are equivalent");
  both(e, S::wD, S::cD, "Stevenson: LD, wD and cD are equivalent");
  both(e, S::wLD, S::sPP, "weak little Desargues is equivalent to strong perspective Pappus");
  e.push_back({S::wLD, S::cwLD, "apply wLD to the triangles sharing the axis"});
  e.push_back({S::wLD, S::LP, "weak little Desargues implies little Pappus"});
  e.push_back({S::sPP, S::pP, "perspective Pappus is a consequence of strong perspective Pappus"});
  e.push_back({S::P, S::D, "Hessenberg: Pappus implies Desargues"});
  both(e, S::P, S::PB, "Pappus and Brianchon are dual statements");
  e.push_back({S::D, S::pP, "perspective Pappus holds on Desarguesian planes"});
  e.push_back({S::D, S::LP, "little Pappus holds on Desarguesian planes"});
  return e;
}

Reachability closure(const std::vector<ImplicationEdge>& edges) {
  Reachability r{};
  for (const auto& e : edges) r[idx(e.from)][idx(e.to)] = true;
  for (std::size_t k = 0; k < 12; ++k) {
    for (std::size_t i = 0; i < 12; ++i) {
      if (!r[i][k]) continue;
      for (std::size_t j = 0; j < 12; ++j) {
        if (r[k][j]) r[i][j] = true;
      }
    }
  }
  return r;
}

Mode choose_mode(const PlaneHandle& plane, Statement st, const TruthOptions& opt) {
  if (const auto* fp = plane.finite()) {
    if (exhaustive_estimate(*fp, st) <= opt.exhaustive_limit) return Mode::exhaustive();
  }
  return Mode::sampled(opt.seed, opt.budget);
}

TruthVector truth_vector(const PlaneHandle& plane, const TruthOptions& opt) {
  TruthVector tv;
  tv.plane = plane.descriptor();
  for (Statement st : kAllStatements) {
    CheckOptions co;
    co.mode = choose_mode(plane, st, opt);
    co.jobs = opt.jobs;
    co.max_violations = 1;
    co.stop_at_first_violation = opt.stop_at_first_violation;
    plane.visit([&](const auto& pl) {
      const auto rep = check_statement(pl, st, co);
      tv.at(st) = {rep.verdict, rep.mode, rep.instances_checked};
    });
  }
  return tv;
}

ConsistencyReport check_lattice(const std::vector<TruthVector>& vectors,
                                const std::vector<ImplicationEdge>& edges) {
  ConsistencyReport rep;
  const auto reach = closure(edges);
  for (const auto& tv : vectors) {
    for (Statement from : kAllStatements) {
      const auto& f = tv.at(from);
      if (f.verdict != Verdict::Holds || !f.mode.is_exhaustive()) continue;
      for (Statement to : kAllStatements) {
        if (from == to || !reach[idx(from)][idx(to)]) continue;
        if (tv.at(to).verdict == Verdict::Fails) {
          rep.violations.push_back({tv.plane, from, to, f.verdict, tv.at(to).verdict});
        }
      }
    }
    rep.evidence.push_back({tv.plane, tv.at(Statement::LP).verdict, tv.at(Statement::wLD).verdict,
                            tv.at(Statement::LD).verdict});
  }
  return rep;
}

std::string render_matrix(const std::vector<TruthVector>& vectors, const ConsistencyReport& report) {
  std::size_t width = 5;
  for (const auto& tv : vectors) width = std::max(width, tv.plane.size());
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(width)) << "plane";
  for (Statement st : kAllStatements) out << ' ' << std::setw(4) << name(st);
  out << '\n';
  for (const auto& tv : vectors) {
    out << std::setw(static_cast<int>(width)) << tv.plane;
    for (Statement st : kAllStatements) out << ' ' << std::setw(4) << cell(tv.at(st));
    out << '\n';
  }
  out << "\nlattice violations: " << report.violations.size() << '\n';
  for (const auto& v : report.violations) {
    out << "  " << v.plane << ": " << name(v.from) << " holds but " << name(v.to) << " fails\n";
  }
  out << "\nopen problems (LP => wLD, wLD => LD)\n";
  for (const auto& e : report.evidence) {
    out << "  " << std::setw(static_cast<int>(width)) << e.plane << " LP=" << to_string(e.lp)
        << " wLD=" << to_string(e.wld) << " LD=" << to_string(e.ld) << '\n';
  }
  return out.str();
}

std::string lattice_kv(const std::vector<TruthVector>& vectors, const ConsistencyReport& report) {
  std::ostringstream out;
  out << "planes=" << vectors.size() << '\n';
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    const auto& tv = vectors[i];
    out << "plane." << i << ".name=" << tv.plane << '\n';
    for (Statement st : kAllStatements) {
      out << "plane." << i << '.' << name(st) << '=' << to_string(tv.at(st).verdict) << ','
          << mode_name(tv.at(st).mode) << '\n';
    }
  }
  out << "violations=" << report.violations.size() << '\n';
  for (std::size_t i = 0; i < report.violations.size(); ++i) {
    const auto& v = report.violations[i];
    out << "violation." << i << '=' << v.plane << ',' << name(v.from) << ',' << name(v.to) << '\n';
  }
  for (std::size_t i = 0; i < report.evidence.size(); ++i) {
    const auto& e = report.evidence[i];
    out << "evidence." << i << '=' << e.plane << ",LP=" << to_string(e.lp)
        << ",wLD=" << to_string(e.wld) << ",LD=" << to_string(e.ld) << '\n';
  }
  return out.str();
}

}  // namespace incidence
