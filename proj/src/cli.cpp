#include "incidence/cli.hpp"

#include "incidence/chain.hpp"
#include "incidence/check.hpp"
#include "incidence/error.hpp"
#include "incidence/implications.hpp"
#include "incidence/kv.hpp"
#include "incidence/matrix_io.hpp"
#include "incidence/plane.hpp"
#include "incidence/projective_plane.hpp"
#include "incidence/quasifield.hpp"

#include <CLI11.hpp>

#include <sstream>

namespace incidence::cli {

namespace {

enum class Format { Text, Kv };

struct Common {
  std::string format = "text";
  unsigned jobs = 1;
  Format fmt() const { return format == "kv" ? Format::Kv : Format::Text; }
};

Statement statement_arg(const std::string& text) {
  if (auto st = parse_statement(text)) return *st;
  throw Error(ErrorCode::UnknownName, "unknown statement '" + text + "'");
}

void axiom_text(std::ostream& out, const AxiomReport& r) {
  out << "PI1 " << (r.pi1_ok ? "ok" : "violated") << '\n';
  out << "PI2 " << (r.pi2_ok ? "ok" : "violated") << '\n';
  out << "PI3 " << (r.pi3_ok ? "ok" : "violated") << '\n';
  for (const auto& v : r.violations) out << "  " << describe(v) << '\n';
  if (r.violations_total > r.violations.size()) {
    out << "  (" << r.violations_total - r.violations.size() << " more)\n";
  }
}

void axiom_kv(std::ostream& out, const AxiomReport& r) {
  out << "pi1_ok=" << (r.pi1_ok ? "true" : "false") << '\n';
  out << "pi2_ok=" << (r.pi2_ok ? "true" : "false") << '\n';
  out << "pi3_ok=" << (r.pi3_ok ? "true" : "false") << '\n';
  out << "violations_total=" << r.violations_total << '\n';
  for (std::size_t i = 0; i < r.violations.size(); ++i) {
    out << "violation." << i << '=' << describe(r.violations[i]) << '\n';
  }
}

template <class Plane>
void witness_text(std::ostream& out, const Plane& pl, const Witness<Plane>& w) {
  out << "  #" << w.instance.index << ": " << w.failed_conclusion << '\n';
  const auto points = point_roles(w.statement);
  for (std::size_t i = 0; i < points.size(); ++i) {
    out << "    " << points[i] << " = " << point_text(pl, w.instance.points[i]) << '\n';
  }
  const auto lines = line_roles(w.statement);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    out << "    " << lines[i] << " = " << line_text(pl, w.instance.lines[i]) << '\n';
  }
  for (const auto& [label, p] : w.derived.points) out << "    " << label << " = " << point_text(pl, p) << '\n';
  for (const auto& [label, l] : w.derived.lines) out << "    " << label << " = " << line_text(pl, l) << '\n';
}

template <class Plane>
void report_text(std::ostream& out, const Plane& pl, const CheckReport<Plane>& r) {
  out << name(r.statement) << " on " << r.plane << ": " << to_string(r.verdict) << '\n';
  out << "  mode " << mode_name(r.mode);
  if (!r.mode.is_exhaustive()) out << " (seed " << r.mode.seed << ", budget " << r.mode.budget << ')';
  out << "\n  " << r.instances_checked << " instances, " << r.degenerate_skipped << " degenerate skipped, "
      << r.violations_total << " violations\n";
  if (r.stopped_early) out << "  stopped at the first violation\n";
  for (const auto& w : r.violations) witness_text(out, pl, w);
}

int plane_build(const std::string& kind, unsigned q, const std::string& out_path, const Common& c,
                std::ostream& out) {
  PlaneHandle plane = kind == "pg"       ? PlaneHandle(build_pg(q))
                      : kind == "hall9"  ? PlaneHandle(build_hall9())
                      : kind == "moulton" ? build_moulton()
                                          : throw Error(ErrorCode::UnknownName, "unknown plane kind '" + kind + "'");
  const auto* fp = plane.finite();
  if (!out_path.empty()) {
    if (!fp) throw Error(ErrorCode::UnknownName, "only finite planes can be written to a file");
    write_incidence_file(out_path, fp->structure());
  }
  if (c.fmt() == Format::Kv) {
    out << "plane=" << plane.descriptor() << '\n';
    out << "kind=" << (fp ? "finite" : "generative") << '\n';
    if (fp) {
      out << "points=" << fp->n_points() << '\n';
      out << "lines=" << fp->n_lines() << '\n';
      out << "points_per_line=" << fp->order() + 1 << '\n';
    }
  } else if (fp) {
    out << plane.descriptor() << ": " << fp->n_points() << " points, " << fp->n_lines() << " lines, "
        << fp->order() + 1 << " points per line\n";
  } else {
    out << plane.descriptor() << ": generative plane over the rationals\n";
  }
  return kOk;
}

int plane_validate(const std::string& in, const Common& c, std::ostream& out) {
  const auto s = read_incidence_file(in);
  const auto r = validate_axioms(s);
  if (c.fmt() == Format::Kv) {
    out << "points=" << s.n_points() << "\nlines=" << s.n_lines() << '\n';
    axiom_kv(out, r);
  } else {
    out << in << ": " << s.n_points() << " points, " << s.n_lines() << " lines\n";
    axiom_text(out, r);
  }
  return r.ok() ? kOk : kFails;
}

struct CheckArgs {
  std::string plane, statement, mode;
  std::uint64_t seed = 1;
  std::uint64_t budget = 100'000;
  std::uint64_t exhaustive_limit = 10'000'000;
  std::size_t max_violations = 8;
  bool first = false;
};

int check(const CheckArgs& a, const Common& c, std::ostream& out) {
  const auto plane = make_plane(a.plane);
  const Statement st = statement_arg(a.statement);
  CheckOptions opt;
  if (a.mode == "exhaustive") {
    opt.mode = Mode::exhaustive();
  } else if (a.mode == "sampled") {
    opt.mode = Mode::sampled(a.seed, a.budget);
  } else {
    opt.mode = choose_mode(plane, st, {a.exhaustive_limit, a.seed, a.budget, c.jobs, false});
  }
  opt.jobs = c.jobs;
  opt.max_violations = a.max_violations;
  opt.stop_at_first_violation = a.first;
  return plane.visit([&](const auto& pl) {
    const auto rep = check_statement(pl, st, opt);
    if (c.fmt() == Format::Kv) {
      write_report(out, pl, rep);
    } else {
      report_text(out, pl, rep);
    }
    return rep.verdict == Verdict::Fails ? kFails : kOk;
  });
}

TruthOptions truth_options(const CheckArgs& a, const Common& c) {
  return {a.exhaustive_limit, a.seed, a.budget, c.jobs, true};
}

std::vector<std::string> split(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int scan(const CheckArgs& a, const Common& c, std::ostream& out) {
  const auto plane = make_plane(a.plane);
  const auto tv = truth_vector(plane, truth_options(a, c));
  bool any_fail = false;
  for (Statement st : kAllStatements) {
    const auto& e = tv.at(st);
    any_fail = any_fail || e.verdict == Verdict::Fails;
    if (c.fmt() == Format::Kv) {
      out << name(st) << '=' << to_string(e.verdict) << ',' << mode_name(e.mode) << ',' << e.instances << '\n';
    } else {
      out << std::string(name(st)) << std::string(6 - name(st).size(), ' ') << to_string(e.verdict) << " ("
          << mode_name(e.mode) << ", " << e.instances << " instances)\n";
    }
  }
  return any_fail ? kFails : kOk;
}

int implications(const std::string& planes, const CheckArgs& a, const Common& c, std::ostream& out) {
  std::vector<TruthVector> vectors;
  for (const auto& p : split(planes)) vectors.push_back(truth_vector(make_plane(p), truth_options(a, c)));
  const auto rep = check_lattice(vectors);
  out << (c.fmt() == Format::Kv ? lattice_kv(vectors, rep) : render_matrix(vectors, rep));
  return rep.ok() ? kOk : kFails;
}

int counterexample(const CheckArgs& a, const Common& c, std::ostream& out) {
  const auto plane = make_plane(a.plane);
  const Statement st = statement_arg(a.statement);
  return plane.visit([&](const auto& pl) {
    const auto w = find_counterexample(pl, st, a.budget, a.seed, c.jobs);
    if (c.fmt() == Format::Kv) {
      out << "found=" << (w ? "true" : "false") << '\n';
      if (w) write_witness(out, pl, *w);
    } else if (w) {
      out << name(st) << " fails on " << pl.name() << '\n';
      witness_text(out, pl, *w);
    } else {
      out << "no counterexample to " << name(st) << " on " << pl.name() << " within " << a.budget
          << " instances (seed " << a.seed << ")\n";
    }
    return w ? kFails : kOk;
  });
}

int chain(const std::string& triangle, const std::string& target, const Common& c, std::ostream& out) {
  const auto ch = build_chain(parse_triangle(triangle), parse_vec2(target));
  const auto rep = verify_chain(ch);
  if (c.fmt() == Format::Kv) {
    out << chain_kv(ch);
    out << "verified=" << (rep.ok ? "true" : "false") << '\n';
  } else {
    out << "chain of " << ch.steps.size() << " steps (bound "
        << chain_length_bound(ch.base, ch.total).get_str() << ")\n";
    for (std::size_t i = 0; i < ch.steps.size(); ++i) {
      out << "  " << i << ": +(" << to_string(ch.steps[i].translation) << ")  "
          << describe(ch.steps[i].certificate) << '\n';
    }
    out << (rep.ok ? "verified\n" : "verification failed: " + rep.reason + '\n');
  }
  return rep.ok ? kOk : kFails;
}

int export_plane(const std::string& name, const std::string& path, const Common& c, std::ostream& out) {
  const auto plane = make_plane(name);
  const auto* fp = plane.finite();
  if (!fp) throw Error(ErrorCode::UnknownName, "only finite planes can be exported");
  write_incidence_file(path, fp->structure());
  if (c.fmt() == Format::Kv) {
    out << "plane=" << fp->name() << "\nout=" << path << '\n';
  } else {
    out << "wrote " << fp->name() << " to " << path << '\n';
  }
  return kOk;
}

int dualize_file(const std::string& in, const std::string& path, const Common& c, std::ostream& out) {
  const auto dual = dualize(read_incidence_file(in));
  write_incidence_file(path, dual);
  if (c.fmt() == Format::Kv) {
    out << "points=" << dual.n_points() << "\nlines=" << dual.n_lines() << "\nout=" << path << '\n';
  } else {
    out << "wrote dual (" << dual.n_points() << " points, " << dual.n_lines() << " lines) to " << path << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Incidence geometry lab: plane models and configuration theorems", "incilab"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "kv"}));
  app.add_option("--jobs", common.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));

  auto* plane_cmd = app.add_subcommand("plane", "Build or validate a plane");
  plane_cmd->require_subcommand(1);
  plane_cmd->fallthrough();
  auto* build = plane_cmd->add_subcommand("build", "Construct a library plane");
  std::string kind, build_out;
  unsigned q = 0;
  build->add_option("kind", kind, "pg, moulton or hall9")->required()->check(CLI::IsMember({"pg", "moulton", "hall9"}));
  build->add_option("--q", q, "Field order for pg");
  build->add_option("--out", build_out, "Write the incidence matrix here");
  auto* validate = plane_cmd->add_subcommand("validate", "Check PI1-PI3 on an incidence matrix file");
  std::string in_path;
  validate->add_option("--in", in_path, "Incidence matrix file")->required();

  CheckArgs ca;
  auto add_run_options = [&](CLI::App* cmd) {
    cmd->add_option("--seed", ca.seed, "Sampling seed");
    cmd->add_option("--budget", ca.budget, "Valid instances to sample");
    cmd->add_option("--max-exhaustive", ca.exhaustive_limit, "Largest candidate estimate run exhaustively");
  };
  auto* check_cmd = app.add_subcommand("check", "Check one statement on a plane");
  check_cmd->add_option("--plane", ca.plane, "Plane name")->required();
  check_cmd->add_option("--statement", ca.statement, "Statement tag")->required();
  check_cmd->add_option("--mode", ca.mode, "exhaustive or sampled")->check(CLI::IsMember({"exhaustive", "sampled"}));
  check_cmd->add_option("--max-violations", ca.max_violations, "Witnesses to keep");
  check_cmd->add_flag("--first", ca.first, "Stop at the first violation");
  add_run_options(check_cmd);

  auto* scan_cmd = app.add_subcommand("scan", "Check all twelve statements on a plane");
  scan_cmd->add_option("--plane", ca.plane, "Plane name")->required();
  add_run_options(scan_cmd);

  auto* impl_cmd = app.add_subcommand("implications", "Check truth vectors against the implication lattice");
  std::string planes;
  impl_cmd->add_option("--planes", planes, "Comma-separated plane names")->required();
  add_run_options(impl_cmd);

  auto* cx_cmd = app.add_subcommand("counterexample", "Seeded search for a failing instance");
  cx_cmd->add_option("--plane", ca.plane, "Plane name")->required();
  cx_cmd->add_option("--statement", ca.statement, "Statement tag")->required();
  cx_cmd->add_option("--seed", ca.seed, "Sampling seed");
  std::uint64_t cx_budget = 100'000'000;
  cx_cmd->add_option("--budget", cx_budget, "Valid instances to try");

  auto* chain_cmd = app.add_subcommand("chain", "Translate a triangle by a chain of wLD steps");
  std::string triangle, target;
  chain_cmd->add_option("--triangle", triangle, "ax,ay;bx,by;cx,cy")->required();
  chain_cmd->add_option("--target", target, "tx,ty")->required();

  auto* export_cmd = app.add_subcommand("export", "Write a plane's incidence matrix");
  std::string export_plane_name, out_path;
  export_cmd->add_option("--plane", export_plane_name, "Plane name")->required();
  export_cmd->add_option("--out", out_path, "Output file")->required();

  auto* dual_cmd = app.add_subcommand("dualize", "Write the dual of an incidence matrix");
  dual_cmd->add_option("--in", in_path, "Input file")->required();
  dual_cmd->add_option("--out", out_path, "Output file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (plane_cmd->parsed()) {
      if (build->parsed()) {
        if (kind == "pg" && q == 0) throw CLI::ValidationError("--q", "plane build pg needs --q");
        return plane_build(kind, q, build_out, common, out);
      }
      return plane_validate(in_path, common, out);
    }
    if (check_cmd->parsed()) return check(ca, common, out);
    if (scan_cmd->parsed()) return scan(ca, common, out);
    if (impl_cmd->parsed()) return implications(planes, ca, common, out);
    if (cx_cmd->parsed()) {
      ca.budget = cx_budget;
      if (ca.budget == 0) throw Error(ErrorCode::BudgetZero, "budget must be positive");
      return counterexample(ca, common, out);
    }
    if (chain_cmd->parsed()) return chain(triangle, target, common, out);
    if (export_cmd->parsed()) return export_plane(export_plane_name, out_path, common, out);
    if (dual_cmd->parsed()) return dualize_file(in_path, out_path, common, out);
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace incidence::cli
