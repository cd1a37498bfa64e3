#pragma once

#include "incidence/configuration.hpp"
#include "incidence/enumerate.hpp"
#include "incidence/error.hpp"
#include "incidence/evaluate.hpp"
#include "incidence/moulton.hpp"
#include "incidence/sampling.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <thread>
#include <type_traits>
#include <utility>
#include <vector>

namespace incidence {

/// Valid instances per sampled block. Block b owns stream indices
/// [b * kBlockSize, (b + 1) * kBlockSize).
inline constexpr std::uint64_t kBlockSize = 1024;
/// Draw attempts per block before the block gives up.
inline constexpr std::uint64_t kBlockAttempts = 256 * kBlockSize;

struct CheckOptions {
  Mode mode;
  unsigned jobs = 1;
  std::size_t max_violations = 8;
  bool stop_at_first_violation = false;
};

namespace detail {

template <class Plane>
struct UnitResult {
  std::uint64_t valid = 0;
  std::uint64_t degenerate = 0;
  std::uint64_t violations = 0;
  std::vector<Witness<Plane>> witnesses;  // local indices
};

template <class Plane>
Witness<Plane> make_witness(const Plane& pl, Statement st, const Instance<Plane>& in,
                            std::string_view reason) {
  Witness<Plane> w;
  w.statement = st;
  w.plane = pl.name();
  w.instance = in;
  w.derived = derive(pl, st, in);
  w.failed_conclusion = std::string(reason);
  return w;
}

// Scores one candidate into `r`. Returns false if the unit should stop.
template <class Plane>
bool score(const Plane& pl, Statement st, Instance<Plane>& in, const CheckOptions& opt,
           UnitResult<Plane>& r) {
  const auto out = evaluate_instance(pl, st, in);
  if (out.kind == OutcomeKind::Degenerate) {
    ++r.degenerate;
    return true;
  }
  in.index = r.valid++;
  if (out.kind == OutcomeKind::Fails) {
    ++r.violations;
    if (r.witnesses.size() < opt.max_violations) {
      r.witnesses.push_back(make_witness(pl, st, in, out.reason));
    }
    if (opt.stop_at_first_violation) return false;
  }
  return true;
}

template <class Plane>
UnitResult<Plane> run_block(const Plane& pl, Statement st, std::uint64_t block,
                            std::uint64_t quota, const CheckOptions& opt) {
  UnitResult<Plane> r;
  Rng rng(block_seed(opt.mode.seed, block));
  Instance<Plane> in;
  for (std::uint64_t attempt = 0; attempt < kBlockAttempts && r.valid < quota; ++attempt) {
    if (!draw_instance(pl, st, rng, in)) {
      ++r.degenerate;
      continue;
    }
    if (!score(pl, st, in, opt, r)) break;
  }
  return r;
}

template <class Plane>
UnitResult<Plane> run_unit(const Plane& pl, Statement st, std::uint64_t unit,
                           std::uint64_t quota, const CheckOptions& opt) {
  if constexpr (std::is_same_v<Plane, FinitePlane>) {
    if (opt.mode.is_exhaustive()) {
      UnitResult<Plane> r;
      enumerate_chunk(pl, st, unit,
                      [&](Instance<Plane>& in) { return score(pl, st, in, opt, r); });
      return r;
    }
  }
  return run_block(pl, st, unit, quota, opt);
}

}  // namespace detail

/// Instances the sampled stream draws in block `block` for `budget`.
inline std::uint64_t block_quota(std::uint64_t budget, std::uint64_t block) {
  return std::min(kBlockSize, budget - block * kBlockSize);
}

/// Folds evaluate_instance over the statement's instance stream.
///
/// Work is split into units (exhaustive chunks or sampled blocks) that are
/// evaluated independently and merged in unit order, so the report does not
/// depend on `jobs`. With stop_at_first_violation the units run in waves and
/// the merge ends at the first unit holding a violation.
template <class Plane>
CheckReport<Plane> check_statement(const Plane& pl, Statement st, const CheckOptions& opt) {
  std::uint64_t units = 0;
  if (opt.mode.is_exhaustive()) {
    if constexpr (std::is_same_v<Plane, FinitePlane>) {
      units = exhaustive_chunks(pl, st);
    } else {
      throw Error(ErrorCode::ExhaustiveOnInfinitePlane, "exhaustive mode requires a finite plane");
    }
  } else {
    if (opt.mode.budget == 0) throw Error(ErrorCode::BudgetZero, "sampled mode needs a budget > 0");
    units = (opt.mode.budget + kBlockSize - 1) / kBlockSize;
  }

  CheckReport<Plane> rep;
  rep.statement = st;
  rep.plane = pl.name();
  rep.mode = opt.mode;

  const unsigned jobs = std::max(1u, opt.jobs);
  const std::uint64_t wave = opt.stop_at_first_violation ? jobs : units;
  std::uint64_t offset = 0;

  for (std::uint64_t begin = 0; begin < units; begin += wave) {
    const std::uint64_t end = std::min(units, begin + wave);
    std::vector<detail::UnitResult<Plane>> results(end - begin);
    std::atomic<std::uint64_t> next{begin};
    auto worker = [&] {
      for (std::uint64_t u; (u = next.fetch_add(1)) < end;) {
        const std::uint64_t quota = opt.mode.is_exhaustive() ? 0 : block_quota(opt.mode.budget, u);
        results[u - begin] = detail::run_unit(pl, st, u, quota, opt);
      }
    };
    const unsigned n_threads = static_cast<unsigned>(std::min<std::uint64_t>(jobs, end - begin));
    if (n_threads <= 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    }

    bool stop = false;
    for (std::uint64_t i = 0; i < results.size() && !stop; ++i) {
      auto& r = results[i];
      // Sampled indices are fixed by block position, exhaustive ones by the
      // running count of valid instances.
      const std::uint64_t base = opt.mode.is_exhaustive() ? offset : (begin + i) * kBlockSize;
      rep.instances_checked += r.valid;
      rep.degenerate_skipped += r.degenerate;
      rep.violations_total += r.violations;
      for (auto& w : r.witnesses) {
        if (rep.violations.size() >= opt.max_violations) break;
        w.instance.index += base;
        rep.violations.push_back(std::move(w));
      }
      offset += r.valid;
      if (opt.stop_at_first_violation && r.violations > 0) stop = true;
    }
    if (stop) {
      rep.stopped_early = true;
      break;
    }
  }

  if (rep.violations_total > 0) {
    rep.verdict = Verdict::Fails;
  } else {
    rep.verdict = opt.mode.is_exhaustive() ? Verdict::Holds : Verdict::Inconclusive;
  }
  return rep;
}

/// Calls `sink(instance)` for every hypothesis-valid instance of the stream,
/// in stream order. Serial.
template <class Plane, class Sink>
void generate_instances(const Plane& pl, Statement st, const Mode& mode, Sink&& sink) {
  if (mode.is_exhaustive()) {
    if constexpr (std::is_same_v<Plane, FinitePlane>) {
      std::uint64_t index = 0;
      for (std::size_t c = 0; c < exhaustive_chunks(pl, st); ++c) {
        enumerate_chunk(pl, st, c, [&](Instance<Plane>& in) {
          if (check_hypotheses(pl, st, in).kind == OutcomeKind::Holds) {
            in.index = index++;
            sink(std::as_const(in));
          }
          return true;
        });
      }
      return;
    } else {
      throw Error(ErrorCode::ExhaustiveOnInfinitePlane, "exhaustive mode requires a finite plane");
    }
  }
  if (mode.budget == 0) throw Error(ErrorCode::BudgetZero, "sampled mode needs a budget > 0");
  const std::uint64_t blocks = (mode.budget + kBlockSize - 1) / kBlockSize;
  for (std::uint64_t b = 0; b < blocks; ++b) {
    const std::uint64_t quota = block_quota(mode.budget, b);
    Rng rng(block_seed(mode.seed, b));
    Instance<Plane> in;
    std::uint64_t local = 0;
    for (std::uint64_t attempt = 0; attempt < kBlockAttempts && local < quota; ++attempt) {
      if (!draw_instance(pl, st, rng, in)) continue;
      if (evaluate_instance(pl, st, in).kind == OutcomeKind::Degenerate) continue;
      in.index = b * kBlockSize + local++;
      sink(std::as_const(in));
    }
  }
}

/// First violation of the seeded sampled stream within `budget` valid
/// instances, or nothing.
template <class Plane>
std::optional<Witness<Plane>> find_counterexample(const Plane& pl, Statement st,
                                                  std::uint64_t budget, std::uint64_t seed,
                                                  unsigned jobs = 1) {
  CheckOptions opt;
  opt.mode = Mode::sampled(seed, budget);
  opt.jobs = jobs;
  opt.max_violations = 1;
  opt.stop_at_first_violation = true;
  auto rep = check_statement(pl, st, opt);
  if (rep.violations.empty()) return std::nullopt;
  return std::move(rep.violations.front());
}

}  // namespace incidence
