#pragma once

#include "incidence/configuration.hpp"
#include "incidence/plane.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace incidence {

struct ImplicationEdge {
  Statement from;
  Statement to;
  std::string provenance;
};

/// The known implications between the twelve statements. Equivalences
/// appear as two directed edges.
std::vector<ImplicationEdge> implication_edges();

/// reach[i][j]: statement j follows from statement i through one or more
/// edges (indices follow kAllStatements).
using Reachability = std::array<std::array<bool, 12>, 12>;
Reachability closure(const std::vector<ImplicationEdge>& edges);

struct TruthEntry {
  Verdict verdict = Verdict::Inconclusive;
  Mode mode;
  std::uint64_t instances = 0;
};

struct TruthVector {
  std::string plane;
  std::array<TruthEntry, 12> entries;

  const TruthEntry& at(Statement s) const { return entries[static_cast<std::size_t>(s)]; }
  TruthEntry& at(Statement s) { return entries[static_cast<std::size_t>(s)]; }
};

struct TruthOptions {
  /// Finite planes run exhaustively when the candidate estimate is at most
  /// this; everything else is sampled.
  std::uint64_t exhaustive_limit = 10'000'000;
  std::uint64_t seed = 1;
  std::uint64_t budget = 100'000;
  unsigned jobs = 1;
  /// A verdict needs only one witness; counts are partial when set.
  bool stop_at_first_violation = true;
};

Mode choose_mode(const PlaneHandle& plane, Statement st, const TruthOptions& opt);

TruthVector truth_vector(const PlaneHandle& plane, const TruthOptions& opt);

struct LatticeViolation {
  std::string plane;
  Statement from;
  Statement to;
  Verdict from_verdict;
  Verdict to_verdict;
};

/// Per-plane verdicts bearing on the two open implications
/// LP => wLD and wLD => LD.
struct OpenProblemEvidence {
  std::string plane;
  Verdict lp;
  Verdict wld;
  Verdict ld;
};

struct ConsistencyReport {
  std::vector<LatticeViolation> violations;
  std::vector<OpenProblemEvidence> evidence;
  bool ok() const { return violations.empty(); }
};

/// Flags every closure pair whose premise holds exhaustively while the
/// consequence fails on the same plane.
ConsistencyReport check_lattice(const std::vector<TruthVector>& vectors,
                                const std::vector<ImplicationEdge>& edges = implication_edges());

/// Planes × statements grid (H = holds exhaustively, F = fails,
/// ? = inconclusive), then violations and open-problem evidence.
std::string render_matrix(const std::vector<TruthVector>& vectors, const ConsistencyReport& report);
std::string lattice_kv(const std::vector<TruthVector>& vectors, const ConsistencyReport& report);

}  // namespace incidence
