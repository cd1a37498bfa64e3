#pragma once

#include "incidence/statement.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace incidence {

/// Named-point (or, for PB, named-line) binding of a statement's schema.
/// Slot meaning follows point_roles()/line_roles(); unused slots are ignored.
template <class Plane>
struct Instance {
  std::array<typename Plane::Point, 7> points{};
  std::array<typename Plane::Line, 6> lines{};
  std::uint64_t index = 0;
};

template <class Plane>
bool same_bindings(Statement s, const Instance<Plane>& a, const Instance<Plane>& b) {
  for (std::size_t i = 0; i < point_roles(s).size(); ++i) {
    if (!(a.points[i] == b.points[i])) return false;
  }
  for (std::size_t i = 0; i < line_roles(s).size(); ++i) {
    if (!(a.lines[i] == b.lines[i])) return false;
  }
  return true;
}

enum class OutcomeKind { Holds, Fails, Degenerate };

/// `reason` always points at a string literal.
struct Outcome {
  OutcomeKind kind = OutcomeKind::Holds;
  std::string_view reason;

  static Outcome holds() { return {}; }
  static Outcome fails(std::string_view why) { return {OutcomeKind::Fails, why}; }
  static Outcome degenerate(std::string_view why) { return {OutcomeKind::Degenerate, why}; }
};

/// Auxiliary points and lines computed from the bindings.
template <class Plane>
struct Derived {
  std::vector<std::pair<std::string, typename Plane::Point>> points;
  std::vector<std::pair<std::string, typename Plane::Line>> lines;
};

/// A hypothesis-satisfying instance whose conclusion fails.
template <class Plane>
struct Witness {
  Statement statement = Statement::D;
  std::string plane;
  Instance<Plane> instance;
  Derived<Plane> derived;
  std::string failed_conclusion;
};

enum class Verdict { Holds, Fails, Inconclusive };

std::string_view to_string(Verdict v);

struct Mode {
  enum class Kind { Exhaustive, Sampled };
  Kind kind = Kind::Exhaustive;
  std::uint64_t seed = 1;
  std::uint64_t budget = 0;  // valid instances to draw; sampled mode only

  static Mode exhaustive() { return {}; }
  static Mode sampled(std::uint64_t seed, std::uint64_t budget) {
    return {Kind::Sampled, seed, budget};
  }
  bool is_exhaustive() const { return kind == Kind::Exhaustive; }
};

template <class Plane>
struct CheckReport {
  Statement statement = Statement::D;
  std::string plane;
  Mode mode;
  std::uint64_t instances_checked = 0;
  std::uint64_t degenerate_skipped = 0;
  std::uint64_t violations_total = 0;
  std::vector<Witness<Plane>> violations;  // capped, ordered by instance index
  Verdict verdict = Verdict::Inconclusive;
  // Set when the run stopped at the first violation; counts are then partial.
  bool stopped_early = false;
};

}  // namespace incidence
