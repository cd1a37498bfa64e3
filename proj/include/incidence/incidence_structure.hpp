#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace incidence {

/// Explicit point/line incidence table. Rows are points, columns are lines.
class IncidenceStructure {
 public:
  IncidenceStructure() = default;

  /// `matrix` is row-major (point-major), entries 0 or 1; throws
  /// MalformedMatrix on a size mismatch or a foreign entry.
  IncidenceStructure(std::size_t n_points, std::size_t n_lines,
                     std::vector<std::uint8_t> matrix);

  std::size_t n_points() const { return n_points_; }
  std::size_t n_lines() const { return n_lines_; }

  bool incident(std::size_t point, std::size_t line) const {
    return matrix_[point * n_lines_ + line] != 0;
  }

  const std::vector<std::uint8_t>& matrix() const { return matrix_; }

  /// Points on `line`, ascending.
  std::vector<std::size_t> points_on(std::size_t line) const;
  /// Lines through `point`, ascending.
  std::vector<std::size_t> lines_through(std::size_t point) const;

  /// Transposed structure: lines become points and vice versa.
  IncidenceStructure transposed() const;

  bool operator==(const IncidenceStructure&) const = default;

 private:
  std::size_t n_points_ = 0;
  std::size_t n_lines_ = 0;
  std::vector<std::uint8_t> matrix_;
};

enum class Axiom { PI1, PI2, PI3 };

struct AxiomViolation {
  Axiom axiom;
  // PI1: two point indices. PI2: two line indices. PI3: both -1.
  long first = -1;
  long second = -1;
  std::size_t common = 0;  // number of shared lines (PI1) or points (PI2)
};

struct AxiomReport {
  bool pi1_ok = true;
  bool pi2_ok = true;
  bool pi3_ok = true;
  std::vector<AxiomViolation> violations;  // capped, see validate_axioms
  std::size_t violations_total = 0;

  bool ok() const { return pi1_ok && pi2_ok && pi3_ok; }
};

inline constexpr std::size_t kDefaultViolationCap = 16;

/// Exhaustive check of the three incidence-plane axioms. Deterministic;
/// at most `max_violations` offending pairs are stored.
AxiomReport validate_axioms(const IncidenceStructure& s,
                            std::size_t max_violations = kDefaultViolationCap);

/// Projective dual (transpose). Throws NotAPlane unless `s` passes the axioms.
IncidenceStructure dualize(const IncidenceStructure& s);

std::string describe(const AxiomViolation& v);

}  // namespace incidence
