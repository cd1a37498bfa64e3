#pragma once

#include "incidence/finite_plane.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace incidence {

/// Finite (right) quasifield given by its operation tables. Elements are
/// 0..order-1; `add[a * order + b]` is a + b, `mul[a * order + b]` is a∘b.
struct QuasifieldTable {
  unsigned order = 0;
  std::vector<std::uint8_t> add;
  std::vector<std::uint8_t> mul;
  std::uint8_t zero = 0;
  std::uint8_t one = 1;

  std::uint8_t plus(unsigned a, unsigned b) const { return add[a * order + b]; }
  std::uint8_t times(unsigned a, unsigned b) const { return mul[a * order + b]; }
};

struct QuasifieldReport {
  bool ok = true;
  std::vector<std::string> violations;  // first few, human-readable
};

/// Exhaustive check of: abelian addition with identity `zero`; `one` a
/// two-sided multiplicative identity; x∘0 = 0∘x = 0; right distributivity;
/// no zero divisors; unique solvability of a∘x = b and x∘a = b (a != 0) and
/// of x∘a = x∘b + c (a != b). Throws MalformedTable on bad shapes or an
/// order above 32.
QuasifieldReport validate_quasifield(const QuasifieldTable& t,
                                     std::size_t max_violations = 8);

/// Prime field GF(p) as a quasifield table.
QuasifieldTable prime_field_table(unsigned p);

/// Hall quasifield of order 9 over GF(3) with f(x) = x^2 + 1. Element
/// a + 3b stands for the pair (a, b).
QuasifieldTable hall9_quasifield();

/// Translation plane over `t`: affine points (x, y), lines y = x∘m + b and
/// x = c, completed by the ideal points (m), (inf) and the line at
/// infinity. Throws ConstructionFailed if `t` fails validation.
FinitePlanePtr build_quasifield_plane(const QuasifieldTable& t, std::string name);

/// Order-9 Hall plane: 91 points, 91 lines, 10 points per line.
FinitePlanePtr build_hall9();

std::string quasifield_csv(const QuasifieldTable& t);

}  // namespace incidence
