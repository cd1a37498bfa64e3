#pragma once

#include "incidence/configuration.hpp"
#include "incidence/finite_plane.hpp"

#include <array>
#include <cstdint>
#include <functional>

namespace incidence {

/// Raw index tuple in Instance slot order: point indices for point
/// statements, line indices for PB.
using Tuple = std::array<std::uint32_t, 7>;

struct BruteForceResult {
  std::uint64_t count = 0;
  std::uint64_t violations = 0;
  Verdict verdict = Verdict::Holds;
};

inline constexpr std::size_t kBruteForceMaxPoints = 13;

/// Reference enumeration: walks every tuple of the statement's schema and
/// filters with its own hypothesis code, reading only the incidence matrix.
/// `visit` (optional) sees each hypothesis-valid tuple. Throws PlaneTooLarge
/// above 13 points.
BruteForceResult brute_force_enumerate(const FinitePlane& pl, Statement st,
                                       const std::function<void(const Tuple&)>& visit = {});

}  // namespace incidence
