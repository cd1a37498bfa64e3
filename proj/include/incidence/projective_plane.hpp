#pragma once

#include "incidence/finite_plane.hpp"
#include "incidence/galois_field.hpp"

#include <array>
#include <string>
#include <vector>

namespace incidence {

/// Homogeneous coordinates scaled so the first nonzero entry is 1.
struct HomogeneousPoint {
  std::array<FieldElement, 3> coords{};
  auto operator<=>(const HomogeneousPoint&) const = default;
};

/// All (q^3 - 1)/(q - 1) canonical representatives, in lexicographic order
/// of (x, y, z) after normalization.
std::vector<HomogeneousPoint> canonical_points(const GaloisField& field);

HomogeneousPoint normalize(const GaloisField& field, std::array<FieldElement, 3> v);

std::string point_label(const HomogeneousPoint& p);

/// PG(2,q): points and lines both indexed by canonical_points; point i lies
/// on line j iff their coordinate dot product vanishes. Point labels are
/// "(x:y:z)", line labels "[a:b:c]". Throws UnsupportedOrder.
FinitePlanePtr build_pg(unsigned q);

}  // namespace incidence
