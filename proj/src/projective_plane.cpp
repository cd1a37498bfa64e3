#include "incidence/projective_plane.hpp"

#include <algorithm>

namespace incidence {

HomogeneousPoint normalize(const GaloisField& field, std::array<FieldElement, 3> v) {
  for (auto c : v) {
    if (c == 0) continue;
    const auto s = field.inv(c);
    for (auto& x : v) x = field.mul(x, s);
    return {v};
  }
  return {v};
}

std::vector<HomogeneousPoint> canonical_points(const GaloisField& field) {
  const unsigned q = field.order();
  std::vector<HomogeneousPoint> out;
  for (unsigned x = 0; x < q; ++x) {
    for (unsigned y = 0; y < q; ++y) {
      for (unsigned z = 0; z < q; ++z) {
        if (x == 0 && y == 0 && z == 0) continue;
        std::array<FieldElement, 3> v{static_cast<FieldElement>(x),
                                      static_cast<FieldElement>(y),
                                      static_cast<FieldElement>(z)};
        if (normalize(field, v) == HomogeneousPoint{v}) out.push_back({v});
      }
    }
  }
  return out;
}

std::string point_label(const HomogeneousPoint& p) {
  return "(" + std::to_string(p.coords[0]) + ":" + std::to_string(p.coords[1]) +
         ":" + std::to_string(p.coords[2]) + ")";
}

FinitePlanePtr build_pg(unsigned q) {
  const GaloisField field(q);
  const auto pts = canonical_points(field);
  const std::size_t n = pts.size();
  std::vector<std::uint8_t> matrix(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      FieldElement dot = 0;
      for (int k = 0; k < 3; ++k) {
        dot = field.add(dot, field.mul(pts[i].coords[k], pts[j].coords[k]));
      }
      matrix[i * n + j] = dot == 0 ? 1 : 0;
    }
  }
  std::vector<std::string> point_labels, line_labels;
  for (const auto& p : pts) {
    auto label = point_label(p);
    point_labels.push_back(label);
    line_labels.push_back("[" + label.substr(1, label.size() - 2) + "]");
  }
  return FinitePlane::create(IncidenceStructure(n, n, std::move(matrix)),
                             "pg" + std::to_string(q), std::move(point_labels),
                             std::move(line_labels));
}

}  // namespace incidence
