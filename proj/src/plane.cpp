#include "incidence/plane.hpp"

#include "incidence/error.hpp"
#include "incidence/matrix_io.hpp"
#include "incidence/projective_plane.hpp"
#include "incidence/quasifield.hpp"

#include <charconv>

namespace incidence {

const std::string& PlaneHandle::descriptor() const {
  return visit([](const auto& plane) -> const std::string& { return plane.name(); });
}

const FinitePlane* PlaneHandle::finite() const {
  if (const auto* p = std::get_if<FinitePlanePtr>(&plane_)) return p->get();
  return nullptr;
}

PlaneHandle build_moulton() { return PlaneHandle(std::make_shared<const MoultonPlane>()); }

FinitePlanePtr dual_plane(const FinitePlane& plane) {
  std::vector<std::string> points, lines;
  for (std::size_t j = 0; j < plane.n_lines(); ++j) points.push_back(plane.label(plane.line(j)));
  for (std::size_t i = 0; i < plane.n_points(); ++i) lines.push_back(plane.label(plane.point(i)));
  return FinitePlane::create(dualize(plane.structure()), "dual:" + plane.name(),
                             std::move(points), std::move(lines));
}

PlaneHandle make_plane(std::string_view name) {
  if (name == "moulton") return build_moulton();
  if (name == "hall9") return PlaneHandle(build_hall9());
  if (name.substr(0, 5) == "dual:") {
    const auto inner = make_plane(name.substr(5));
    if (!inner.is_finite()) {
      throw Error(ErrorCode::UnknownName, "only finite planes can be dualized");
    }
    return PlaneHandle(dual_plane(*inner.finite()));
  }
  if (name.substr(0, 5) == "file:") {
    const std::string path(name.substr(5));
    return PlaneHandle(FinitePlane::create(read_incidence_file(path), std::string(name)));
  }
  if (name.substr(0, 2) == "pg") {
    unsigned q = 0;
    const auto digits = name.substr(2);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), q);
    if (ec == std::errc{} && ptr == digits.data() + digits.size() && !digits.empty()) {
      return PlaneHandle(build_pg(q));
    }
  }
  throw Error(ErrorCode::UnknownName, "unknown plane '" + std::string(name) + "'");
}

}  // namespace incidence
