#pragma once

#include "incidence/finite_plane.hpp"
#include "incidence/moulton.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <variant>

namespace incidence {

/// Uniform access to a finite plane or the generative Moulton plane. Cheap to
/// copy; the underlying plane is shared and immutable.
class PlaneHandle {
 public:
  using Variant = std::variant<FinitePlanePtr, std::shared_ptr<const MoultonPlane>>;

  explicit PlaneHandle(FinitePlanePtr plane) : plane_(std::move(plane)) {}
  explicit PlaneHandle(std::shared_ptr<const MoultonPlane> plane) : plane_(std::move(plane)) {}

  const std::string& descriptor() const;
  bool is_finite() const { return std::holds_alternative<FinitePlanePtr>(plane_); }
  /// Null for generative planes.
  const FinitePlane* finite() const;

  /// Calls `f(const FinitePlane&)` or `f(const MoultonPlane&)`.
  template <class F>
  decltype(auto) visit(F&& f) const {
    return std::visit([&](const auto& ptr) -> decltype(auto) { return f(*ptr); }, plane_);
  }

 private:
  Variant plane_;
};

PlaneHandle build_moulton();

/// Dual plane of a finite plane; point labels are the original line labels.
FinitePlanePtr dual_plane(const FinitePlane& plane);

/// Resolves "pg<q>", "moulton", "hall9", "dual:<name>" or "file:<path>".
/// Throws UnknownName for anything else.
PlaneHandle make_plane(std::string_view name);

}  // namespace incidence
