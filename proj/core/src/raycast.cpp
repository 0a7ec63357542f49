#include "replan/raycast.hpp"

namespace replan {

std::vector<Eigen::Vector3i> raycast_indices(const Eigen::Vector3i& a,
                                             const Eigen::Vector3i& b) {
  std::vector<Eigen::Vector3i> out;
  out.reserve(static_cast<size_t>((b - a).cwiseAbs().sum()) + 1);
  raycast_visit(a, b, [&out](const Eigen::Vector3i& v) { out.push_back(v); });
  return out;
}

}  // namespace replan
