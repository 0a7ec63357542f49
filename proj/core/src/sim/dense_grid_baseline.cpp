#include "replan/sim/dense_grid_baseline.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace replan::sim {

DenseGridBaseline::DenseGridBaseline(int side, double resolution, float fill,
                                     const Eigen::Vector3d& center)
    : side_(side), resolution_(resolution), fill_(fill) {
  if (side < 2 || !(resolution > 0.0))
    throw std::invalid_argument("DenseGridBaseline: bad geometry");
  offset_ = point_to_index(center).array() - side_ / 2;
  cells_.assign(static_cast<size_t>(side_) * side_ * side_, fill_);
}

Eigen::Vector3i DenseGridBaseline::point_to_index(
    const Eigen::Vector3d& p) const {
  Eigen::Vector3i idx;
  for (int axis = 0; axis < 3; ++axis)
    idx(axis) = static_cast<int>(std::floor(p(axis) / resolution_));
  return idx;
}

bool DenseGridBaseline::inside_volume(const Eigen::Vector3i& idx) const {
  const Eigen::Vector3i local = idx - offset_;
  return (local.array() >= 0).all() && (local.array() < side_).all();
}

size_t DenseGridBaseline::address(const Eigen::Vector3i& idx) const {
  const Eigen::Vector3i local = idx - offset_;
  return (static_cast<size_t>(local.x()) * side_ + local.y()) * side_ +
         local.z();
}

float& DenseGridBaseline::at(const Eigen::Vector3i& idx) {
  return cells_[address(idx)];
}

void DenseGridBaseline::move_volume(const Eigen::Vector3d& new_center) {
  const Eigen::Vector3i new_offset =
      point_to_index(new_center).array() - side_ / 2;
  if (new_offset == offset_) return;
  std::vector<float> fresh(cells_.size(), fill_);
  for (int x = 0; x < side_; ++x) {
    const int old_x = x + new_offset.x() - offset_.x();
    if (old_x < 0 || old_x >= side_) continue;
    for (int y = 0; y < side_; ++y) {
      const int old_y = y + new_offset.y() - offset_.y();
      if (old_y < 0 || old_y >= side_) continue;
      for (int z = 0; z < side_; ++z) {
        const int old_z = z + new_offset.z() - offset_.z();
        if (old_z < 0 || old_z >= side_) continue;
        fresh[(static_cast<size_t>(x) * side_ + y) * side_ + z] =
            cells_[(static_cast<size_t>(old_x) * side_ + old_y) * side_ +
                   old_z];
      }
    }
  }
  cells_ = std::move(fresh);
  offset_ = new_offset;
}

}  // namespace replan::sim
