#pragma once

#include <Eigen/Dense>
#include <vector>

namespace replan::sim {

/// Naive moving-volume grid used as a timing baseline: the same translating
/// window as the ring buffer, but move_volume reallocates the full dense
/// array and copies every surviving cell instead of adjusting an offset.
class DenseGridBaseline {
 public:
  DenseGridBaseline(int side, double resolution, float fill,
                    const Eigen::Vector3d& center);

  int side() const { return side_; }
  const Eigen::Vector3i& offset() const { return offset_; }

  Eigen::Vector3i point_to_index(const Eigen::Vector3d& p) const;
  bool inside_volume(const Eigen::Vector3i& idx) const;
  float& at(const Eigen::Vector3i& idx);

  /// O(N^3) full copy.
  void move_volume(const Eigen::Vector3d& new_center);

 private:
  size_t address(const Eigen::Vector3i& idx) const;

  int side_;
  double resolution_;
  float fill_;
  Eigen::Vector3i offset_;
  std::vector<float> cells_;
};

}  // namespace replan::sim
