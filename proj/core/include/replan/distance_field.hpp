#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "replan/occupancy_buffer.hpp"

namespace replan {

struct DistanceFieldOptions {
  /// Voxels with log-odds strictly above this are obstacles.
  double occupied_threshold = 0.0;
  /// Conservative mode: voxels still exactly at the prior log-odds (never
  /// observed) count as obstacles instead of free space.
  bool treat_unknown_as_occupied = false;
  /// Caps stored distances at this value when > 0 (0 disables).
  double truncation = 0.0;
};

/// Euclidean distance transform of an occupancy snapshot, with trilinear
/// distance/gradient queries over the voxel-center lattice.
///
/// Distances are measured between voxel centers (pure voxel EDT, so obstacle
/// surfaces carry a half-voxel bias) and are exact: the squared cell grid is
/// computed with integer lower-envelope passes along each axis and only the
/// final conversion to meters takes a square root. Queries outside the
/// interpolable interior return far_distance() with a zero gradient —
/// unmapped space is treated as free. A buffer with no occupied voxel yields
/// far_distance() everywhere.
class DistanceField {
 public:
  DistanceField() = default;
  explicit DistanceField(const DistanceFieldOptions& options)
      : options_(options) {}

  /// Recomputes the full field from the occupancy buffer (no incremental
  /// updates). Geometry (side, resolution, offset) is snapshotted here.
  void update(const OccupancyBuffer& occupancy);

  bool has_data() const { return side_ > 0; }
  int side() const { return side_; }
  double resolution() const { return resolution_; }
  const Eigen::Vector3i& offset() const { return offset_; }
  const DistanceFieldOptions& options() const { return options_; }

  /// Sentinel distance for unmapped/empty space: side * resolution
  /// (capped by the truncation radius when enabled).
  double far_distance() const { return far_; }

  /// Exact distance at a voxel center, in meters; far_distance() outside
  /// the volume.
  double voxel_distance(const Eigen::Vector3i& idx) const;

  /// Integer squared distance (voxel units) at an in-volume voxel.
  std::int64_t squared_cells(const Eigen::Vector3i& idx) const;
  const std::vector<std::int64_t>& squared() const { return squared_; }

  struct Sample {
    double distance = 0.0;
    Eigen::Vector3d gradient = Eigen::Vector3d::Zero();
  };
  /// Trilinear interpolation over the 8 surrounding voxel centers, with the
  /// analytic gradient of the interpolant (piecewise linear per axis).
  Sample sample(const Eigen::Vector3d& point) const;
  double distance_at(const Eigen::Vector3d& point) const {
    return sample(point).distance;
  }
  Eigen::Vector3d gradient_at(const Eigen::Vector3d& point) const {
    return sample(point).gradient;
  }

 private:
  size_t local_address(int ax, int ay, int az) const {
    return (static_cast<size_t>(ax) * side_ + ay) * side_ + az;
  }

  DistanceFieldOptions options_;
  int side_ = 0;
  double resolution_ = 0.0;
  Eigen::Vector3i offset_ = Eigen::Vector3i::Zero();
  double far_ = 0.0;
  std::vector<std::int64_t> squared_;  // voxel units, local x-major order
  std::vector<double> meters_;         // resolution * sqrt(squared), capped
};

inline DistanceField compute_edt(const OccupancyBuffer& occupancy,
                                 const DistanceFieldOptions& options = {}) {
  DistanceField field(options);
  field.update(occupancy);
  return field;
}

}  // namespace replan
