#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <vector>

#include "replan/ring_buffer.hpp"

namespace replan {

/// Log-odds update parameters. Probabilities are converted once at
/// construction; log_odds(p) = log(p / (1-p)).
struct OccupancyParams {
  double p_hit = 0.7;
  double p_miss = 0.4;
  double clamp_min_prob = 0.12;
  double clamp_max_prob = 0.97;
  double prior_log_odds = 0.0;  // unknown
  double occupied_threshold = 0.0;

  double hit_log_odds() const;
  double miss_log_odds() const;
  double min_log_odds() const;
  double max_log_odds() const;
};

/// Occupancy grid in a robocentric circular buffer with raycast-based
/// point-cloud insertion, following the two-phase marking scheme: endpoints
/// are marked first (occupied inside the volume, free-ray where the return
/// had to be clipped to the boundary), then each marked voxel is raycast
/// toward the sensor origin marking the strictly intermediate voxels free,
/// and finally one pass over the volume applies the hit/miss log-odds updates
/// and clears the marks. Occupied marks win over free marks within a batch.
class OccupancyBuffer {
 public:
  OccupancyBuffer(int size_exponent, double resolution,
                  const Eigen::Vector3d& center = Eigen::Vector3d::Zero(),
                  const OccupancyParams& params = {});

  const RingBuffer3D<float>& grid() const { return grid_; }
  const OccupancyParams& params() const { return params_; }
  int side() const { return grid_.side(); }
  double resolution() const { return grid_.resolution(); }
  const Eigen::Vector3i& offset() const { return grid_.offset(); }

  Eigen::Vector3i point_to_index(const Eigen::Vector3d& p) const {
    return grid_.point_to_index(p);
  }
  Eigen::Vector3d index_to_center(const Eigen::Vector3i& idx) const {
    return grid_.index_to_center(idx);
  }
  bool inside_volume(const Eigen::Vector3i& idx) const {
    return grid_.inside_volume(idx);
  }
  size_t address(const Eigen::Vector3i& idx) const {
    return grid_.address(idx);
  }

  double log_odds(const Eigen::Vector3i& idx) const { return grid_.at(idx); }
  void set_log_odds(const Eigen::Vector3i& idx, double value) {
    grid_.at(idx) = static_cast<float>(value);
  }

  /// log_odds strictly above the threshold. Uses the configured default
  /// threshold unless one is passed.
  bool is_occupied(const Eigen::Vector3i& idx) const {
    return is_occupied(idx, params_.occupied_threshold);
  }
  bool is_occupied(const Eigen::Vector3i& idx, double threshold) const;

  void move_volume(const Eigen::Vector3d& new_center) {
    grid_.move_volume(new_center);
  }

  /// Voxel chain from a to b (both inside the volume, else
  /// std::domain_error): every voxel pierced by the center-to-center
  /// segment.
  std::vector<Eigen::Vector3i> raycast_indices(const Eigen::Vector3i& a,
                                               const Eigen::Vector3i& b) const;

  /// Inserts one batch of world-frame points measured from sensor_origin.
  /// Throws std::domain_error if the origin is outside the volume.
  void insert_point_cloud(const Eigen::Vector3d& sensor_origin,
                          std::span<const Eigen::Vector3d> points);

  struct InsertStats {
    size_t raycasts = 0;
    size_t volume_passes = 0;
    size_t occupied_marks = 0;
    size_t free_marks = 0;
  };
  /// Counters for the most recent insert_point_cloud call.
  const InsertStats& last_insert_stats() const { return stats_; }

  /// True when every flag is untouched (holds outside insert_point_cloud).
  bool flags_clear() const;

 private:
  enum Flag : std::uint8_t { kUntouched = 0, kOccupiedMark = 1, kFreeMark = 2 };

  RingBuffer3D<float> grid_;
  OccupancyParams params_;
  std::vector<std::uint8_t> flags_;    // indexed by address
  std::vector<Eigen::Vector3i> marked_;
  InsertStats stats_;
};

}  // namespace replan
