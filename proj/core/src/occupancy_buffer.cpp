#include "replan/occupancy_buffer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "replan/raycast.hpp"

namespace replan {

namespace {
double to_log_odds(double p) { return std::log(p / (1.0 - p)); }
}  // namespace

double OccupancyParams::hit_log_odds() const { return to_log_odds(p_hit); }
double OccupancyParams::miss_log_odds() const { return to_log_odds(p_miss); }
double OccupancyParams::min_log_odds() const {
  return to_log_odds(clamp_min_prob);
}
double OccupancyParams::max_log_odds() const {
  return to_log_odds(clamp_max_prob);
}

OccupancyBuffer::OccupancyBuffer(int size_exponent, double resolution,
                                 const Eigen::Vector3d& center,
                                 const OccupancyParams& params)
    : grid_(size_exponent, resolution,
            static_cast<float>(params.prior_log_odds), center),
      params_(params) {
  flags_.assign(grid_.cell_count(), kUntouched);
  if (!(params_.p_hit > 0.5 && params_.p_hit < 1.0) ||
      !(params_.p_miss > 0.0 && params_.p_miss < 0.5))
    throw std::invalid_argument("OccupancyBuffer: p_hit in (0.5,1), p_miss in (0,0.5)");
}

bool OccupancyBuffer::is_occupied(const Eigen::Vector3i& idx,
                                  double threshold) const {
  return grid_.at(idx) > threshold;
}

std::vector<Eigen::Vector3i> OccupancyBuffer::raycast_indices(
    const Eigen::Vector3i& a, const Eigen::Vector3i& b) const {
  if (!grid_.inside_volume(a) || !grid_.inside_volume(b))
    throw std::domain_error("raycast_indices: endpoint outside volume");
  return replan::raycast_indices(a, b);
}

bool OccupancyBuffer::flags_clear() const {
  return std::all_of(flags_.begin(), flags_.end(),
                     [](std::uint8_t f) { return f == kUntouched; });
}

void OccupancyBuffer::insert_point_cloud(
    const Eigen::Vector3d& sensor_origin,
    std::span<const Eigen::Vector3d> points) {
  const Eigen::Vector3i origin_idx = grid_.point_to_index(sensor_origin);
  if (!grid_.inside_volume(origin_idx))
    throw std::domain_error("insert_point_cloud: sensor origin outside volume");

  stats_ = InsertStats{};
  marked_.clear();

  const double res = grid_.resolution();
  const Eigen::Vector3d box_min = grid_.offset().cast<double>() * res;
  const Eigen::Vector3d box_max =
      (grid_.offset() + Eigen::Vector3i::Constant(grid_.side())).cast<double>() *
      res;

  // Phase 1: mark measurement endpoints.
  for (const Eigen::Vector3d& point : points) {
    if (!point.allFinite()) continue;
    Eigen::Vector3i idx = grid_.point_to_index(point);
    Flag mark = kOccupiedMark;
    if (!grid_.inside_volume(idx)) {
      // Clip the ray to the volume and mark the boundary voxel as a free ray.
      const Eigen::Vector3d d = point - sensor_origin;
      double t_exit = 1.0;
      for (int axis = 0; axis < 3; ++axis) {
        if (d(axis) > 0.0)
          t_exit = std::min(t_exit, (box_max(axis) - sensor_origin(axis)) / d(axis));
        else if (d(axis) < 0.0)
          t_exit = std::min(t_exit, (box_min(axis) - sensor_origin(axis)) / d(axis));
      }
      idx = grid_.point_to_index(sensor_origin + std::max(t_exit, 0.0) * d);
      const Eigen::Vector3i hi =
          grid_.offset() + Eigen::Vector3i::Constant(grid_.side() - 1);
      idx = idx.cwiseMax(grid_.offset()).cwiseMin(hi);
      mark = kFreeMark;
    }
    std::uint8_t& flag = flags_[grid_.address(idx)];
    if (flag == kUntouched) {
      flag = mark;
      marked_.push_back(idx);
    } else if (mark == kOccupiedMark && flag == kFreeMark) {
      flag = kOccupiedMark;  // endpoint wins
    }
  }

  // Phase 2: raycast every marked voxel toward the origin, marking strictly
  // intermediate voxels as free rays.
  for (const Eigen::Vector3i& from : marked_) {
    ++stats_.raycasts;
    raycast_visit(from, origin_idx, [&](const Eigen::Vector3i& v) {
      if (v == from || v == origin_idx) return;
      std::uint8_t& flag = flags_[grid_.address(v)];
      if (flag == kUntouched) flag = kFreeMark;
    });
  }

  // Phase 3: one pass over the volume applies the updates and clears flags.
  ++stats_.volume_passes;
  const float hit = static_cast<float>(params_.hit_log_odds());
  const float miss = static_cast<float>(params_.miss_log_odds());
  const float lo_min = static_cast<float>(params_.min_log_odds());
  const float lo_max = static_cast<float>(params_.max_log_odds());
  for (size_t a = 0; a < flags_.size(); ++a) {
    const std::uint8_t flag = flags_[a];
    if (flag == kUntouched) continue;
    float& cell = grid_.at_address(a);
    if (flag == kOccupiedMark) {
      cell = std::min(cell + hit, lo_max);
      ++stats_.occupied_marks;
    } else {
      cell = std::max(cell + miss, lo_min);
      ++stats_.free_marks;
    }
    flags_[a] = kUntouched;
  }
}

}  // namespace replan
