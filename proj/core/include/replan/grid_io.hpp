#pragma once

#include <filesystem>
#include <ostream>

#include "replan/distance_field.hpp"
#include "replan/occupancy_buffer.hpp"

namespace replan {

/// Voxel dump format (CSV with one comment header):
///   # side=<N> resolution=<r> offset=<ox> <oy> <oz>
///   x,y,z,value
/// with absolute voxel indices. Occupancy dumps skip cells still at the
/// prior; distance dumps keep cells with value <= max_distance, so a
/// "voxels within tau" overlay is one dump away.
void save_occupancy_csv(std::ostream& out, const OccupancyBuffer& buffer);
void save_occupancy_csv(const std::filesystem::path& path,
                        const OccupancyBuffer& buffer);

void save_distance_csv(std::ostream& out, const DistanceField& field,
                       double max_distance);
void save_distance_csv(const std::filesystem::path& path,
                       const DistanceField& field, double max_distance);

/// Full-grid JSON dump: {"size_exponent", "resolution", "offset", "center",
/// "log_odds"} with the cell array unwrapped to x-major order starting at
/// the offset index.
void save_occupancy_json(const std::filesystem::path& path,
                         const OccupancyBuffer& buffer);

/// One depth frame: sensor pose plus sensor-frame points.
struct DepthFrame {
  Eigen::Vector3d position = Eigen::Vector3d::Zero();
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();  // world from sensor
  std::vector<Eigen::Vector3d> points;
};

/// JSON-lines frame log: one {"position", "rotation" (row-major 9),
/// "points"} object per line.
void save_frames_jsonl(const std::filesystem::path& path,
                       const std::vector<DepthFrame>& frames);
std::vector<DepthFrame> load_frames_jsonl(const std::filesystem::path& path);

}  // namespace replan
