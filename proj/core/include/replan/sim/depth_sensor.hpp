#pragma once

#include <Eigen/Dense>
#include <vector>

#include "replan/sim/world.hpp"

namespace replan::sim {

struct SensorModel {
  double h_fov_deg = 90.0;
  double v_fov_deg = 73.0;
  int width = 160;
  int height = 120;
  double max_range = 5.0;
  double rate_hz = 20.0;
};

/// Sensor pose in the world. Sensor frame: +x forward (optical axis),
/// +y left, +z up.
struct Pose {
  Eigen::Vector3d position = Eigen::Vector3d::Zero();
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();  // world from sensor

  static Pose level_facing(const Eigen::Vector3d& position, double yaw);
};

/// Pinhole depth render: one analytic ray-primitive intersection per pixel;
/// returns sensor-frame hit points, omitting rays past max range.
/// Deterministic.
std::vector<Eigen::Vector3d> render_depth(const World& world, const Pose& pose,
                                          const SensorModel& sensor);

}  // namespace replan::sim
