#include "replan/sim/depth_sensor.hpp"

#include <cmath>
#include <stdexcept>

namespace replan::sim {

Pose Pose::level_facing(const Eigen::Vector3d& position, double yaw) {
  Pose pose;
  pose.position = position;
  pose.rotation =
      Eigen::AngleAxisd(yaw, Eigen::Vector3d::UnitZ()).toRotationMatrix();
  return pose;
}

std::vector<Eigen::Vector3d> render_depth(const World& world, const Pose& pose,
                                          const SensorModel& sensor) {
  if (sensor.width < 1 || sensor.height < 1 || !(sensor.max_range > 0.0))
    throw std::invalid_argument("render_depth: bad sensor model");
  if (!pose.position.allFinite())
    throw std::invalid_argument("render_depth: non-finite pose");

  std::vector<Eigen::Vector3d> points;
  if (world.empty()) return points;
  points.reserve(static_cast<size_t>(sensor.width) * sensor.height / 4);

  const double tan_h = std::tan(sensor.h_fov_deg * M_PI / 360.0);
  const double tan_v = std::tan(sensor.v_fov_deg * M_PI / 360.0);
  for (int row = 0; row < sensor.height; ++row) {
    // Image plane at x = 1: y spans the horizontal FOV, z the vertical.
    const double v = 1.0 - (2.0 * row + 1.0) / sensor.height;  // top = +z
    for (int col = 0; col < sensor.width; ++col) {
      const double u = 1.0 - (2.0 * col + 1.0) / sensor.width;  // left = +y
      const Eigen::Vector3d dir_sensor =
          Eigen::Vector3d(1.0, u * tan_h, v * tan_v).normalized();
      const Eigen::Vector3d dir_world = pose.rotation * dir_sensor;
      const double range =
          world.raycast(pose.position, dir_world, sensor.max_range);
      if (std::isfinite(range)) points.push_back(range * dir_sensor);
    }
  }
  return points;
}

}  // namespace replan::sim
