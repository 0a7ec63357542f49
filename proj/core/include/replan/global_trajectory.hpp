#pragma once

#include <Eigen/Dense>
#include <vector>

namespace replan {

/// Reference trajectory the local replanner tracks. Position is defined for
/// all t: queries are clamped to [0, duration], with zero velocity outside,
/// so a consumer past the end is steered toward hovering at the goal.
class GlobalTrajectory {
 public:
  virtual ~GlobalTrajectory() = default;
  virtual Eigen::Vector3d position(double t) const = 0;
  virtual Eigen::Vector3d velocity(double t) const = 0;
  virtual double duration() const = 0;

  Eigen::Vector3d goal() const { return position(duration()); }
};

/// Constant-speed straight line from start to goal.
class StraightLineTrajectory final : public GlobalTrajectory {
 public:
  StraightLineTrajectory(const Eigen::Vector3d& start,
                         const Eigen::Vector3d& goal, double speed);

  Eigen::Vector3d position(double t) const override;
  Eigen::Vector3d velocity(double t) const override;
  double duration() const override { return duration_; }

 private:
  Eigen::Vector3d start_;
  Eigen::Vector3d direction_;  // unit, zero for a degenerate segment
  double speed_;
  double duration_;
};

/// Constant-speed piecewise-linear interpolation through waypoints
/// (a degree-1 spline): continuous position, bounded velocity.
class WaypointTrajectory final : public GlobalTrajectory {
 public:
  WaypointTrajectory(std::vector<Eigen::Vector3d> waypoints, double speed);

  Eigen::Vector3d position(double t) const override;
  Eigen::Vector3d velocity(double t) const override;
  double duration() const override { return duration_; }

 private:
  std::vector<Eigen::Vector3d> waypoints_;
  std::vector<double> arrival_times_;
  double speed_;
  double duration_;
};

}  // namespace replan
