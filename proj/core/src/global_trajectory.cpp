#include "replan/global_trajectory.hpp"

#include <algorithm>
#include <stdexcept>

namespace replan {

StraightLineTrajectory::StraightLineTrajectory(const Eigen::Vector3d& start,
                                               const Eigen::Vector3d& goal,
                                               double speed)
    : start_(start), speed_(speed) {
  if (!(speed > 0.0))
    throw std::invalid_argument("StraightLineTrajectory: speed must be > 0");
  const Eigen::Vector3d delta = goal - start;
  const double length = delta.norm();
  direction_ = length > 0.0 ? (delta / length).eval() : Eigen::Vector3d::Zero();
  duration_ = length / speed;
}

Eigen::Vector3d StraightLineTrajectory::position(double t) const {
  const double tc = std::clamp(t, 0.0, duration_);
  return start_ + speed_ * tc * direction_;
}

Eigen::Vector3d StraightLineTrajectory::velocity(double t) const {
  if (t < 0.0 || t > duration_) return Eigen::Vector3d::Zero();
  return speed_ * direction_;
}

WaypointTrajectory::WaypointTrajectory(std::vector<Eigen::Vector3d> waypoints,
                                       double speed)
    : waypoints_(std::move(waypoints)), speed_(speed) {
  if (waypoints_.size() < 2)
    throw std::invalid_argument("WaypointTrajectory: need at least 2 waypoints");
  if (!(speed > 0.0))
    throw std::invalid_argument("WaypointTrajectory: speed must be > 0");
  arrival_times_.resize(waypoints_.size());
  arrival_times_[0] = 0.0;
  for (size_t i = 1; i < waypoints_.size(); ++i) {
    const double length = (waypoints_[i] - waypoints_[i - 1]).norm();
    arrival_times_[i] = arrival_times_[i - 1] + length / speed_;
  }
  duration_ = arrival_times_.back();
}

Eigen::Vector3d WaypointTrajectory::position(double t) const {
  const double tc = std::clamp(t, 0.0, duration_);
  const auto it =
      std::upper_bound(arrival_times_.begin(), arrival_times_.end(), tc);
  const size_t hi = std::min<size_t>(it - arrival_times_.begin(),
                                     waypoints_.size() - 1);
  if (hi == 0) return waypoints_.front();
  const size_t lo = hi - 1;
  const double span = arrival_times_[hi] - arrival_times_[lo];
  if (span <= 0.0) return waypoints_[hi];
  const double f = (tc - arrival_times_[lo]) / span;
  return waypoints_[lo] + f * (waypoints_[hi] - waypoints_[lo]);
}

Eigen::Vector3d WaypointTrajectory::velocity(double t) const {
  if (t < 0.0 || t > duration_) return Eigen::Vector3d::Zero();
  const auto it =
      std::upper_bound(arrival_times_.begin(), arrival_times_.end(), t);
  const size_t hi = std::min<size_t>(it - arrival_times_.begin(),
                                     waypoints_.size() - 1);
  const size_t lo = hi == 0 ? 0 : hi - 1;
  const Eigen::Vector3d delta = waypoints_[hi] - waypoints_[lo];
  const double length = delta.norm();
  if (length <= 0.0) return Eigen::Vector3d::Zero();
  return speed_ * delta / length;
}

}  // namespace replan
