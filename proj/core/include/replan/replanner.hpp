#pragma once

#include <Eigen/Dense>
#include <vector>

#include "replan/bspline.hpp"
#include "replan/costs.hpp"
#include "replan/distance_field.hpp"
#include "replan/global_trajectory.hpp"
#include "replan/optimizer.hpp"

namespace replan {

struct ReplannerConfig {
  double dt = 0.5;      // knot spacing (s); also the commit cadence
  int free_points = 7;  // C: control points re-optimized every tick
  CostWeights weights;
  DerivativeLimits limits;    // enforced limits (pre-margin)
  double limit_margin = 1.2;  // optimizer sees limits scaled by this slack
  double tau = 0.5;           // collision threshold distance (m)
  int samples_per_segment = 10;
  OptimizeOptions optimize;
  /// kFromRest pins the start by repeating the start position for all six
  /// frozen points; kInFlight samples the global trajectory instead.
  enum class StartPolicy { kFromRest, kInFlight };
  StartPolicy start = StartPolicy::kFromRest;
  double start_time = 0.0;  // spline t0
};

/// Receding-horizon local replanner: a quintic spline with a frozen prefix
/// (>= 6 points) and exactly C free trailing points. Each tick re-optimizes
/// the free points against the supplied distance field with the endpoint
/// target taken from the global trajectory at t_ep, then freezes the first
/// free point (the command sent to the controller), appends a fresh free
/// point, and advances t_ep by dt.
///
/// Control points are associated with their Greville times
/// xi_j = t0 + (j-2)*dt; new points are initialized from the global
/// trajectory at xi_j, which reproduces straight-line references exactly.
/// The global trajectory is held by reference and must outlive the planner.
class Replanner {
 public:
  Replanner(const GlobalTrajectory& global, const ReplannerConfig& config);

  struct Command {
    int tick = 0;
    double knot_time = 0.0;  // Greville time of the committed point
    Eigen::Vector3d point = Eigen::Vector3d::Zero();
  };
  struct TickReport {
    OptimizeReport optimize;
  };

  /// Runs one replanning step against the given field snapshot. Always
  /// produces a command, even when the optimizer aborts (best iterate wins).
  Command tick(const DistanceField& field, TickReport* report = nullptr);

  const ReplannerConfig& config() const { return config_; }
  const UniformBSpline& spline() const { return spline_; }
  int frozen_count() const { return frozen_; }
  int free_count() const { return spline_.size() - frozen_; }
  double t_ep() const { return t_ep_; }
  int ticks() const { return ticks_; }
  const std::vector<Command>& commands() const { return commands_; }

  /// The spline restricted to fully frozen support: immutable under future
  /// ticks, evaluable over [t0, t0 + (frozen-5)*dt].
  UniformBSpline committed_trajectory() const;

 private:
  const GlobalTrajectory* global_;
  ReplannerConfig config_;
  UniformBSpline spline_;
  int frozen_;
  double t_ep_;
  int ticks_ = 0;
  std::vector<Command> commands_;
};

}  // namespace replan
