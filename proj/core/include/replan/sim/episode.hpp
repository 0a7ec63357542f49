#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "replan/distance_field.hpp"
#include "replan/global_trajectory.hpp"
#include "replan/occupancy_buffer.hpp"
#include "replan/replanner.hpp"
#include "replan/sim/depth_sensor.hpp"
#include "replan/sim/world.hpp"

namespace replan::sim {

struct EpisodeConfig {
  ReplannerConfig replanner;
  SensorModel sensor;
  int buffer_exponent = 6;         // 64^3 voxels
  double buffer_resolution = 0.1;  // m
  OccupancyParams occupancy;
  DistanceFieldOptions edt;
  double mav_radius = 0.3;     // ground-truth collision bounding sphere
  double goal_tolerance = 0.5; // goal region radius (m)
  double timeout = 60.0;       // simulated seconds
  /// Known-map mode: rasterize the ground truth into the buffer once and
  /// skip per-frame sensing (the buffer must be sized to cover the world).
  bool oracle_map = false;
  int collision_samples_per_step = 25;
};

struct StageTimings {
  std::vector<double> render_ms;    // point computation
  std::vector<double> move_ms;      // volume move
  std::vector<double> insert_ms;    // measurement insertion
  std::vector<double> edt_ms;       // distance transform
  std::vector<double> optimize_ms;  // replanner tick
};

double mean(const std::vector<double>& samples);
double median(std::vector<double> samples);

/// Marks every voxel whose center lies inside an obstacle as fully occupied
/// and everything else as fully free (known-map mode).
void rasterize_world(const World& world, OccupancyBuffer& buffer);

struct EpisodeMetrics {
  bool success = false;
  bool reached_goal = false;
  bool collided = false;
  bool timed_out = false;
  double straight_line_distance = 0.0;
  double executed_length = 0.0;  // includes the straight gap to the goal
  double normalized_path_length = 0.0;
  int ticks = 0;
  double sim_duration = 0.0;
  StageTimings timings;
  std::vector<double> tick_cost;  // optimizer final cost per tick
  std::vector<Eigen::Vector3d> executed_path;
  std::vector<Replanner::Command> commands;  // one per tick
  std::optional<UniformBSpline> committed;  // frozen prefix at episode end
  std::string failure;
};

/// Full receding-horizon run: each simulated frame advances the pose along
/// the committed spline by one knot interval, senses (unless oracle_map),
/// updates the map and distance field, and runs one replanner tick. Ends on
/// goal-region arrival, ground-truth collision, or timeout. Collision
/// verdicts come from the ground-truth world only.
EpisodeMetrics run_episode(const World& world, const GlobalTrajectory& global,
                           const EpisodeConfig& config);

}  // namespace replan::sim
