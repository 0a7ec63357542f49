#include "replan/sim/episode.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace replan::sim {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

}  // namespace

void rasterize_world(const World& world, OccupancyBuffer& buffer) {
  const double lo_max = buffer.params().max_log_odds();
  const double lo_min = buffer.params().min_log_odds();
  const int n = buffer.side();
  const Eigen::Vector3i o = buffer.offset();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const Eigen::Vector3i idx = o + Eigen::Vector3i(x, y, z);
        const bool inside = world.distance(buffer.index_to_center(idx)) <= 0.0;
        buffer.set_log_odds(idx, inside ? lo_max : lo_min);
      }
}

double mean(const std::vector<double>& samples) {
  if (samples.empty()) return 0.0;
  double sum = 0.0;
  for (double s : samples) sum += s;
  return sum / samples.size();
}

double median(std::vector<double> samples) {
  if (samples.empty()) return 0.0;
  const size_t mid = samples.size() / 2;
  std::nth_element(samples.begin(), samples.begin() + mid, samples.end());
  return samples[mid];
}

EpisodeMetrics run_episode(const World& world, const GlobalTrajectory& global,
                           const EpisodeConfig& config) {
  EpisodeMetrics metrics;
  const double dt = config.replanner.dt;
  const double t0 = config.replanner.start_time;
  const Eigen::Vector3d start = global.position(t0);
  const Eigen::Vector3d goal = global.goal();
  metrics.straight_line_distance = (goal - start).norm();

  Replanner planner(global, config.replanner);

  OccupancyBuffer buffer(
      config.buffer_exponent, config.buffer_resolution,
      config.oracle_map ? ((world.box.min + world.box.max) / 2.0).eval()
                        : start,
      config.occupancy);
  DistanceField field(config.edt);
  if (config.oracle_map) {
    const auto t_start = Clock::now();
    rasterize_world(world, buffer);
    metrics.timings.insert_ms.push_back(ms_since(t_start));
    const auto t_edt = Clock::now();
    field.update(buffer);
    metrics.timings.edt_ms.push_back(ms_since(t_edt));
  } else {
    field.update(buffer);  // empty buffer: everything far
  }

  Eigen::Vector3d pose = start;
  double yaw = std::atan2(goal.y() - start.y(), goal.x() - start.x());
  metrics.executed_path.push_back(pose);

  std::vector<Eigen::Vector3d> world_points;
  for (int frame = 0;; ++frame) {
    const double t_frame = t0 + frame * dt;
    pose = planner.spline().evaluate(t_frame);

    if ((pose - goal).norm() <= config.goal_tolerance) {
      metrics.reached_goal = true;
      break;
    }
    if (t_frame - t0 > config.timeout) {
      metrics.timed_out = true;
      metrics.failure = "timeout";
      break;
    }

    if (!config.oracle_map) {
      const Eigen::Vector3d vel = planner.spline().evaluate(t_frame, 1);
      if (vel.head<2>().norm() > 0.05) yaw = std::atan2(vel.y(), vel.x());
      const Pose sensor_pose = Pose::level_facing(pose, yaw);

      auto t_stage = Clock::now();
      const std::vector<Eigen::Vector3d> cloud =
          render_depth(world, sensor_pose, config.sensor);
      metrics.timings.render_ms.push_back(ms_since(t_stage));

      t_stage = Clock::now();
      buffer.move_volume(pose);
      metrics.timings.move_ms.push_back(ms_since(t_stage));

      world_points.resize(cloud.size());
      for (size_t i = 0; i < cloud.size(); ++i)
        world_points[i] = sensor_pose.rotation * cloud[i] + pose;
      t_stage = Clock::now();
      buffer.insert_point_cloud(pose, world_points);
      metrics.timings.insert_ms.push_back(ms_since(t_stage));

      t_stage = Clock::now();
      field.update(buffer);
      metrics.timings.edt_ms.push_back(ms_since(t_stage));
    }

    const auto t_opt = Clock::now();
    Replanner::TickReport report;
    planner.tick(field, &report);
    metrics.timings.optimize_ms.push_back(ms_since(t_opt));
    metrics.tick_cost.push_back(report.optimize.final_cost);
    ++metrics.ticks;

    // Integrate the just-committed interval [t_frame, t_frame + dt].
    Eigen::Vector3d prev = pose;
    bool hit = false;
    for (int j = 1; j <= config.collision_samples_per_step; ++j) {
      const double ts =
          t_frame + dt * j / config.collision_samples_per_step;
      const Eigen::Vector3d p = planner.spline().evaluate(ts);
      metrics.executed_length += (p - prev).norm();
      metrics.executed_path.push_back(p);
      prev = p;
      if (world.collides(p, config.mav_radius)) {
        hit = true;
        break;
      }
    }
    metrics.sim_duration = t_frame + dt - t0;
    if (hit) {
      metrics.collided = true;
      metrics.failure = "collision";
      break;
    }
  }

  metrics.commands = planner.commands();
  metrics.committed = planner.committed_trajectory();

  // Close the gap to the goal so path length ratios compare like with like
  // (a run stopped at the goal-region edge is not shorter than the line).
  if (!metrics.executed_path.empty())
    metrics.executed_length += (goal - metrics.executed_path.back()).norm();
  metrics.normalized_path_length =
      metrics.straight_line_distance > 0.0
          ? metrics.executed_length / metrics.straight_line_distance
          : 1.0;
  metrics.success = metrics.reached_goal && !metrics.collided;
  return metrics;
}

}  // namespace replan::sim
