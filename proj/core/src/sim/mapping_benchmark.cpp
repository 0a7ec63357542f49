#include "replan/sim/mapping_benchmark.hpp"

#include <chrono>
#include <cmath>

#include "replan/distance_field.hpp"
#include "replan/occupancy_buffer.hpp"
#include "replan/sim/dense_grid_baseline.hpp"
#include "replan/sim/episode.hpp"

namespace replan::sim {

namespace {
using Clock = std::chrono::steady_clock;
double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}
}  // namespace

MappingBenchReport bench_mapping(const World& world,
                                 const MappingBenchConfig& cfg) {
  MappingBenchReport report;

  // Straight, level pass through the middle of the world.
  const Eigen::Vector3d center = (world.box.min + world.box.max) / 2.0;
  const Eigen::Vector3d start =
      center - Eigen::Vector3d(cfg.path_length / 2.0, 0.0, 0.0);
  const double step = cfg.path_length / std::max(1, cfg.frames - 1);

  OccupancyBuffer buffer(cfg.buffer_exponent, cfg.resolution, start);
  DistanceField field;
  DenseGridBaseline baseline(buffer.side(), cfg.resolution, 0.0f, start);

  std::vector<Eigen::Vector3d> world_points;
  for (int frame = 0; frame < cfg.frames; ++frame) {
    const Eigen::Vector3d pose = start + Eigen::Vector3d(frame * step, 0, 0);
    const Pose sensor_pose = Pose::level_facing(pose, 0.0);

    auto t = Clock::now();
    const std::vector<Eigen::Vector3d> cloud =
        render_depth(world, sensor_pose, cfg.sensor);
    report.render_ms.push_back(ms_since(t));
    report.total_points += cloud.size();

    t = Clock::now();
    buffer.move_volume(pose);
    report.move_ms.push_back(ms_since(t));

    if (cfg.include_baseline) {
      t = Clock::now();
      baseline.move_volume(pose);
      report.baseline_move_ms.push_back(ms_since(t));
    }

    world_points.resize(cloud.size());
    for (size_t i = 0; i < cloud.size(); ++i)
      world_points[i] = sensor_pose.rotation * cloud[i] + pose;
    t = Clock::now();
    buffer.insert_point_cloud(pose, world_points);
    report.insert_ms.push_back(ms_since(t));

    t = Clock::now();
    field.update(buffer);
    report.edt_ms.push_back(ms_since(t));
  }

  if (cfg.include_baseline) {
    const double ring = mean(report.move_ms);
    const double dense = mean(report.baseline_move_ms);
    report.move_speedup = ring > 0.0 ? dense / ring : 0.0;
  }
  return report;
}

}  // namespace replan::sim
