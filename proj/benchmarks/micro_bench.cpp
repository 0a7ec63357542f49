#include <benchmark/benchmark.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <vector>

#include "replan/bspline.hpp"
#include "replan/costs.hpp"
#include "replan/distance_field.hpp"
#include "replan/global_trajectory.hpp"
#include "replan/occupancy_buffer.hpp"
#include "replan/optimizer.hpp"
#include "replan/replanner.hpp"
#include "replan/ring_buffer.hpp"
#include "replan/sim/dense_grid_baseline.hpp"
#include "replan/sim/depth_sensor.hpp"
#include "replan/sim/episode.hpp"
#include "replan/sim/world.hpp"

namespace {

using Eigen::Vector3d;
using Eigen::Vector3i;

replan::sim::World forest_world() {
  replan::sim::ForestParams params;
  params.box = {{0.0, 0.0, 0.0}, {10.0, 10.0, 10.0}};
  params.density = 0.1;
  params.radius_min = 0.15;
  params.radius_max = 0.35;
  return replan::sim::generate_forest(3, params);
}

replan::sim::Pose forest_pose() {
  return replan::sim::Pose::level_facing(Vector3d(1.0, 5.0, 1.5), 0.0);
}

std::vector<Vector3d> forest_cloud_world(const replan::sim::Pose& pose) {
  const replan::sim::World world = forest_world();
  replan::sim::SensorModel sensor;
  std::vector<Vector3d> cloud = replan::sim::render_depth(world, pose, sensor);
  for (Vector3d& p : cloud) p = pose.rotation * p + pose.position;
  return cloud;
}

std::vector<double> random_unit(int count, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> out(static_cast<size_t>(count));
  for (double& u : out) u = unit(rng);
  return out;
}

void BM_BasisWeights(benchmark::State& state) {
  const int derivative = static_cast<int>(state.range(0));
  const std::vector<double> us = random_unit(1024, 11);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        replan::UniformBSpline::basis_weights(us[i], derivative));
    i = (i + 1) & 1023;
  }
}
BENCHMARK(BM_BasisWeights)->Arg(0)->Arg(2)->Unit(benchmark::kNanosecond);

void BM_SplineEvaluate(benchmark::State& state) {
  const int derivative = static_cast<int>(state.range(0));
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> coord(-5.0, 5.0);
  std::vector<Vector3d> points;
  for (int i = 0; i < 50; ++i)
    points.emplace_back(coord(rng), coord(rng), coord(rng));
  const replan::UniformBSpline spline(points, 0.5);
  const std::vector<double> us = random_unit(1024, 13);
  const double span = spline.t_max() - spline.t_min() - 1e-9;
  size_t i = 0;
  for (auto _ : state) {
    const double t = spline.t_min() + us[i] * span;
    benchmark::DoNotOptimize(spline.evaluate(t, derivative));
    i = (i + 1) & 1023;
  }
}
BENCHMARK(BM_SplineEvaluate)->Arg(0)->Arg(2)->Unit(benchmark::kNanosecond);

// Translating window cost: ring buffer clears only the entering slabs, the
// dense baseline copies every surviving cell. Arg = move step in voxels.
void BM_RingBufferMove(benchmark::State& state) {
  const double step =
      static_cast<double>(state.range(0)) * 0.1;
  replan::RingBuffer3D<float> grid(6, 0.1, 0.0f, Vector3d::Zero());
  double x = 0.0;
  double direction = 1.0;
  for (auto _ : state) {
    x += direction * step;
    if (std::abs(x) > 20.0) direction = -direction;
    grid.move_volume(Vector3d(x, 0.0, 0.0));
  }
}
BENCHMARK(BM_RingBufferMove)->Arg(1)->Arg(8)->Unit(benchmark::kMicrosecond);

void BM_DenseBaselineMove(benchmark::State& state) {
  const double step =
      static_cast<double>(state.range(0)) * 0.1;
  replan::sim::DenseGridBaseline grid(64, 0.1, 0.0f, Vector3d::Zero());
  double x = 0.0;
  double direction = 1.0;
  for (auto _ : state) {
    x += direction * step;
    if (std::abs(x) > 20.0) direction = -direction;
    grid.move_volume(Vector3d(x, 0.0, 0.0));
  }
}
BENCHMARK(BM_DenseBaselineMove)->Arg(1)->Arg(8)->Unit(benchmark::kMicrosecond);

void BM_RenderDepth(benchmark::State& state) {
  const replan::sim::World world = forest_world();
  const replan::sim::Pose pose = forest_pose();
  replan::sim::SensorModel sensor;
  for (auto _ : state)
    benchmark::DoNotOptimize(replan::sim::render_depth(world, pose, sensor));
}
BENCHMARK(BM_RenderDepth)->Unit(benchmark::kMillisecond);

void BM_InsertCloud(benchmark::State& state) {
  const replan::sim::Pose pose = forest_pose();
  const std::vector<Vector3d> cloud = forest_cloud_world(pose);
  replan::OccupancyBuffer buffer(6, 0.1, pose.position);
  for (auto _ : state) buffer.insert_point_cloud(pose.position, cloud);
  state.counters["points"] = static_cast<double>(cloud.size());
}
BENCHMARK(BM_InsertCloud)->Unit(benchmark::kMillisecond);

void BM_DistanceFieldUpdate(benchmark::State& state) {
  const int exponent = static_cast<int>(state.range(0));
  const replan::sim::Pose pose = forest_pose();
  const std::vector<Vector3d> cloud = forest_cloud_world(pose);
  // Same scene at both sizes: halve the resolution when halving the side.
  const double resolution = exponent == 6 ? 0.1 : 0.2;
  replan::OccupancyBuffer buffer(exponent, resolution, pose.position);
  buffer.insert_point_cloud(pose.position, cloud);
  replan::DistanceField field;
  for (auto _ : state) field.update(buffer);
}
BENCHMARK(BM_DistanceFieldUpdate)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_TrilinearSample(benchmark::State& state) {
  const replan::sim::Pose pose = forest_pose();
  const std::vector<Vector3d> cloud = forest_cloud_world(pose);
  replan::OccupancyBuffer buffer(6, 0.1, pose.position);
  buffer.insert_point_cloud(pose.position, cloud);
  replan::DistanceField field;
  field.update(buffer);
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> around(-2.5, 2.5);
  std::vector<Vector3d> probes(1024);
  for (Vector3d& p : probes)
    p = pose.position + Vector3d(around(rng), around(rng), around(rng));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(field.sample(probes[i]));
    i = (i + 1) & 1023;
  }
}
BENCHMARK(BM_TrilinearSample)->Unit(benchmark::kNanosecond);

// Full cold-start local optimization against an active collision field:
// restore the saved control points, then solve.
void BM_OptimizeColdStart(benchmark::State& state) {
  const replan::sim::World world = forest_world();
  replan::OccupancyBuffer buffer(6, 0.2, Vector3d(5.0, 5.0, 5.0));
  replan::sim::rasterize_world(world, buffer);
  replan::DistanceField field;
  field.update(buffer);

  std::vector<Vector3d> points;
  for (int i = 0; i < 13; ++i)
    points.emplace_back(0.5 + 0.7 * i, 5.0, 1.2);
  replan::UniformBSpline spline(points, 0.5);
  const std::vector<Vector3d> saved = spline.control_points();

  replan::OptimizationProblem problem;
  problem.spline = &spline;
  problem.field = &field;
  problem.first_free = 6;
  problem.target.t_ep = spline.t_max();
  problem.target.p_ep = points.back();
  std::tie(problem.t_min, problem.t_max) =
      replan::integration_window_for_free(spline, problem.first_free);

  for (auto _ : state) {
    for (int i = 0; i < spline.size(); ++i)
      spline.set_control_point(i, saved[static_cast<size_t>(i)]);
    benchmark::DoNotOptimize(replan::optimize(problem));
  }
}
BENCHMARK(BM_OptimizeColdStart)->Unit(benchmark::kMillisecond);

// Steady-state replanning tick: static full-coverage map of the forest, the
// reference line ends inside the box so late ticks optimize a hover near the
// goal.
void BM_ReplanTick(benchmark::State& state) {
  const replan::sim::World world = forest_world();
  replan::OccupancyBuffer buffer(6, 0.2, Vector3d(5.0, 5.0, 5.0));
  replan::sim::rasterize_world(world, buffer);
  replan::DistanceField field;
  field.update(buffer);

  replan::StraightLineTrajectory line(Vector3d(0.5, 5.0, 1.2),
                                      Vector3d(9.5, 5.0, 1.2), 1.0);
  replan::ReplannerConfig config;
  replan::Replanner replanner(line, config);
  for (auto _ : state) replanner.tick(field);
}
BENCHMARK(BM_ReplanTick)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
