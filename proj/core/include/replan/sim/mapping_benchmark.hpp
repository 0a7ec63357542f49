#pragma once

#include <cstdint>
#include <vector>

#include "replan/sim/depth_sensor.hpp"
#include "replan/sim/world.hpp"

namespace replan::sim {

struct MappingBenchConfig {
  int frames = 100;
  SensorModel sensor;
  int buffer_exponent = 6;
  double resolution = 0.1;
  bool include_baseline = true;  // naive dense-grid volume-move comparison
  double path_length = 6.0;      // sensor travels this far through the world
  std::uint64_t seed = 7;
};

struct MappingBenchReport {
  std::vector<double> render_ms;
  std::vector<double> move_ms;
  std::vector<double> insert_ms;
  std::vector<double> edt_ms;
  std::vector<double> baseline_move_ms;
  size_t total_points = 0;
  /// Mean naive-dense move time over mean ring-buffer move time
  /// (0 when the baseline is disabled).
  double move_speedup = 0.0;
};

/// Drives a depth sensor along a straight path through the world and times
/// every mapping stage per frame: render, volume move, insertion, EDT, plus
/// the optional dense-grid baseline move.
MappingBenchReport bench_mapping(const World& world,
                                 const MappingBenchConfig& config);

}  // namespace replan::sim
