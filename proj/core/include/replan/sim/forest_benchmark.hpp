#pragma once

#include <cstdint>
#include <vector>

#include "replan/sim/episode.hpp"
#include "replan/sim/world.hpp"

namespace replan::sim {

struct BenchmarkConfig {
  int forests = 9;
  int pairs_per_forest = 10;
  std::vector<int> c_sweep = {2, 3, 4, 5, 6, 7, 8, 9};
  double density_min = 0.02;  // trees per m^2, first forest
  double density_max = 0.18;  // last forest
  double min_pair_distance = 4.0;
  double edge_margin = 1.0;      // start/goal distance from box faces
  double clearance = 0.7;        // start/goal distance from obstacles
  double reference_speed = 1.0;  // m/s cap for the straight-line reference
  std::uint64_t seed = 1;
  ForestParams forest;
  EpisodeConfig episode;  // c_sweep overrides episode.replanner.free_points
};

struct TrialResult {
  int forest = 0;
  int pair = 0;
  int c = 0;
  double density = 0.0;
  bool success = false;
  double normalized_path_length = 0.0;
  double mean_optimize_ms = 0.0;
  int ticks = 0;
};

struct SweepEntry {
  int c = 0;
  int episodes = 0;
  int successes = 0;
  double success_fraction = 0.0;
  double mean_norm_path_length = 0.0;  // over this C's successes
  double mean_optimize_ms = 0.0;       // over every tick of every episode
};

struct BenchmarkReport {
  std::vector<TrialResult> trials;
  std::vector<SweepEntry> sweep;  // one per C, in sweep order
  /// Mean normalized path length per C over the episodes that succeeded at
  /// every C in the sweep — the like-for-like subset for trend checks.
  std::vector<double> paired_norm_path_length;
  int paired_count = 0;
};

/// Forests of increasing density, a fixed set of start/goal pairs per
/// forest (>= min_pair_distance apart, clear of obstacles), each flown once
/// per C in the sweep. Deterministic per seed except wall-clock timings.
BenchmarkReport run_benchmark(const BenchmarkConfig& config);

}  // namespace replan::sim
