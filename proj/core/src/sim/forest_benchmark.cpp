#include "replan/sim/forest_benchmark.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "replan/global_trajectory.hpp"

namespace replan::sim {

namespace {

struct Pair {
  Eigen::Vector3d start;
  Eigen::Vector3d goal;
};

std::vector<Pair> sample_pairs(const World& world, const BenchmarkConfig& cfg,
                               std::mt19937_64& rng) {
  const Eigen::Vector3d lo =
      world.box.min + Eigen::Vector3d::Constant(cfg.edge_margin);
  const Eigen::Vector3d hi =
      world.box.max - Eigen::Vector3d::Constant(cfg.edge_margin);
  std::uniform_real_distribution<double> ux(lo.x(), hi.x());
  std::uniform_real_distribution<double> uy(lo.y(), hi.y());
  std::uniform_real_distribution<double> uz(lo.z(), hi.z());
  auto draw = [&] { return Eigen::Vector3d(ux(rng), uy(rng), uz(rng)); };

  std::vector<Pair> pairs;
  int attempts = 0;
  while (static_cast<int>(pairs.size()) < cfg.pairs_per_forest) {
    if (++attempts > 100000)
      throw std::runtime_error("sample_pairs: could not place start/goal");
    const Eigen::Vector3d a = draw();
    const Eigen::Vector3d b = draw();
    if ((a - b).norm() < cfg.min_pair_distance) continue;
    if (world.distance(a) < cfg.clearance || world.distance(b) < cfg.clearance)
      continue;
    pairs.push_back({a, b});
  }
  return pairs;
}

}  // namespace

BenchmarkReport run_benchmark(const BenchmarkConfig& cfg) {
  if (cfg.forests < 1 || cfg.pairs_per_forest < 1 || cfg.c_sweep.empty())
    throw std::invalid_argument("run_benchmark: empty suite");
  const int c_max = *std::max_element(cfg.c_sweep.begin(), cfg.c_sweep.end());
  const double dt = cfg.episode.replanner.dt;

  BenchmarkReport report;
  for (int f = 0; f < cfg.forests; ++f) {
    ForestParams forest = cfg.forest;
    forest.density =
        cfg.forests == 1
            ? cfg.density_min
            : cfg.density_min + (cfg.density_max - cfg.density_min) * f /
                                    (cfg.forests - 1);
    const World world = generate_forest(cfg.seed + f, forest);
    std::mt19937_64 rng(cfg.seed * 0x9e3779b97f4a7c15ull + f);
    const std::vector<Pair> pairs = sample_pairs(world, cfg, rng);

    for (int p = 0; p < static_cast<int>(pairs.size()); ++p) {
      const double distance = (pairs[p].goal - pairs[p].start).norm();
      // Slow the reference down on short pairs so the horizon always fits.
      const double min_duration = (UniformBSpline::kOrder + c_max + 1) * dt;
      const double speed =
          std::min(cfg.reference_speed, distance / min_duration);
      const StraightLineTrajectory global(pairs[p].start, pairs[p].goal,
                                          speed);

      for (int c : cfg.c_sweep) {
        EpisodeConfig episode = cfg.episode;
        episode.replanner.free_points = c;
        episode.timeout =
            std::max(episode.timeout, 4.0 * global.duration() + 10.0);
        const EpisodeMetrics metrics = run_episode(world, global, episode);

        TrialResult trial;
        trial.forest = f;
        trial.pair = p;
        trial.c = c;
        trial.density = forest.density;
        trial.success = metrics.success;
        trial.normalized_path_length = metrics.normalized_path_length;
        trial.mean_optimize_ms = mean(metrics.timings.optimize_ms);
        trial.ticks = metrics.ticks;
        report.trials.push_back(trial);
      }
    }
  }

  // Per-C aggregates.
  for (int c : cfg.c_sweep) {
    SweepEntry entry;
    entry.c = c;
    double npl_sum = 0.0, opt_ms_ticks = 0.0;
    long ticks = 0;
    for (const TrialResult& t : report.trials) {
      if (t.c != c) continue;
      ++entry.episodes;
      opt_ms_ticks += t.mean_optimize_ms * t.ticks;
      ticks += t.ticks;
      if (t.success) {
        ++entry.successes;
        npl_sum += t.normalized_path_length;
      }
    }
    entry.success_fraction =
        entry.episodes ? static_cast<double>(entry.successes) / entry.episodes
                       : 0.0;
    entry.mean_norm_path_length =
        entry.successes ? npl_sum / entry.successes : 0.0;
    entry.mean_optimize_ms = ticks ? opt_ms_ticks / ticks : 0.0;
    report.sweep.push_back(entry);
  }

  // Like-for-like subset: pairs that succeeded at every C.
  std::map<std::pair<int, int>, int> success_count;
  for (const TrialResult& t : report.trials)
    if (t.success) ++success_count[{t.forest, t.pair}];
  const int need = static_cast<int>(cfg.c_sweep.size());
  report.paired_norm_path_length.assign(cfg.c_sweep.size(), 0.0);
  for (const TrialResult& t : report.trials) {
    const auto it = success_count.find({t.forest, t.pair});
    if (it == success_count.end() || it->second != need) continue;
    const auto pos = std::find(cfg.c_sweep.begin(), cfg.c_sweep.end(), t.c);
    report.paired_norm_path_length[pos - cfg.c_sweep.begin()] +=
        t.normalized_path_length;
  }
  for (const auto& [key, count] : success_count)
    if (count == need) ++report.paired_count;
  if (report.paired_count > 0)
    for (double& v : report.paired_norm_path_length) v /= report.paired_count;
  return report;
}

}  // namespace replan::sim
