#include <CLI11.hpp>

#include <Eigen/Dense>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "replan/config.hpp"
#include "replan/distance_field.hpp"
#include "replan/global_trajectory.hpp"
#include "replan/grid_io.hpp"
#include "replan/occupancy_buffer.hpp"
#include "replan/sim/episode.hpp"
#include "replan/sim/forest_benchmark.hpp"
#include "replan/sim/mapping_benchmark.hpp"
#include "replan/sim/world.hpp"
#include "replan/trajectory_io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using Eigen::Vector3d;

namespace {

Vector3d to_vec3(const std::vector<double>& v) {
  return Vector3d(v[0], v[1], v[2]);
}

json timing_stats(const std::vector<double>& samples) {
  json j;
  j["count"] = samples.size();
  j["mean_ms"] = replan::sim::mean(samples);
  j["median_ms"] = replan::sim::median(samples);
  if (!samples.empty()) {
    j["min_ms"] = *std::min_element(samples.begin(), samples.end());
    j["max_ms"] = *std::max_element(samples.begin(), samples.end());
  }
  return j;
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

// Loads a subcommand config struct from an optional JSON file; keys that are
// absent keep their defaults.
template <typename Config>
Config load_config(const std::string& path) {
  Config config;
  if (!path.empty()) replan::load_json(path).get_to(config);
  return config;
}

constexpr int kFullPrecision = std::numeric_limits<double>::max_digits10;

struct EpisodeArgs {
  std::string config_path;
  std::string world_path;
  std::string out_dir = "episode_out";
  std::uint64_t seed = 1;
  double density = 0.1;
  std::vector<double> start = {0.5, 5.0, 1.5};
  std::vector<double> goal = {9.5, 5.0, 1.5};
  double speed = 0.5;
  bool oracle_map = false;
};

int run_episode_cmd(const EpisodeArgs& args, bool timeout_set,
                    double timeout) {
  auto config = load_config<replan::sim::EpisodeConfig>(args.config_path);
  if (args.oracle_map) config.oracle_map = true;
  if (timeout_set) config.timeout = timeout;

  replan::sim::World world;
  if (!args.world_path.empty()) {
    replan::load_json(args.world_path).get_to(world);
  } else {
    replan::sim::ForestParams forest;
    forest.density = args.density;
    world = replan::sim::generate_forest(args.seed, forest);
  }

  const Vector3d start = to_vec3(args.start);
  const Vector3d goal = to_vec3(args.goal);
  replan::StraightLineTrajectory line(start, goal, args.speed);
  const replan::sim::EpisodeMetrics m =
      replan::sim::run_episode(world, line, config);

  fs::create_directories(args.out_dir);
  const fs::path out(args.out_dir);

  json mj;
  mj["success"] = m.success;
  mj["reached_goal"] = m.reached_goal;
  mj["collided"] = m.collided;
  mj["timed_out"] = m.timed_out;
  mj["failure"] = m.failure;
  mj["straight_line_distance"] = m.straight_line_distance;
  mj["executed_length"] = m.executed_length;
  mj["normalized_path_length"] = m.normalized_path_length;
  mj["ticks"] = m.ticks;
  mj["sim_duration"] = m.sim_duration;
  mj["timings"]["render"] = timing_stats(m.timings.render_ms);
  mj["timings"]["move"] = timing_stats(m.timings.move_ms);
  mj["timings"]["insert"] = timing_stats(m.timings.insert_ms);
  mj["timings"]["edt"] = timing_stats(m.timings.edt_ms);
  mj["timings"]["optimize"] = timing_stats(m.timings.optimize_ms);
  mj["config"] = config;
  mj["scene"]["seed"] = args.seed;
  mj["scene"]["start"] = start;
  mj["scene"]["goal"] = goal;
  mj["scene"]["speed"] = args.speed;
  replan::save_json(out / "metrics.json", mj);
  replan::save_json(out / "world.json", json(world));

  {
    auto csv = open_out(out / "ticks.csv");
    csv << "tick,knot_time,x,y,z,cost,optimize_ms\n";
    csv.precision(kFullPrecision);
    for (size_t i = 0; i < m.commands.size(); ++i) {
      const replan::Replanner::Command& c = m.commands[i];
      csv << c.tick << ',' << c.knot_time << ',' << c.point.x() << ','
          << c.point.y() << ',' << c.point.z() << ',' << m.tick_cost[i] << ','
          << m.timings.optimize_ms[i] << '\n';
    }
  }
  {
    auto csv = open_out(out / "executed.csv");
    csv << "x,y,z\n";
    csv.precision(kFullPrecision);
    for (const Vector3d& p : m.executed_path)
      csv << p.x() << ',' << p.y() << ',' << p.z() << '\n';
  }
  if (m.committed)
    replan::save_trajectory((out / "trajectory.csv").string(), *m.committed);

  std::cout << (m.success ? "success" : "failure: " + m.failure)
            << "  ticks=" << m.ticks
            << "  norm_path_length=" << m.normalized_path_length
            << "  mean_optimize_ms="
            << replan::sim::mean(m.timings.optimize_ms) << '\n'
            << "outputs in " << out.string() << '\n';
  return m.success ? 0 : 2;
}

struct BenchmarkArgs {
  std::string config_path;
  std::string out_dir = "benchmark_out";
};

int run_benchmark_cmd(const BenchmarkArgs& args, CLI::App* cmd,
                      std::uint64_t seed, std::vector<int> c_sweep,
                      double density_min, double density_max, int forests,
                      int pairs, bool oracle_map) {
  auto config = load_config<replan::sim::BenchmarkConfig>(args.config_path);
  if (cmd->count("--seed")) config.seed = seed;
  if (cmd->count("--c-sweep")) config.c_sweep = c_sweep;
  if (cmd->count("--density-min")) config.density_min = density_min;
  if (cmd->count("--density-max")) config.density_max = density_max;
  if (cmd->count("--forests")) config.forests = forests;
  if (cmd->count("--pairs")) config.pairs_per_forest = pairs;
  if (oracle_map) config.episode.oracle_map = true;

  const replan::sim::BenchmarkReport report =
      replan::sim::run_benchmark(config);

  fs::create_directories(args.out_dir);
  const fs::path out(args.out_dir);

  json bj;
  bj["config"] = config;
  bj["paired_count"] = report.paired_count;
  bj["paired_norm_path_length"] = report.paired_norm_path_length;
  bj["sweep"] = json::array();
  for (const auto& e : report.sweep) {
    json ej;
    ej["c"] = e.c;
    ej["episodes"] = e.episodes;
    ej["successes"] = e.successes;
    ej["success_fraction"] = e.success_fraction;
    ej["mean_norm_path_length"] = e.mean_norm_path_length;
    ej["mean_optimize_ms"] = e.mean_optimize_ms;
    bj["sweep"].push_back(ej);
  }
  replan::save_json(out / "benchmark.json", bj);

  {
    auto csv = open_out(out / "sweep.csv");
    csv << "c,episodes,successes,success_fraction,mean_norm_path_length,"
           "mean_optimize_ms,paired_norm_path_length\n";
    for (size_t i = 0; i < report.sweep.size(); ++i) {
      const auto& e = report.sweep[i];
      csv << e.c << ',' << e.episodes << ',' << e.successes << ','
          << e.success_fraction << ',' << e.mean_norm_path_length << ','
          << e.mean_optimize_ms << ','
          << report.paired_norm_path_length[i] << '\n';
    }
  }
  {
    auto csv = open_out(out / "trials.csv");
    csv << "forest,pair,c,density,success,normalized_path_length,"
           "mean_optimize_ms,ticks\n";
    for (const auto& t : report.trials)
      csv << t.forest << ',' << t.pair << ',' << t.c << ',' << t.density
          << ',' << (t.success ? 1 : 0) << ',' << t.normalized_path_length
          << ',' << t.mean_optimize_ms << ',' << t.ticks << '\n';
  }

  for (const auto& e : report.sweep)
    std::cout << "C=" << e.c << "  success=" << e.success_fraction
              << "  norm_path_length=" << e.mean_norm_path_length
              << "  optimize_ms=" << e.mean_optimize_ms << '\n';
  std::cout << "paired episodes: " << report.paired_count << "\noutputs in "
            << out.string() << '\n';
  return 0;
}

struct MapBenchArgs {
  std::string config_path;
  std::string out_dir = "map_bench_out";
  std::uint64_t world_seed = 3;
  double density = 0.1;
};

int run_map_bench_cmd(const MapBenchArgs& args, CLI::App* cmd,
                      std::uint64_t seed, int frames, bool no_baseline) {
  auto config = load_config<replan::sim::MappingBenchConfig>(args.config_path);
  if (cmd->count("--seed")) config.seed = seed;
  if (cmd->count("--frames")) config.frames = frames;
  if (no_baseline) config.include_baseline = false;

  replan::sim::ForestParams forest;
  forest.density = args.density;
  const replan::sim::World world =
      replan::sim::generate_forest(args.world_seed, forest);

  const replan::sim::MappingBenchReport report =
      replan::sim::bench_mapping(world, config);

  fs::create_directories(args.out_dir);
  const fs::path out(args.out_dir);

  json bj;
  bj["config"] = config;
  bj["world_seed"] = args.world_seed;
  bj["density"] = args.density;
  bj["total_points"] = report.total_points;
  bj["move_speedup"] = report.move_speedup;
  bj["render"] = timing_stats(report.render_ms);
  bj["move"] = timing_stats(report.move_ms);
  bj["insert"] = timing_stats(report.insert_ms);
  bj["edt"] = timing_stats(report.edt_ms);
  bj["baseline_move"] = timing_stats(report.baseline_move_ms);
  replan::save_json(out / "map_bench.json", bj);

  {
    auto csv = open_out(out / "frames.csv");
    const bool baseline = !report.baseline_move_ms.empty();
    csv << "frame,render_ms,move_ms,insert_ms,edt_ms";
    if (baseline) csv << ",baseline_move_ms";
    csv << '\n';
    for (size_t i = 0; i < report.insert_ms.size(); ++i) {
      csv << i << ',' << report.render_ms[i] << ',' << report.move_ms[i]
          << ',' << report.insert_ms[i] << ',' << report.edt_ms[i];
      if (baseline) csv << ',' << report.baseline_move_ms[i];
      csv << '\n';
    }
  }

  std::cout << "frames=" << report.insert_ms.size()
            << "  mean_insert_ms=" << replan::sim::mean(report.insert_ms)
            << "  mean_edt_ms=" << replan::sim::mean(report.edt_ms)
            << "  move_speedup=" << report.move_speedup << '\n'
            << "outputs in " << out.string() << '\n';
  return 0;
}

struct ExportArgs {
  std::string config_path;
  std::string world_path;
  std::string out_dir = "export_out";
  std::uint64_t seed = 3;
  double density = 0.1;
  int exponent = 6;
  double resolution = 0.2;
  double max_distance = 1.0;
  int frames = 5;
};

int run_export_cmd(const ExportArgs& args) {
  replan::sim::World world;
  if (!args.world_path.empty()) {
    replan::load_json(args.world_path).get_to(world);
  } else {
    replan::sim::ForestParams forest;
    forest.density = args.density;
    world = replan::sim::generate_forest(args.seed, forest);
  }

  fs::create_directories(args.out_dir);
  const fs::path out(args.out_dir);
  replan::save_json(out / "world.json", json(world));

  const Vector3d center = (world.box.min + world.box.max) / 2.0;
  replan::OccupancyBuffer buffer(args.exponent, args.resolution, center);
  replan::sim::rasterize_world(world, buffer);
  replan::DistanceField field;
  field.update(buffer);

  replan::save_occupancy_csv(out / "occupancy.csv", buffer);
  replan::save_occupancy_json(out / "occupancy.json", buffer);
  save_distance_csv(out / "distance.csv", field, args.max_distance);

  // A straight level pass through the box, one rendered frame per step.
  replan::sim::SensorModel sensor;
  std::vector<replan::DepthFrame> frames;
  const double span = (world.box.max.x() - world.box.min.x()) * 0.8;
  const Vector3d first = center - Vector3d(span / 2.0, 0.0, 0.0);
  for (int i = 0; i < args.frames; ++i) {
    const double step =
        args.frames > 1 ? span * i / (args.frames - 1) : 0.0;
    const replan::sim::Pose pose = replan::sim::Pose::level_facing(
        first + Vector3d(step, 0.0, 0.0), 0.0);
    replan::DepthFrame frame;
    frame.position = pose.position;
    frame.rotation = pose.rotation;
    frame.points = replan::sim::render_depth(world, pose, sensor);
    frames.push_back(std::move(frame));
  }
  replan::save_frames_jsonl(out / "frames.jsonl", frames);

  std::cout << "world: " << world.cylinders.size() << " cylinders, "
            << world.spheres.size() << " spheres\n"
            << "grid: " << buffer.side() << "^3 at " << args.resolution
            << " m\noutputs in " << out.string() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Receding-horizon trajectory replanning harness: simulated episodes, "
      "benchmark sweeps, mapping timings, and grid exports."};
  app.require_subcommand(1);

  EpisodeArgs ep;
  double ep_timeout = 60.0;
  CLI::App* episode =
      app.add_subcommand("episode", "Run one sense-map-replan episode");
  episode->add_option("--config", ep.config_path,
                      "EpisodeConfig JSON (partial keys allowed)");
  episode->add_option("--world", ep.world_path,
                      "World JSON (skips forest generation)");
  episode->add_option("--out", ep.out_dir, "Output directory");
  episode->add_option("--seed", ep.seed, "Forest seed");
  episode->add_option("--density", ep.density, "Forest density (trees/m^2)");
  episode->add_option("--start", ep.start, "Start position x y z")
      ->expected(3);
  episode->add_option("--goal", ep.goal, "Goal position x y z")->expected(3);
  episode->add_option("--speed", ep.speed, "Reference speed (m/s)");
  episode->add_option("--timeout", ep_timeout, "Simulated-time budget (s)");
  episode->add_flag("--oracle-map", ep.oracle_map,
                    "Known-map mode: rasterize ground truth, skip sensing");

  BenchmarkArgs bm;
  std::uint64_t bm_seed = 1;
  std::vector<int> bm_c_sweep;
  double bm_density_min = 0.02, bm_density_max = 0.18;
  int bm_forests = 9, bm_pairs = 10;
  bool bm_oracle = false;
  CLI::App* benchmark = app.add_subcommand(
      "benchmark", "Forest sweep: success/path-length/time per horizon C");
  benchmark->add_option("--config", bm.config_path,
                        "BenchmarkConfig JSON (partial keys allowed)");
  benchmark->add_option("--out", bm.out_dir, "Output directory");
  benchmark->add_option("--seed", bm_seed, "Suite seed");
  benchmark->add_option("--c-sweep", bm_c_sweep,
                        "Free-point horizons to sweep, e.g. --c-sweep 2 5 9");
  benchmark->add_option("--density-min", bm_density_min,
                        "First forest density (trees/m^2)");
  benchmark->add_option("--density-max", bm_density_max,
                        "Last forest density (trees/m^2)");
  benchmark->add_option("--forests", bm_forests, "Forest count");
  benchmark->add_option("--pairs", bm_pairs, "Start/goal pairs per forest");
  benchmark->add_flag("--oracle-map", bm_oracle,
                      "Known-map episodes (no sensing)");

  MapBenchArgs mb;
  std::uint64_t mb_seed = 7;
  int mb_frames = 100;
  bool mb_no_baseline = false;
  CLI::App* map_bench = app.add_subcommand(
      "map-bench", "Per-frame mapping timings along a straight pass");
  map_bench->add_option("--config", mb.config_path,
                        "MappingBenchConfig JSON (partial keys allowed)");
  map_bench->add_option("--out", mb.out_dir, "Output directory");
  map_bench->add_option("--seed", mb_seed, "Sensor-path seed");
  map_bench->add_option("--world-seed", mb.world_seed, "Forest seed");
  map_bench->add_option("--density", mb.density, "Forest density (trees/m^2)");
  map_bench->add_option("--frames", mb_frames, "Frame count");
  map_bench->add_flag("--no-baseline", mb_no_baseline,
                      "Skip the dense-grid move baseline");

  ExportArgs ex;
  CLI::App* exp = app.add_subcommand(
      "export", "Dump a world plus its rasterized occupancy/distance grids");
  exp->add_option("--world", ex.world_path,
                  "World JSON (skips forest generation)");
  exp->add_option("--out", ex.out_dir, "Output directory");
  exp->add_option("--seed", ex.seed, "Forest seed");
  exp->add_option("--density", ex.density, "Forest density (trees/m^2)");
  exp->add_option("--exponent", ex.exponent, "Grid side = 2^exponent voxels");
  exp->add_option("--resolution", ex.resolution, "Voxel size (m)");
  exp->add_option("--max-distance", ex.max_distance,
                  "Keep distance-CSV cells within this distance (m)");
  exp->add_option("--frames", ex.frames, "Rendered depth frames to export");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(episode))
      return run_episode_cmd(ep, episode->count("--timeout") > 0, ep_timeout);
    if (app.got_subcommand(benchmark))
      return run_benchmark_cmd(bm, benchmark, bm_seed, bm_c_sweep,
                               bm_density_min, bm_density_max, bm_forests,
                               bm_pairs, bm_oracle);
    if (app.got_subcommand(map_bench))
      return run_map_bench_cmd(mb, map_bench, mb_seed, mb_frames,
                               mb_no_baseline);
    if (app.got_subcommand(exp)) return run_export_cmd(ex);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
