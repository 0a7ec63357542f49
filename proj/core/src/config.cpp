#include "replan/config.hpp"

#include <fstream>
#include <stdexcept>

namespace replan {

using nlohmann::json;

void to_json(json& j, const CostWeights& w) {
  j = json{{"lambda_p", w.lambda_p},
           {"lambda_v", w.lambda_v},
           {"lambda_c", w.lambda_c},
           {"lambda_q", w.lambda_q},
           {"lambda_l", w.lambda_l}};
}

void from_json(const json& j, CostWeights& w) {
  w.lambda_p = j.value("lambda_p", w.lambda_p);
  w.lambda_v = j.value("lambda_v", w.lambda_v);
  w.lambda_c = j.value("lambda_c", w.lambda_c);
  w.lambda_q = j.value("lambda_q", w.lambda_q);
  w.lambda_l = j.value("lambda_l", w.lambda_l);
}

void to_json(json& j, const DerivativeLimits& l) {
  j = json{{"max_magnitude", l.max_magnitude}, {"enabled", l.enabled}};
}

void from_json(const json& j, DerivativeLimits& l) {
  l.max_magnitude = j.value("max_magnitude", l.max_magnitude);
  l.enabled = j.value("enabled", l.enabled);
}

void to_json(json& j, const OptimizeOptions& o) {
  j = json{{"max_iterations", o.max_iterations},
           {"gradient_tolerance", o.gradient_tolerance},
           {"relative_decrease_tolerance", o.relative_decrease_tolerance}};
}

void from_json(const json& j, OptimizeOptions& o) {
  o.max_iterations = j.value("max_iterations", o.max_iterations);
  o.gradient_tolerance = j.value("gradient_tolerance", o.gradient_tolerance);
  o.relative_decrease_tolerance =
      j.value("relative_decrease_tolerance", o.relative_decrease_tolerance);
}

void to_json(json& j, const ReplannerConfig& c) {
  j = json{{"dt", c.dt},
           {"free_points", c.free_points},
           {"weights", c.weights},
           {"limits", c.limits},
           {"limit_margin", c.limit_margin},
           {"tau", c.tau},
           {"samples_per_segment", c.samples_per_segment},
           {"optimize", c.optimize},
           {"start", c.start == ReplannerConfig::StartPolicy::kFromRest
                         ? "from_rest"
                         : "in_flight"},
           {"start_time", c.start_time}};
}

void from_json(const json& j, ReplannerConfig& c) {
  c.dt = j.value("dt", c.dt);
  c.free_points = j.value("free_points", c.free_points);
  if (j.contains("weights")) j.at("weights").get_to(c.weights);
  if (j.contains("limits")) j.at("limits").get_to(c.limits);
  c.limit_margin = j.value("limit_margin", c.limit_margin);
  c.tau = j.value("tau", c.tau);
  c.samples_per_segment = j.value("samples_per_segment", c.samples_per_segment);
  if (j.contains("optimize")) j.at("optimize").get_to(c.optimize);
  if (j.contains("start")) {
    const std::string start = j.at("start").get<std::string>();
    if (start == "from_rest")
      c.start = ReplannerConfig::StartPolicy::kFromRest;
    else if (start == "in_flight")
      c.start = ReplannerConfig::StartPolicy::kInFlight;
    else
      throw std::invalid_argument("config: unknown start policy: " + start);
  }
  c.start_time = j.value("start_time", c.start_time);
}

void to_json(json& j, const OccupancyParams& p) {
  j = json{{"p_hit", p.p_hit},
           {"p_miss", p.p_miss},
           {"clamp_min_prob", p.clamp_min_prob},
           {"clamp_max_prob", p.clamp_max_prob},
           {"prior_log_odds", p.prior_log_odds},
           {"occupied_threshold", p.occupied_threshold}};
}

void from_json(const json& j, OccupancyParams& p) {
  p.p_hit = j.value("p_hit", p.p_hit);
  p.p_miss = j.value("p_miss", p.p_miss);
  p.clamp_min_prob = j.value("clamp_min_prob", p.clamp_min_prob);
  p.clamp_max_prob = j.value("clamp_max_prob", p.clamp_max_prob);
  p.prior_log_odds = j.value("prior_log_odds", p.prior_log_odds);
  p.occupied_threshold = j.value("occupied_threshold", p.occupied_threshold);
}

void to_json(json& j, const DistanceFieldOptions& o) {
  j = json{{"occupied_threshold", o.occupied_threshold},
           {"treat_unknown_as_occupied", o.treat_unknown_as_occupied},
           {"truncation", o.truncation}};
}

void from_json(const json& j, DistanceFieldOptions& o) {
  o.occupied_threshold = j.value("occupied_threshold", o.occupied_threshold);
  o.treat_unknown_as_occupied =
      j.value("treat_unknown_as_occupied", o.treat_unknown_as_occupied);
  o.truncation = j.value("truncation", o.truncation);
}

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  json j;
  in >> j;
  return j;
}

void save_json(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace replan

namespace replan::sim {

using nlohmann::json;

void to_json(json& j, const SensorModel& s) {
  j = json{{"h_fov_deg", s.h_fov_deg}, {"v_fov_deg", s.v_fov_deg},
           {"width", s.width},         {"height", s.height},
           {"max_range", s.max_range}, {"rate_hz", s.rate_hz}};
}

void from_json(const json& j, SensorModel& s) {
  s.h_fov_deg = j.value("h_fov_deg", s.h_fov_deg);
  s.v_fov_deg = j.value("v_fov_deg", s.v_fov_deg);
  s.width = j.value("width", s.width);
  s.height = j.value("height", s.height);
  s.max_range = j.value("max_range", s.max_range);
  s.rate_hz = j.value("rate_hz", s.rate_hz);
}

void to_json(json& j, const Box& b) {
  j = json{{"min", b.min}, {"max", b.max}};
}

void from_json(const json& j, Box& b) {
  b.min = j.value("min", b.min);
  b.max = j.value("max", b.max);
}

void to_json(json& j, const Cylinder& c) {
  j = json{{"center", c.center},
           {"radius", c.radius},
           {"z_min", c.z_min},
           {"z_max", c.z_max}};
}

void from_json(const json& j, Cylinder& c) {
  c.center = j.value("center", c.center);
  c.radius = j.value("radius", c.radius);
  c.z_min = j.value("z_min", c.z_min);
  c.z_max = j.value("z_max", c.z_max);
}

void to_json(json& j, const Sphere& s) {
  j = json{{"center", s.center}, {"radius", s.radius}};
}

void from_json(const json& j, Sphere& s) {
  s.center = j.value("center", s.center);
  s.radius = j.value("radius", s.radius);
}

void to_json(json& j, const World& w) {
  j = json{{"box", w.box},
           {"cylinders", w.cylinders},
           {"spheres", w.spheres},
           {"seed", w.seed}};
}

void from_json(const json& j, World& w) {
  if (j.contains("box")) j.at("box").get_to(w.box);
  w.cylinders = j.value("cylinders", w.cylinders);
  w.spheres = j.value("spheres", w.spheres);
  w.seed = j.value("seed", w.seed);
}

void to_json(json& j, const ForestParams& p) {
  j = json{{"box", p.box},
           {"density", p.density},
           {"radius_min", p.radius_min},
           {"radius_max", p.radius_max}};
}

void from_json(const json& j, ForestParams& p) {
  if (j.contains("box")) j.at("box").get_to(p.box);
  p.density = j.value("density", p.density);
  p.radius_min = j.value("radius_min", p.radius_min);
  p.radius_max = j.value("radius_max", p.radius_max);
}

void to_json(json& j, const EpisodeConfig& c) {
  j = json{{"replanner", c.replanner},
           {"sensor", c.sensor},
           {"buffer_exponent", c.buffer_exponent},
           {"buffer_resolution", c.buffer_resolution},
           {"occupancy", c.occupancy},
           {"edt", c.edt},
           {"mav_radius", c.mav_radius},
           {"goal_tolerance", c.goal_tolerance},
           {"timeout", c.timeout},
           {"oracle_map", c.oracle_map},
           {"collision_samples_per_step", c.collision_samples_per_step}};
}

void from_json(const json& j, EpisodeConfig& c) {
  if (j.contains("replanner")) j.at("replanner").get_to(c.replanner);
  if (j.contains("sensor")) j.at("sensor").get_to(c.sensor);
  c.buffer_exponent = j.value("buffer_exponent", c.buffer_exponent);
  c.buffer_resolution = j.value("buffer_resolution", c.buffer_resolution);
  if (j.contains("occupancy")) j.at("occupancy").get_to(c.occupancy);
  if (j.contains("edt")) j.at("edt").get_to(c.edt);
  c.mav_radius = j.value("mav_radius", c.mav_radius);
  c.goal_tolerance = j.value("goal_tolerance", c.goal_tolerance);
  c.timeout = j.value("timeout", c.timeout);
  c.oracle_map = j.value("oracle_map", c.oracle_map);
  c.collision_samples_per_step =
      j.value("collision_samples_per_step", c.collision_samples_per_step);
}

void to_json(json& j, const BenchmarkConfig& c) {
  j = json{{"forests", c.forests},
           {"pairs_per_forest", c.pairs_per_forest},
           {"c_sweep", c.c_sweep},
           {"density_min", c.density_min},
           {"density_max", c.density_max},
           {"min_pair_distance", c.min_pair_distance},
           {"edge_margin", c.edge_margin},
           {"clearance", c.clearance},
           {"reference_speed", c.reference_speed},
           {"seed", c.seed},
           {"forest", c.forest},
           {"episode", c.episode}};
}

void from_json(const json& j, BenchmarkConfig& c) {
  c.forests = j.value("forests", c.forests);
  c.pairs_per_forest = j.value("pairs_per_forest", c.pairs_per_forest);
  c.c_sweep = j.value("c_sweep", c.c_sweep);
  c.density_min = j.value("density_min", c.density_min);
  c.density_max = j.value("density_max", c.density_max);
  c.min_pair_distance = j.value("min_pair_distance", c.min_pair_distance);
  c.edge_margin = j.value("edge_margin", c.edge_margin);
  c.clearance = j.value("clearance", c.clearance);
  c.reference_speed = j.value("reference_speed", c.reference_speed);
  c.seed = j.value("seed", c.seed);
  if (j.contains("forest")) j.at("forest").get_to(c.forest);
  if (j.contains("episode")) j.at("episode").get_to(c.episode);
}

void to_json(json& j, const MappingBenchConfig& c) {
  j = json{{"frames", c.frames},
           {"sensor", c.sensor},
           {"buffer_exponent", c.buffer_exponent},
           {"resolution", c.resolution},
           {"include_baseline", c.include_baseline},
           {"path_length", c.path_length},
           {"seed", c.seed}};
}

void from_json(const json& j, MappingBenchConfig& c) {
  c.frames = j.value("frames", c.frames);
  if (j.contains("sensor")) j.at("sensor").get_to(c.sensor);
  c.buffer_exponent = j.value("buffer_exponent", c.buffer_exponent);
  c.resolution = j.value("resolution", c.resolution);
  c.include_baseline = j.value("include_baseline", c.include_baseline);
  c.path_length = j.value("path_length", c.path_length);
  c.seed = j.value("seed", c.seed);
}

}  // namespace replan::sim
