#pragma once

#include <filesystem>

#include <json.hpp>

#include "replan/costs.hpp"
#include "replan/occupancy_buffer.hpp"
#include "replan/optimizer.hpp"
#include "replan/replanner.hpp"
#include "replan/sim/episode.hpp"
#include "replan/sim/forest_benchmark.hpp"
#include "replan/sim/mapping_benchmark.hpp"

// JSON round-trips for every configurable struct. Parsing is partial: keys
// that are absent keep their compiled-in defaults, so config files only need
// to state what they change.

namespace nlohmann {

template <typename Scalar, int N>
struct adl_serializer<Eigen::Matrix<Scalar, N, 1>> {
  static void to_json(json& j, const Eigen::Matrix<Scalar, N, 1>& v) {
    j = json::array();
    for (int i = 0; i < N; ++i) j.push_back(v(i));
  }
  static void from_json(const json& j, Eigen::Matrix<Scalar, N, 1>& v) {
    for (int i = 0; i < N; ++i) v(i) = j.at(i).get<Scalar>();
  }
};

}  // namespace nlohmann

namespace replan {

void to_json(nlohmann::json& j, const CostWeights& w);
void from_json(const nlohmann::json& j, CostWeights& w);
void to_json(nlohmann::json& j, const DerivativeLimits& l);
void from_json(const nlohmann::json& j, DerivativeLimits& l);
void to_json(nlohmann::json& j, const OptimizeOptions& o);
void from_json(const nlohmann::json& j, OptimizeOptions& o);
void to_json(nlohmann::json& j, const ReplannerConfig& c);
void from_json(const nlohmann::json& j, ReplannerConfig& c);
void to_json(nlohmann::json& j, const OccupancyParams& p);
void from_json(const nlohmann::json& j, OccupancyParams& p);
void to_json(nlohmann::json& j, const DistanceFieldOptions& o);
void from_json(const nlohmann::json& j, DistanceFieldOptions& o);

nlohmann::json load_json(const std::filesystem::path& path);
void save_json(const std::filesystem::path& path, const nlohmann::json& j);

}  // namespace replan

namespace replan::sim {

void to_json(nlohmann::json& j, const SensorModel& s);
void from_json(const nlohmann::json& j, SensorModel& s);
void to_json(nlohmann::json& j, const Box& b);
void from_json(const nlohmann::json& j, Box& b);
void to_json(nlohmann::json& j, const Cylinder& c);
void from_json(const nlohmann::json& j, Cylinder& c);
void to_json(nlohmann::json& j, const Sphere& s);
void from_json(const nlohmann::json& j, Sphere& s);
void to_json(nlohmann::json& j, const World& w);
void from_json(const nlohmann::json& j, World& w);
void to_json(nlohmann::json& j, const ForestParams& p);
void from_json(const nlohmann::json& j, ForestParams& p);
void to_json(nlohmann::json& j, const EpisodeConfig& c);
void from_json(const nlohmann::json& j, EpisodeConfig& c);
void to_json(nlohmann::json& j, const BenchmarkConfig& c);
void from_json(const nlohmann::json& j, BenchmarkConfig& c);
void to_json(nlohmann::json& j, const MappingBenchConfig& c);
void from_json(const nlohmann::json& j, MappingBenchConfig& c);

}  // namespace replan::sim
