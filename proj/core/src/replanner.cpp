#include "replan/replanner.hpp"

#include <stdexcept>

namespace replan {

namespace {

std::vector<Eigen::Vector3d> initial_points(const GlobalTrajectory& global,
                                            const ReplannerConfig& config) {
  if (!(config.dt > 0.0))
    throw std::invalid_argument("replanner: dt must be > 0");
  if (config.free_points < 1)
    throw std::invalid_argument("replanner: need at least one free point");
  const int total = UniformBSpline::kOrder + config.free_points;
  if (global.duration() < total * config.dt - 1e-9)
    throw std::invalid_argument(
        "replanner: global trajectory shorter than (6 + C) * dt");

  std::vector<Eigen::Vector3d> points(total);
  const auto greville = [&](int j) {
    return config.start_time + (j - 2) * config.dt;
  };
  for (int j = 0; j < UniformBSpline::kOrder; ++j)
    points[j] = config.start == ReplannerConfig::StartPolicy::kFromRest
                    ? global.position(config.start_time)
                    : global.position(greville(j));
  for (int j = UniformBSpline::kOrder; j < total; ++j)
    points[j] = global.position(greville(j));
  return points;
}

}  // namespace

Replanner::Replanner(const GlobalTrajectory& global,
                     const ReplannerConfig& config)
    : global_(&global),
      config_(config),
      spline_(initial_points(global, config), config.dt, config.start_time),
      frozen_(UniformBSpline::kOrder),
      t_ep_(spline_.t_max()) {}

Replanner::Command Replanner::tick(const DistanceField& field,
                                   TickReport* report) {
  OptimizationProblem problem;
  problem.spline = &spline_;
  problem.field = &field;
  problem.weights = config_.weights;
  problem.limits = config_.limits.scaled(config_.limit_margin);
  problem.target = {t_ep_, global_->position(t_ep_), global_->velocity(t_ep_)};
  problem.tau = config_.tau;
  problem.first_free = frozen_;
  problem.samples_per_segment = config_.samples_per_segment;
  std::tie(problem.t_min, problem.t_max) =
      integration_window_for_free(spline_, frozen_);

  const OptimizeReport optimize_report = optimize(problem, config_.optimize);

  Command command;
  command.tick = ticks_;
  command.knot_time = spline_.greville_time(frozen_);
  command.point = spline_.control_point(frozen_);
  ++frozen_;

  // Extend the horizon: the new point starts on the global trajectory at its
  // own Greville time.
  spline_.push_control_point(
      global_->position(spline_.greville_time(spline_.size())));
  t_ep_ += config_.dt;
  ++ticks_;
  commands_.push_back(command);

  if (report) report->optimize = optimize_report;
  return command;
}

UniformBSpline Replanner::committed_trajectory() const {
  const auto& all = spline_.control_points();
  std::vector<Eigen::Vector3d> frozen(all.begin(), all.begin() + frozen_);
  return UniformBSpline(std::move(frozen), config_.dt, config_.start_time);
}

}  // namespace replan
