#pragma once

#include <Eigen/Dense>
#include <array>

#include "replan/bspline.hpp"
#include "replan/distance_field.hpp"

namespace replan {

struct CostWeights {
  double lambda_p = 10.0;  // endpoint position
  double lambda_v = 10.0;  // endpoint velocity
  double lambda_c = 10.0;  // collision
  // Integrated squared derivative weights for orders 2, 3, 4
  // (acceleration, jerk, snap).
  std::array<double, 3> lambda_q = {0.1, 0.1, 0.1};
  double lambda_l = 1.0;  // soft derivative limits
};

/// Soft limits on derivative magnitudes, orders 1..4 (velocity through
/// snap). Each order can be disabled independently.
struct DerivativeLimits {
  std::array<double, 4> max_magnitude = {2.0, 5.0, 20.0, 100.0};
  std::array<bool, 4> enabled = {true, true, true, true};

  DerivativeLimits scaled(double factor) const {
    DerivativeLimits out = *this;
    for (double& m : out.max_magnitude) m *= factor;
    return out;
  }
};

struct EndpointTarget {
  double t_ep = 0.0;
  Eigen::Vector3d p_ep = Eigen::Vector3d::Zero();
  Eigen::Vector3d v_ep = Eigen::Vector3d::Zero();
};

/// One local-optimization instance: a spline whose trailing control points
/// (indices >= first_free) are the decision variables, plus the scene and
/// objective parameters. Cost integrals run over [t_min, t_max] with the
/// midpoint rectangle rule. The distance field may be null only while the
/// collision weight is zero.
struct OptimizationProblem {
  UniformBSpline* spline = nullptr;
  const DistanceField* field = nullptr;
  CostWeights weights;
  DerivativeLimits limits;
  EndpointTarget target;
  double tau = 0.5;  // collision threshold distance (m)
  int first_free = 0;
  int samples_per_segment = 10;
  double t_min = 0.0;
  double t_max = 0.0;

  int free_count() const {
    return spline ? static_cast<int>(spline->size()) - first_free : 0;
  }
};

/// Throws std::invalid_argument when the problem violates its invariants.
void validate(const OptimizationProblem& problem);

/// [t_min, t_max] spanning exactly the segments that any free control point
/// influences (control point j shapes segments [j-5, j]).
std::pair<double, double> integration_window_for_free(
    const UniformBSpline& spline, int first_free);

struct PointCost {
  double value = 0.0;
  double derivative = 0.0;  // d(value)/dd
};
/// Collision penalty for a single point at distance d from the nearest
/// obstacle: (1/2tau)(d - tau)^2 inside the threshold, 0 outside; C^1 at
/// d = tau.
PointCost collision_point_cost(double d, double tau);

struct CostTerm {
  double value = 0.0;
  Eigen::VectorXd gradient;  // 3 * free_count, [x0 y0 z0 x1 ...]
};

CostTerm endpoint_cost(const OptimizationProblem& problem);
CostTerm collision_cost(const OptimizationProblem& problem);
CostTerm quadratic_cost(const OptimizationProblem& problem);
CostTerm limit_cost(const OptimizationProblem& problem);
CostTerm total_cost(const OptimizationProblem& problem);

}  // namespace replan
