#pragma once

#include "replan/bfgs.hpp"
#include "replan/costs.hpp"

namespace replan {

struct OptimizeOptions {
  int max_iterations = 100;
  double gradient_tolerance = 1e-6;
  double relative_decrease_tolerance = 1e-8;
};

struct OptimizeReport {
  int iterations = 0;
  double initial_cost = 0.0;
  double final_cost = 0.0;
  bool converged = false;
  bool aborted_non_finite = false;
};

/// Minimizes total_cost over the problem's free control points in place.
/// Frozen control points are untouched; the final cost never exceeds the
/// initial cost (the best iterate is kept).
OptimizeReport optimize(OptimizationProblem& problem,
                        const OptimizeOptions& options = {});

}  // namespace replan
