#pragma once

#include <Eigen/Dense>
#include <functional>

namespace replan {

struct BFGSOptions {
  int max_iterations = 100;
  double gradient_tolerance = 1e-6;        // infinity norm
  double relative_decrease_tolerance = 1e-8;
  int max_line_search_steps = 40;
  double armijo_c1 = 1e-4;
  double backtrack_factor = 0.5;
};

struct BFGSResult {
  Eigen::VectorXd x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
  bool aborted_non_finite = false;
};

/// Dense BFGS (inverse-Hessian update) with Armijo backtracking. The
/// objective is called as objective(x, &grad) and must fill grad when the
/// pointer is non-null. Non-finite trial values are rejected by the line
/// search; a non-finite accepted state aborts and the best iterate seen is
/// returned, so the result never exceeds the starting value.
BFGSResult bfgs_minimize(
    const std::function<double(const Eigen::VectorXd&, Eigen::VectorXd*)>&
        objective,
    Eigen::VectorXd x0, const BFGSOptions& options = {});

}  // namespace replan
