#include "replan/optimizer.hpp"

namespace replan {

OptimizeReport optimize(OptimizationProblem& problem,
                        const OptimizeOptions& options) {
  validate(problem);
  UniformBSpline& spline = *problem.spline;
  const int free = problem.free_count();

  Eigen::VectorXd x0(3 * free);
  for (int i = 0; i < free; ++i)
    x0.segment<3>(3 * i) = spline.control_point(problem.first_free + i);

  auto apply = [&](const Eigen::VectorXd& x) {
    for (int i = 0; i < free; ++i)
      spline.set_control_point(problem.first_free + i, x.segment<3>(3 * i));
  };
  auto objective = [&](const Eigen::VectorXd& x, Eigen::VectorXd* grad) {
    apply(x);
    if (!grad) {
      // Value-only probes (line search) still need every term.
      const CostTerm term = total_cost(problem);
      return term.value;
    }
    CostTerm term = total_cost(problem);
    *grad = std::move(term.gradient);
    return term.value;
  };

  BFGSOptions bfgs;
  bfgs.max_iterations = options.max_iterations;
  bfgs.gradient_tolerance = options.gradient_tolerance;
  bfgs.relative_decrease_tolerance = options.relative_decrease_tolerance;

  Eigen::VectorXd g0;
  const double initial = objective(x0, &g0);

  BFGSResult result = bfgs_minimize(objective, x0, bfgs);
  apply(result.x);

  OptimizeReport report;
  report.iterations = result.iterations;
  report.initial_cost = initial;
  report.final_cost = result.value;
  report.converged = result.converged;
  report.aborted_non_finite = result.aborted_non_finite;
  return report;
}

}  // namespace replan
