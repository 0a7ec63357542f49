#include "replan/bfgs.hpp"

#include <cmath>
#include <stdexcept>

namespace replan {

BFGSResult bfgs_minimize(
    const std::function<double(const Eigen::VectorXd&, Eigen::VectorXd*)>&
        objective,
    Eigen::VectorXd x0, const BFGSOptions& options) {
  if (x0.size() == 0) throw std::invalid_argument("bfgs: empty state");
  const Eigen::Index n = x0.size();

  BFGSResult result;
  result.x = x0;

  Eigen::VectorXd x = std::move(x0);
  Eigen::VectorXd g(n);
  double f = objective(x, &g);

  double best_f = f;
  Eigen::VectorXd best_x = x;
  if (!std::isfinite(f) || !g.allFinite()) {
    result.value = f;
    result.aborted_non_finite = true;
    return result;
  }

  Eigen::MatrixXd h = Eigen::MatrixXd::Identity(n, n);
  bool first_update = true;

  Eigen::VectorXd d(n), x_new(n), g_new(n);
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    if (g.lpNorm<Eigen::Infinity>() <= options.gradient_tolerance) {
      result.converged = true;
      break;
    }
    result.iterations = iter + 1;

    d.noalias() = -(h * g);
    double slope = g.dot(d);
    if (!(slope < 0.0)) {  // not a descent direction: reset to steepest
      h.setIdentity();
      first_update = true;
      d = -g;
      slope = g.dot(d);
    }

    // Armijo backtracking.
    double alpha = 1.0;
    double f_new = f;
    bool accepted = false;
    for (int ls = 0; ls < options.max_line_search_steps; ++ls) {
      x_new = x + alpha * d;
      f_new = objective(x_new, nullptr);
      if (std::isfinite(f_new) && f_new <= f + options.armijo_c1 * alpha * slope) {
        accepted = true;
        break;
      }
      alpha *= options.backtrack_factor;
    }
    if (!accepted) break;  // stuck: best iterate already tracked

    objective(x_new, &g_new);
    if (!std::isfinite(f_new) || !g_new.allFinite()) {
      result.aborted_non_finite = true;
      break;
    }

    const Eigen::VectorXd s = x_new - x;
    const Eigen::VectorXd y = g_new - g;
    const double sy = s.dot(y);
    if (sy > 1e-12 * s.norm() * y.norm()) {
      if (first_update) {
        h *= sy / y.squaredNorm();
        first_update = false;
      }
      const double rho = 1.0 / sy;
      const Eigen::VectorXd hy = h * y;
      // H <- (I - rho s y^T) H (I - rho y s^T) + rho s s^T
      h.noalias() -= rho * (s * hy.transpose() + hy * s.transpose());
      h.noalias() += (rho * rho * y.dot(hy) + rho) * (s * s.transpose());
    }

    const double decrease = f - f_new;
    x.swap(x_new);
    g.swap(g_new);
    f = f_new;
    if (f < best_f) {
      best_f = f;
      best_x = x;
    }
    if (decrease <= options.relative_decrease_tolerance *
                        std::max(1.0, std::abs(f))) {
      result.converged = true;
      break;
    }
  }

  result.x = std::move(best_x);
  result.value = best_f;
  return result;
}

}  // namespace replan
