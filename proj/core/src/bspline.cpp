#include "replan/bspline.hpp"

#include <cmath>
#include <stdexcept>

#include "replan/basis.hpp"

namespace replan {

UniformBSpline::UniformBSpline(std::vector<Eigen::Vector3d> control_points,
                               double dt, double t0)
    : control_points_(std::move(control_points)), dt_(dt), t0_(t0) {
  if (static_cast<int>(control_points_.size()) < kOrder)
    throw std::invalid_argument("UniformBSpline: need at least 6 control points");
  if (!(dt_ > 0.0))
    throw std::invalid_argument("UniformBSpline: dt must be > 0");
}

void UniformBSpline::set_control_point(int i, const Eigen::Vector3d& p) {
  if (i < 0 || i >= size())
    throw std::invalid_argument("set_control_point: index out of range");
  control_points_[static_cast<size_t>(i)] = p;
}

void UniformBSpline::push_control_point(const Eigen::Vector3d& p) {
  control_points_.push_back(p);
}

UniformBSpline::SegmentRef UniformBSpline::segment_at(double t) const {
  // Tolerate one part in 1e9 of slop at either end so times assembled as
  // t0 + k*dt in callers cannot fall just outside the range.
  const double tol = 1e-9 * std::max(1.0, std::abs(t - t0_));
  double s = (t - t0_) / dt_;
  const int count = segment_count();
  if (!(s >= -tol / dt_) || s > count + tol / dt_)
    throw std::domain_error("UniformBSpline: t outside evaluable range");
  if (s < 0.0) s = 0.0;
  int idx = static_cast<int>(std::floor(s));
  if (idx > count - 1) idx = count - 1;  // right endpoint: limit from the left
  double u = s - idx;
  if (u > 1.0) u = 1.0;
  return {idx, u};
}

Eigen::Matrix<double, 6, 1> UniformBSpline::basis_weights(double u,
                                                          int deriv_order) {
  Eigen::Matrix<double, 1, 6> row = Eigen::Matrix<double, 1, 6>::Zero();
  double up = 1.0;  // u^(m - deriv_order)
  for (int m = deriv_order; m < 6; ++m) {
    double c = 1.0;
    for (int j = 0; j < deriv_order; ++j) c *= (m - j);
    row(m) = c * up;
    up *= u;
  }
  return (row * quintic_basis()).transpose();
}

Eigen::Vector3d UniformBSpline::evaluate(double t, int deriv_order) const {
  if (deriv_order < 0)
    throw std::invalid_argument("evaluate: derivative order must be >= 0");
  const SegmentRef seg = segment_at(t);
  if (deriv_order > kDegree) return Eigen::Vector3d::Zero();

  const Eigen::Matrix<double, 6, 1> w = basis_weights(seg.u, deriv_order);
  Eigen::Vector3d out = Eigen::Vector3d::Zero();
  for (int n = 0; n < 6; ++n)
    out += w(n) * control_points_[static_cast<size_t>(seg.index + n)];
  return out / std::pow(dt_, deriv_order);
}

UniformBSpline::SegmentCost UniformBSpline::segment_quadratic_cost(
    int segment, int deriv_order) const {
  if (segment < 0 || segment >= segment_count())
    throw std::invalid_argument("segment_quadratic_cost: segment out of range");
  const Eigen::Matrix<double, 6, 6>& form = quintic_cost_form(deriv_order);
  double scale = 1.0;
  for (int j = 0; j < 2 * deriv_order - 1; ++j) scale /= dt_;

  Eigen::Matrix<double, 6, 3> c;
  for (int n = 0; n < 6; ++n)
    c.row(n) = control_points_[static_cast<size_t>(segment + n)].transpose();

  SegmentCost out;
  const Eigen::Matrix<double, 6, 3> fc = form * c;
  out.value = scale * (c.array() * fc.array()).sum();
  out.gradient = 2.0 * scale * fc;
  return out;
}

}  // namespace replan
