#pragma once

#include <Eigen/Dense>
#include <vector>

namespace replan {

/// Uniform quintic B-spline in R^3.
///
/// Control points are stored 0-based; segment s spans
///   [t0 + s*dt, t0 + (s+1)*dt)
/// and is shaped by control points c_s .. c_{s+5}. This is the usual centered
/// window: in the relative numbering where segment s is said to start "at
/// control point i" with window [i-2, i+3], storage index j corresponds to
/// i = j - 2, and the time most associated with c_j (its Greville abscissa)
/// is t0 + (j-2)*dt.
///
/// Values are immutable-after-build for evaluation; mutation (append,
/// set_control_point) requires exclusive access.
class UniformBSpline {
 public:
  static constexpr int kDegree = 5;
  static constexpr int kOrder = 6;

  /// Requires at least 6 control points and dt > 0.
  UniformBSpline(std::vector<Eigen::Vector3d> control_points, double dt,
                 double t0 = 0.0);

  int size() const { return static_cast<int>(control_points_.size()); }
  int segment_count() const { return size() - kDegree; }
  double dt() const { return dt_; }
  double t0() const { return t0_; }
  double t_min() const { return t0_; }
  double t_max() const { return t0_ + segment_count() * dt_; }

  const Eigen::Vector3d& control_point(int i) const {
    return control_points_[static_cast<size_t>(i)];
  }
  const std::vector<Eigen::Vector3d>& control_points() const {
    return control_points_;
  }
  void set_control_point(int i, const Eigen::Vector3d& p);

  /// Appending extends the evaluable range by dt; evaluations more than
  /// 3 segments before the previous end are unaffected.
  void push_control_point(const Eigen::Vector3d& p);

  double segment_start_time(int segment) const { return t0_ + segment * dt_; }

  /// Time the spline associates with control point i (Greville abscissa).
  double greville_time(int i) const { return t0_ + (i - 2) * dt_; }

  struct SegmentRef {
    int index;
    double u;  // local time in [0,1]; u == 1 only at t == t_max
  };

  /// Segment index and local time for t in [t_min, t_max]. The right endpoint
  /// is treated as the limit from the left (last segment, u = 1).
  /// Throws std::domain_error outside the evaluable range.
  SegmentRef segment_at(double t) const;

  /// d-th time derivative at t. d in [0,5] evaluates the matrix form;
  /// d > 5 returns the zero vector. Throws std::domain_error for t outside
  /// [t_min, t_max] and std::invalid_argument for d < 0.
  Eigen::Vector3d evaluate(double t, int deriv_order = 0) const;

  /// Weights of the six window control points at local time u in [0,1]:
  /// the d-th derivative of the power row times M6. The caller applies the
  /// 1/dt^d factor. These are also the Jacobian of evaluate() with respect
  /// to the window control points.
  static Eigen::Matrix<double, 6, 1> basis_weights(double u, int deriv_order);

  struct SegmentCost {
    double value;
    Eigen::Matrix<double, 6, 3> gradient;  // w.r.t. the six window points
  };

  /// Closed-form integral of |p^(i)(t)|^2 over one segment and its gradient
  /// with respect to the window control points.
  SegmentCost segment_quadratic_cost(int segment, int deriv_order) const;

 private:
  std::vector<Eigen::Vector3d> control_points_;
  double dt_;
  double t0_;
};

}  // namespace replan
