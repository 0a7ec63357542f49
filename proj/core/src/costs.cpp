#include "replan/costs.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace replan {

namespace {

using Vector6d = Eigen::Matrix<double, 6, 1>;

// Number of midpoint-rule samples for the problem's integration window.
int sample_count(const OptimizationProblem& pb) {
  const double segments = (pb.t_max - pb.t_min) / pb.spline->dt();
  return std::max<int>(
      1, static_cast<int>(std::llround(segments * pb.samples_per_segment)));
}

// Adds w_i * d to each free window slot of the given segment.
void scatter(const OptimizationProblem& pb, int segment, const Vector6d& w,
             const Eigen::Vector3d& d, Eigen::VectorXd& grad) {
  for (int i = 0; i < 6; ++i) {
    const int f = segment + i - pb.first_free;
    if (f >= 0) grad.segment<3>(3 * f) += w(i) * d;
  }
}

// exp(x) - 1 with a C^1 linear continuation above kMaxExponent, so huge
// limit violations cannot overflow. Returns {value, derivative}.
std::pair<double, double> soft_exp(double x) {
  constexpr double kMaxExponent = 50.0;
  if (x <= kMaxExponent) {
    const double e = std::exp(x);
    return {e - 1.0, e};
  }
  const double e = std::exp(kMaxExponent);
  return {e - 1.0 + e * (x - kMaxExponent), e};
}

}  // namespace

void validate(const OptimizationProblem& pb) {
  if (!pb.spline) throw std::invalid_argument("problem: null spline");
  if (pb.first_free < 0 || pb.free_count() < 1)
    throw std::invalid_argument("problem: need at least one free control point");
  if (!(pb.tau > 0.0)) throw std::invalid_argument("problem: tau must be > 0");
  if (pb.samples_per_segment < 1)
    throw std::invalid_argument("problem: samples_per_segment must be >= 1");
  const CostWeights& w = pb.weights;
  if (w.lambda_p < 0 || w.lambda_v < 0 || w.lambda_c < 0 || w.lambda_l < 0 ||
      w.lambda_q[0] < 0 || w.lambda_q[1] < 0 || w.lambda_q[2] < 0)
    throw std::invalid_argument("problem: weights must be >= 0");
  for (int k = 0; k < 4; ++k)
    if (pb.limits.enabled[k] && !(pb.limits.max_magnitude[k] > 0.0))
      throw std::invalid_argument("problem: enabled limits must be > 0");
  if (!pb.field && w.lambda_c > 0.0)
    throw std::invalid_argument("problem: collision weight needs a distance field");
  const double slop = 1e-9 * pb.spline->dt();
  if (!(pb.t_min < pb.t_max) || pb.t_min < pb.spline->t_min() - slop ||
      pb.t_max > pb.spline->t_max() + slop)
    throw std::invalid_argument("problem: bad integration window");
  if (pb.target.t_ep < pb.spline->t_min() - slop ||
      pb.target.t_ep > pb.spline->t_max() + slop)
    throw std::invalid_argument("problem: endpoint time outside spline range");
}

std::pair<double, double> integration_window_for_free(
    const UniformBSpline& spline, int first_free) {
  const int first_segment =
      std::clamp(first_free - UniformBSpline::kDegree, 0,
                 spline.segment_count() - 1);
  return {spline.segment_start_time(first_segment), spline.t_max()};
}

PointCost collision_point_cost(double d, double tau) {
  if (d > tau) return {0.0, 0.0};
  const double e = d - tau;
  return {e * e / (2.0 * tau), e / tau};
}

CostTerm endpoint_cost(const OptimizationProblem& pb) {
  CostTerm term;
  term.gradient = Eigen::VectorXd::Zero(3 * pb.free_count());
  const UniformBSpline& s = *pb.spline;
  const auto seg = s.segment_at(pb.target.t_ep);
  const Vector6d w0 = UniformBSpline::basis_weights(seg.u, 0);
  const Vector6d w1 = UniformBSpline::basis_weights(seg.u, 1) / s.dt();
  const Eigen::Vector3d dp = s.evaluate(pb.target.t_ep, 0) - pb.target.p_ep;
  const Eigen::Vector3d dv = s.evaluate(pb.target.t_ep, 1) - pb.target.v_ep;
  term.value =
      pb.weights.lambda_p * dp.squaredNorm() + pb.weights.lambda_v * dv.squaredNorm();
  scatter(pb, seg.index, w0, 2.0 * pb.weights.lambda_p * dp, term.gradient);
  scatter(pb, seg.index, w1, 2.0 * pb.weights.lambda_v * dv, term.gradient);
  return term;
}

CostTerm collision_cost(const OptimizationProblem& pb) {
  CostTerm term;
  term.gradient = Eigen::VectorXd::Zero(3 * pb.free_count());
  if (pb.weights.lambda_c == 0.0 || !pb.field) return term;
  const UniformBSpline& s = *pb.spline;
  const int m = sample_count(pb);
  const double delta = (pb.t_max - pb.t_min) / m;
  for (int j = 0; j < m; ++j) {
    const double t = pb.t_min + (j + 0.5) * delta;
    const auto seg = s.segment_at(t);
    const Vector6d w0 = UniformBSpline::basis_weights(seg.u, 0);
    const Vector6d w1 = UniformBSpline::basis_weights(seg.u, 1) / s.dt();
    Eigen::Vector3d p = Eigen::Vector3d::Zero();
    Eigen::Vector3d v = Eigen::Vector3d::Zero();
    for (int i = 0; i < 6; ++i) {
      const Eigen::Vector3d& c = s.control_point(seg.index + i);
      p += w0(i) * c;
      v += w1(i) * c;
    }
    const auto field = pb.field->sample(p);
    const PointCost c = collision_point_cost(field.distance, pb.tau);
    if (c.value == 0.0 && c.derivative == 0.0) continue;
    const double speed = v.norm();
    const double scale = pb.weights.lambda_c * delta;
    term.value += scale * c.value * speed;
    // d/dp [c(d(p)) * |v|] and d/dv [c * |v|] (subgradient 0 at |v| = 0).
    scatter(pb, seg.index, w0, scale * c.derivative * speed * field.gradient,
            term.gradient);
    if (speed > 0.0)
      scatter(pb, seg.index, w1, scale * c.value / speed * v, term.gradient);
  }
  return term;
}

CostTerm quadratic_cost(const OptimizationProblem& pb) {
  CostTerm term;
  term.gradient = Eigen::VectorXd::Zero(3 * pb.free_count());
  const UniformBSpline& s = *pb.spline;
  const double dt = s.dt();
  const int lo = std::max(
      0, static_cast<int>(std::floor((pb.t_min - s.t0()) / dt + 1e-9)));
  const int hi = std::min(
      s.segment_count() - 1,
      static_cast<int>(std::ceil((pb.t_max - s.t0()) / dt - 1e-9)) - 1);
  for (int segment = lo; segment <= hi; ++segment) {
    for (int order = 2; order <= 4; ++order) {
      const double lambda = pb.weights.lambda_q[order - 2];
      if (lambda == 0.0) continue;
      const auto sc = s.segment_quadratic_cost(segment, order);
      term.value += lambda * sc.value;
      for (int i = 0; i < 6; ++i) {
        const int f = segment + i - pb.first_free;
        if (f >= 0)
          term.gradient.segment<3>(3 * f) +=
              lambda * sc.gradient.row(i).transpose();
      }
    }
  }
  return term;
}

CostTerm limit_cost(const OptimizationProblem& pb) {
  CostTerm term;
  term.gradient = Eigen::VectorXd::Zero(3 * pb.free_count());
  if (pb.weights.lambda_l == 0.0) return term;
  const UniformBSpline& s = *pb.spline;
  const int m = sample_count(pb);
  const double delta = (pb.t_max - pb.t_min) / m;
  for (int j = 0; j < m; ++j) {
    const double t = pb.t_min + (j + 0.5) * delta;
    const auto seg = s.segment_at(t);
    for (int order = 1; order <= 4; ++order) {
      if (!pb.limits.enabled[order - 1]) continue;
      const double cap = pb.limits.max_magnitude[order - 1];
      const Vector6d w =
          UniformBSpline::basis_weights(seg.u, order) / std::pow(s.dt(), order);
      Eigen::Vector3d d = Eigen::Vector3d::Zero();
      for (int i = 0; i < 6; ++i) d += w(i) * s.control_point(seg.index + i);
      const double x = d.squaredNorm() - cap * cap;
      if (x <= 0.0) continue;
      const auto [value, dvalue] = soft_exp(x);
      const double scale = pb.weights.lambda_l * delta;
      term.value += scale * value;
      scatter(pb, seg.index, w, scale * dvalue * 2.0 * d, term.gradient);
    }
  }
  return term;
}

CostTerm total_cost(const OptimizationProblem& pb) {
  CostTerm term = endpoint_cost(pb);
  const CostTerm c = collision_cost(pb);
  const CostTerm q = quadratic_cost(pb);
  const CostTerm l = limit_cost(pb);
  term.value += c.value + q.value + l.value;
  term.gradient += c.gradient + q.gradient + l.gradient;
  return term;
}

}  // namespace replan
