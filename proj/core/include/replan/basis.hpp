#pragma once

#include <Eigen/Dense>
#include <boost/rational.hpp>
#include <vector>

namespace replan {

using Rational = boost::rational<long long>;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Basis matrix M_k of a uniform B-spline of order k (degree k-1), exact.
///
/// Column n holds the power-basis coefficients (ascending, rows are u^0..u^{k-1})
/// of the basis function multiplying the n-th control point of the local window,
/// so that on one knot interval
///   p(u) = [1, u, ..., u^{k-1}] * M_k * [c_j, ..., c_{j+k-1}]^T,  u in [0,1).
struct BasisMatrix {
  int order = 0;
  RationalMatrix entries;  // [row][col], order x order

  Eigen::MatrixXd to_double() const;
};

/// Computes M_k via the De Boor-Cox recursion carried out on polynomials over
/// exact rationals (integer knots, restricted to one interval).
/// Valid for 2 <= order <= 12; throws std::invalid_argument otherwise.
BasisMatrix basis_matrix(int order);

/// Inner matrix of the closed-form squared-derivative integral for one quintic
/// segment, stored in the conventional Hessian form
///   Q = 2 * int_0^1 b_i(u) b_i(u)^T du,
/// where b_i is the i-th derivative of the power basis [1,u,...,u^5].
/// With c the six local control points of one axis the segment integral is
///   int |p^(i)(t)|^2 dt = 0.5 * c^T M6^T Q M6 c / dt^(2i-1)
/// and its gradient w.r.t. c is M6^T Q M6 c / dt^(2i-1).
struct QuadraticCostMatrix {
  int derivative_order = 0;
  double dt = 0.0;
  RationalMatrix inner;  // 6x6, exact, no dt scaling

  /// Inner matrix as doubles including the 1/dt^(2i-1) factor.
  Eigen::Matrix<double, 6, 6> scaled() const;
  Eigen::Matrix<double, 6, 6> inner_double() const;
};

/// Requires 1 <= derivative_order <= 5 and dt > 0.
QuadraticCostMatrix quadratic_cost_matrix(int derivative_order, double dt);

/// Cached double-precision M6.
const Eigen::Matrix<double, 6, 6>& quintic_basis();

/// Cached 0.5 * M6^T * inner(i) * M6 for i in {1..5}, without the dt factor.
/// segment cost = c^T K c / dt^(2i-1), gradient = 2 K c / dt^(2i-1).
const Eigen::Matrix<double, 6, 6>& quintic_cost_form(int derivative_order);

}  // namespace replan
