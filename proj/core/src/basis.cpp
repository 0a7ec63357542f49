#include "replan/basis.hpp"

#include <array>
#include <map>
#include <stdexcept>

namespace replan {

namespace {

// Polynomial in u with rational coefficients, ascending powers.
using Poly = std::vector<Rational>;

Poly poly_add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

// (a + b*u) * p
Poly poly_mul_linear(const Poly& p, const Rational& a, const Rational& b) {
  Poly out(p.size() + 1, Rational(0));
  for (size_t i = 0; i < p.size(); ++i) {
    out[i] += a * p[i];
    out[i + 1] += b * p[i];
  }
  return out;
}

// B-spline of order m on the integer knots i, i+1, ..., i+m, restricted to
// the evaluation interval u in [0,1). Order 1 is the indicator of [0,1).
Poly segment_basis(int i, int m) {
  if (m == 1) {
    return (i == 0) ? Poly{Rational(1)} : Poly{};
  }
  const Rational inv(1, m - 1);
  Poly out;
  Poly left = segment_basis(i, m - 1);
  if (!left.empty()) {
    // (u - i) / (m-1)
    out = poly_mul_linear(left, Rational(-i) * inv, inv);
  }
  Poly right = segment_basis(i + 1, m - 1);
  if (!right.empty()) {
    // (i + m - u) / (m-1)
    out = poly_add(out, poly_mul_linear(right, Rational(i + m) * inv, -inv));
  }
  return out;
}

}  // namespace

Eigen::MatrixXd BasisMatrix::to_double() const {
  Eigen::MatrixXd m(order, order);
  for (int r = 0; r < order; ++r)
    for (int c = 0; c < order; ++c)
      m(r, c) = boost::rational_cast<double>(entries[r][c]);
  return m;
}

BasisMatrix basis_matrix(int order) {
  if (order < 2 || order > 12)
    throw std::invalid_argument("basis_matrix: order must be in [2, 12]");

  BasisMatrix m;
  m.order = order;
  m.entries.assign(order, std::vector<Rational>(order, Rational(0)));
  for (int col = 0; col < order; ++col) {
    // Column col multiplies the control point whose basis function starts
    // (order-1-col) knot intervals before the evaluation interval.
    Poly b = segment_basis(col - (order - 1), order);
    for (size_t row = 0; row < b.size(); ++row) m.entries[row][col] = b[row];
  }
  return m;
}

Eigen::Matrix<double, 6, 6> QuadraticCostMatrix::inner_double() const {
  Eigen::Matrix<double, 6, 6> q;
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c)
      q(r, c) = boost::rational_cast<double>(inner[r][c]);
  return q;
}

Eigen::Matrix<double, 6, 6> QuadraticCostMatrix::scaled() const {
  double f = 1.0;
  for (int j = 0; j < 2 * derivative_order - 1; ++j) f *= dt;
  return inner_double() / f;
}

QuadraticCostMatrix quadratic_cost_matrix(int derivative_order, double dt) {
  if (derivative_order < 1 || derivative_order > 5)
    throw std::invalid_argument(
        "quadratic_cost_matrix: derivative_order must be in [1, 5]");
  if (!(dt > 0.0))
    throw std::invalid_argument("quadratic_cost_matrix: dt must be > 0");

  QuadraticCostMatrix q;
  q.derivative_order = derivative_order;
  q.dt = dt;
  q.inner.assign(6, std::vector<Rational>(6, Rational(0)));

  // d^i/du^i u^m = (m falling i) u^(m-i); coefficient zero for m < i.
  std::array<long long, 6> coeff{};
  std::array<int, 6> power{};
  for (int mdeg = 0; mdeg < 6; ++mdeg) {
    long long c = 1;
    for (int j = 0; j < derivative_order; ++j) c *= (mdeg - j);
    coeff[mdeg] = (mdeg >= derivative_order) ? c : 0;
    power[mdeg] = (mdeg >= derivative_order) ? mdeg - derivative_order : 0;
  }
  for (int r = 0; r < 6; ++r) {
    for (int c = 0; c < 6; ++c) {
      if (coeff[r] == 0 || coeff[c] == 0) continue;
      // 2 * int_0^1 coeff_r u^pr * coeff_c u^pc du
      q.inner[r][c] =
          Rational(2 * coeff[r] * coeff[c], power[r] + power[c] + 1);
    }
  }
  return q;
}

const Eigen::Matrix<double, 6, 6>& quintic_basis() {
  static const Eigen::Matrix<double, 6, 6> m6 = [] {
    Eigen::Matrix<double, 6, 6> m = basis_matrix(6).to_double();
    return m;
  }();
  return m6;
}

const Eigen::Matrix<double, 6, 6>& quintic_cost_form(int derivative_order) {
  static const std::array<Eigen::Matrix<double, 6, 6>, 5> forms = [] {
    std::array<Eigen::Matrix<double, 6, 6>, 5> out;
    const Eigen::Matrix<double, 6, 6>& m6 = quintic_basis();
    for (int i = 1; i <= 5; ++i) {
      Eigen::Matrix<double, 6, 6> q = quadratic_cost_matrix(i, 1.0).inner_double();
      out[i - 1] = 0.5 * m6.transpose() * q * m6;
    }
    return out;
  }();
  if (derivative_order < 1 || derivative_order > 5)
    throw std::invalid_argument("quintic_cost_form: derivative_order in [1,5]");
  return forms[derivative_order - 1];
}

}  // namespace replan
