#include <doctest.h>

#include <Eigen/Dense>

#include "oracles.hpp"
#include "replan/basis.hpp"

using replan::BasisMatrix;
using replan::Rational;
using replan::basis_matrix;
using replan::quadratic_cost_matrix;
using replan::quintic_basis;
using replan::quintic_cost_form;

namespace {

// Published quintic basis matrix, rows u^0..u^5, columns window points,
// common factor 1/120.
const int kM6Numerators[6][6] = {
    {1, 26, 66, 26, 1, 0},     {-5, -50, 0, 50, 5, 0},
    {10, 20, -60, 20, 10, 0},  {-10, 20, 0, -20, 10, 0},
    {5, -20, 30, -20, 5, 0},   {-1, 5, -10, 10, -5, 1}};

}  // namespace

TEST_CASE("quintic basis matrix equals the published one, exactly") {
  const BasisMatrix m = basis_matrix(6);
  REQUIRE(m.order == 6);
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c)
      CHECK(m.entries[r][c] == Rational(kM6Numerators[r][c], 120));
}

TEST_CASE("low-order basis matrices match hand results") {
  const BasisMatrix m2 = basis_matrix(2);
  CHECK(m2.entries[0][0] == Rational(1));
  CHECK(m2.entries[0][1] == Rational(0));
  CHECK(m2.entries[1][0] == Rational(-1));
  CHECK(m2.entries[1][1] == Rational(1));

  // Cubic: (1/6) [[1,4,1,0], [-3,0,3,0], [3,-6,3,0], [-1,3,-3,1]].
  const BasisMatrix m4 = basis_matrix(4);
  const int cubic[4][4] = {
      {1, 4, 1, 0}, {-3, 0, 3, 0}, {3, -6, 3, 0}, {-1, 3, -3, 1}};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      CHECK(m4.entries[r][c] == Rational(cubic[r][c], 6));

  CHECK_THROWS_AS(basis_matrix(1), std::invalid_argument);
  CHECK_THROWS_AS(basis_matrix(13), std::invalid_argument);
}

TEST_CASE("basis matrix rows of each order sum to a partition of unity") {
  // Columns of M_k evaluated at any u sum to 1: row 0 sums to 1, others to 0.
  for (int order = 2; order <= 8; ++order) {
    const BasisMatrix m = basis_matrix(order);
    for (int r = 0; r < order; ++r) {
      Rational sum(0);
      for (int c = 0; c < order; ++c) sum += m.entries[r][c];
      CHECK(sum == Rational(r == 0 ? 1 : 0));
    }
  }
}

TEST_CASE("acceleration cost inner matrix matches the published block") {
  // Published nonzero block (rows/cols 3..6, 1-based), Hessian form.
  const auto q = quadratic_cost_matrix(2, 1.0);
  const Rational block[4][4] = {
      {Rational(8), Rational(12), Rational(16), Rational(20)},
      {Rational(12), Rational(24), Rational(36), Rational(48)},
      {Rational(16), Rational(36), Rational(288, 5), Rational(80)},
      {Rational(20), Rational(48), Rational(80), Rational(800, 7)}};
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c) {
      const Rational expect =
          (r >= 2 && c >= 2) ? block[r - 2][c - 2] : Rational(0);
      CHECK(q.inner[r][c] == expect);
    }
  // The printed decimals: 57.6 and 114.286 (rounded).
  CHECK(q.inner[4][4] == Rational(288, 5));
  CHECK(boost::rational_cast<double>(q.inner[5][5]) ==
        doctest::Approx(114.286).epsilon(1e-5));
}

TEST_CASE("cost inner matrices equal the quadrature oracle") {
  // Q_i = 2 int_0^1 b_i b_i^T du with b_i the i-th derivative of the power
  // basis. Entries are polynomials integrated exactly by Gauss-Legendre.
  auto power_deriv = [](int i, double u) {
    Eigen::Matrix<double, 6, 1> b = Eigen::Matrix<double, 6, 1>::Zero();
    for (int k = i; k < 6; ++k) {
      double coeff = 1.0;
      for (int j = 0; j < i; ++j) coeff *= k - j;
      b(k) = coeff * std::pow(u, k - i);
    }
    return b;
  };
  for (int i = 1; i <= 5; ++i) {
    const Eigen::Matrix<double, 6, 6> inner =
        quadratic_cost_matrix(i, 1.0).inner_double();
    for (int r = 0; r < 6; ++r)
      for (int c = 0; c < 6; ++c) {
        const double ref = 2.0 * oracle::integrate(
                                     [&](double u) {
                                       return power_deriv(i, u)(r) *
                                              power_deriv(i, u)(c);
                                     },
                                     0.0, 1.0);
        CHECK(inner(r, c) == doctest::Approx(ref).epsilon(1e-12));
      }
  }
}

TEST_CASE("scaled cost matrix applies the 1/dt^(2i-1) factor") {
  for (int i = 1; i <= 4; ++i) {
    const double dt = 0.5;
    const auto q = quadratic_cost_matrix(i, dt);
    const Eigen::Matrix<double, 6, 6> unscaled = q.inner_double();
    const Eigen::Matrix<double, 6, 6> scaled = q.scaled();
    CHECK((scaled - unscaled / std::pow(dt, 2 * i - 1)).norm() ==
          doctest::Approx(0.0));
  }
  CHECK_THROWS_AS(quadratic_cost_matrix(0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(quadratic_cost_matrix(6, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(quadratic_cost_matrix(2, 0.0), std::invalid_argument);
}

TEST_CASE("cached doubles agree with the rational forms") {
  CHECK((quintic_basis() - basis_matrix(6).to_double()).norm() ==
        doctest::Approx(0.0));
  for (int i = 1; i <= 5; ++i) {
    const Eigen::Matrix<double, 6, 6> expect =
        0.5 * quintic_basis().transpose() *
        quadratic_cost_matrix(i, 1.0).inner_double() * quintic_basis();
    CHECK((quintic_cost_form(i) - expect).norm() == doctest::Approx(0.0));
  }
}
