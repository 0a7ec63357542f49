#include <doctest.h>

#include <Eigen/Dense>
#include <random>

#include "oracles.hpp"
#include "replan/distance_field.hpp"
#include "replan/occupancy_buffer.hpp"

using replan::DistanceField;
using replan::DistanceFieldOptions;
using replan::OccupancyBuffer;

namespace {

OccupancyBuffer buffer_with_occupied(
    int exponent, const std::vector<Eigen::Vector3i>& occupied_local,
    const Eigen::Vector3d& center = Eigen::Vector3d::Zero(),
    double resolution = 0.25) {
  OccupancyBuffer buf(exponent, resolution, center);
  const double lo_max = buf.params().max_log_odds();
  for (const Eigen::Vector3i& l : occupied_local)
    buf.set_log_odds(buf.offset() + l, lo_max);
  return buf;
}

std::vector<Eigen::Vector3i> random_occupied(std::mt19937_64& rng, int side,
                                             int count) {
  std::uniform_int_distribution<int> c(0, side - 1);
  std::vector<Eigen::Vector3i> out;
  out.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i)
    out.emplace_back(c(rng), c(rng), c(rng));
  return out;
}

}  // namespace

TEST_CASE("squared grid equals brute force, integer exact") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 12; ++trial) {
    const int exp = trial % 2 == 0 ? 3 : 4;
    const int side = 1 << exp;
    std::uniform_int_distribution<int> count_dist(1, side * side / 2);
    const auto occupied = random_occupied(rng, side, count_dist(rng));
    const OccupancyBuffer buf = buffer_with_occupied(exp, occupied);
    DistanceField field;
    field.update(buf);
    const auto ref = oracle::brute_force_edt_sq(side, occupied);
    REQUIRE(field.squared().size() == ref.size());
    CHECK(field.squared() == ref);
    // Meters are resolution * sqrt(squared).
    for (int k = 0; k < 50; ++k) {
      std::uniform_int_distribution<int> c(0, side - 1);
      const Eigen::Vector3i local(c(rng), c(rng), c(rng));
      const Eigen::Vector3i idx = buf.offset() + local;
      const size_t a =
          (static_cast<size_t>(local.x()) * side + local.y()) * side +
          local.z();
      CHECK(field.voxel_distance(idx) ==
            doctest::Approx(0.25 * std::sqrt(double(ref[a]))));
    }
  }
}

TEST_CASE("an empty map is far everywhere") {
  const OccupancyBuffer buf(3, 0.5, Eigen::Vector3d(1.0, 2.0, 3.0));
  DistanceField field;
  field.update(buf);
  REQUIRE(field.has_data());
  CHECK(field.far_distance() == doctest::Approx(8 * 0.5));
  for (const std::int64_t sq : field.squared()) CHECK(sq == 64);
  CHECK(field.voxel_distance(buf.offset()) ==
        doctest::Approx(field.far_distance()));
  // Outside the volume is also far, with a zero gradient.
  CHECK(field.voxel_distance(buf.offset() - Eigen::Vector3i(1, 0, 0)) ==
        doctest::Approx(field.far_distance()));
  CHECK_THROWS(field.squared_cells(buf.offset() - Eigen::Vector3i(1, 0, 0)));
  const auto s = field.sample(Eigen::Vector3d(100.0, 100.0, 100.0));
  CHECK(s.distance == doctest::Approx(field.far_distance()));
  CHECK(s.gradient == Eigen::Vector3d::Zero());
}

TEST_CASE("a single obstacle produces exact euclidean distances") {
  const Eigen::Vector3i pin(3, 4, 5);
  const OccupancyBuffer buf = buffer_with_occupied(3, {pin});
  DistanceField field;
  field.update(buf);
  Eigen::Vector3i l;
  for (l.x() = 0; l.x() < 8; ++l.x())
    for (l.y() = 0; l.y() < 8; ++l.y())
      for (l.z() = 0; l.z() < 8; ++l.z()) {
        const Eigen::Vector3i d = l - pin;
        CHECK(field.squared_cells(buf.offset() + l) ==
              std::int64_t(d.squaredNorm()));
      }
}

TEST_CASE("distance is 1-Lipschitz between voxel centers") {
  std::mt19937_64 rng(31);
  const auto occupied = random_occupied(rng, 16, 40);
  const OccupancyBuffer buf = buffer_with_occupied(4, occupied);
  DistanceField field;
  field.update(buf);
  std::uniform_int_distribution<int> c(0, 15);
  for (int k = 0; k < 500; ++k) {
    const Eigen::Vector3i a = buf.offset() + Eigen::Vector3i(c(rng), c(rng), c(rng));
    const Eigen::Vector3i b = buf.offset() + Eigen::Vector3i(c(rng), c(rng), c(rng));
    const double gap = 0.25 * (a - b).cast<double>().norm();
    CHECK(std::abs(field.voxel_distance(a) - field.voxel_distance(b)) <=
          gap + 1e-12);
  }
}

TEST_CASE("trilinear samples interpolate neighbouring centers") {
  const OccupancyBuffer buf = buffer_with_occupied(3, {{2, 3, 3}});
  DistanceField field;
  field.update(buf);
  const double r = 0.25;
  const Eigen::Vector3i a = buf.offset() + Eigen::Vector3i(4, 3, 3);
  const Eigen::Vector3i b = a + Eigen::Vector3i(1, 0, 0);
  const Eigen::Vector3d ca = buf.index_to_center(a);
  const double da = field.voxel_distance(a), db = field.voxel_distance(b);
  // Halfway between two centers along x: the mean, gradient (db-da)/r.
  const auto mid = field.sample(ca + Eigen::Vector3d(r / 2, 0, 0));
  CHECK(mid.distance == doctest::Approx(0.5 * (da + db)));
  CHECK(mid.gradient.x() == doctest::Approx((db - da) / r));
  // On-center along y, the interpolation cell spans [y, y+1]: the gradient
  // is the forward difference of the x-blended planes, not a symmetric 0.
  const double da_up = field.voxel_distance(a + Eigen::Vector3i(0, 1, 0));
  const double db_up = field.voxel_distance(b + Eigen::Vector3i(0, 1, 0));
  CHECK(mid.gradient.y() ==
        doctest::Approx((0.5 * (da_up + db_up) - 0.5 * (da + db)) / r));
  // At a voxel center the sample is the voxel distance itself.
  CHECK(field.sample(ca).distance == doctest::Approx(da));
}

TEST_CASE("sample gradients match finite differences inside cells") {
  std::mt19937_64 rng(37);
  const auto occupied = random_occupied(rng, 16, 25);
  const OccupancyBuffer buf = buffer_with_occupied(4, occupied);
  DistanceField field;
  field.update(buf);
  const double r = 0.25;
  std::uniform_real_distribution<double> in_cell(0.2, 0.8);
  std::uniform_int_distribution<int> c(1, 13);
  int checked = 0;
  for (int k = 0; k < 200; ++k) {
    const Eigen::Vector3d base =
        buf.index_to_center(buf.offset() +
                            Eigen::Vector3i(c(rng), c(rng), c(rng)));
    const Eigen::Vector3d p =
        base + Eigen::Vector3d(in_cell(rng), in_cell(rng), in_cell(rng)) * r;
    const auto s = field.sample(p);
    if (s.distance >= field.far_distance()) continue;
    const Eigen::Vector3d fd = oracle::fd_gradient(
        [&](const Eigen::VectorXd& x) {
          return field.distance_at(Eigen::Vector3d(x));
        },
        Eigen::VectorXd(p), 1e-7);
    CHECK((s.gradient - fd).norm() <= 1e-5 * std::max(1.0, fd.norm()));
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("sampling is continuous across cell boundaries") {
  const OccupancyBuffer buf = buffer_with_occupied(3, {{4, 4, 4}});
  DistanceField field;
  field.update(buf);
  // Cross the x-boundary between interpolation cells.
  const Eigen::Vector3d face =
      buf.index_to_center(buf.offset() + Eigen::Vector3i(2, 3, 4));
  for (double eps : {1e-7, 1e-9}) {
    const double lo = field.distance_at(face - Eigen::Vector3d(eps, 0, 0));
    const double hi = field.distance_at(face + Eigen::Vector3d(eps, 0, 0));
    CHECK(std::abs(hi - lo) <= 1e-5);
  }
}

TEST_CASE("queries outside the interpolable interior are far and flat") {
  const OccupancyBuffer buf = buffer_with_occupied(3, {{4, 4, 4}});
  DistanceField field;
  field.update(buf);
  // Less than half a voxel from the volume face: no 8-neighbourhood.
  const double r = 0.25;
  const Eigen::Vector3d box_min = buf.offset().cast<double>() * r;
  const auto s = field.sample(box_min + Eigen::Vector3d(0.01, 1.0, 1.0));
  CHECK(s.distance == doctest::Approx(field.far_distance()));
  CHECK(s.gradient == Eigen::Vector3d::Zero());
}

TEST_CASE("truncation caps meters but not the squared grid") {
  std::mt19937_64 rng(41);
  const auto occupied = random_occupied(rng, 8, 3);
  const OccupancyBuffer buf = buffer_with_occupied(3, occupied);
  DistanceFieldOptions opt;
  opt.truncation = 0.4;
  DistanceField field(opt);
  field.update(buf);
  CHECK(field.far_distance() == doctest::Approx(0.4));
  CHECK(field.squared() == oracle::brute_force_edt_sq(8, occupied));
  Eigen::Vector3i l;
  for (l.x() = 0; l.x() < 8; ++l.x())
    for (l.y() = 0; l.y() < 8; ++l.y())
      for (l.z() = 0; l.z() < 8; ++l.z()) {
        const double d = field.voxel_distance(buf.offset() + l);
        CHECK(d <= 0.4 + 1e-12);
        const double raw =
            0.25 * std::sqrt(double(field.squared_cells(buf.offset() + l)));
        CHECK(d == doctest::Approx(std::min(raw, 0.4)));
      }
}

TEST_CASE("the threshold option separates occupied from free") {
  OccupancyBuffer buf(3, 0.25, Eigen::Vector3d::Zero());
  buf.set_log_odds(buf.offset() + Eigen::Vector3i(2, 2, 2), 0.8);
  buf.set_log_odds(buf.offset() + Eigen::Vector3i(5, 5, 5), 0.3);
  DistanceFieldOptions opt;
  opt.occupied_threshold = 0.5;
  DistanceField field(opt);
  field.update(buf);
  CHECK(field.squared_cells(buf.offset() + Eigen::Vector3i(2, 2, 2)) == 0);
  CHECK(field.squared_cells(buf.offset() + Eigen::Vector3i(5, 5, 5)) > 0);
}

TEST_CASE("unknown space can be treated as an obstacle") {
  // Observe free space down one axis; everything else stays at the prior.
  OccupancyBuffer buf(4, 1.0, Eigen::Vector3d(8.0, 8.0, 8.0));
  REQUIRE(buf.offset() == Eigen::Vector3i::Zero());
  const std::vector<Eigen::Vector3d> cloud{Eigen::Vector3d(14.5, 8.5, 8.5)};
  buf.insert_point_cloud(Eigen::Vector3d(8.5, 8.5, 8.5), cloud);

  DistanceFieldOptions opt;
  opt.treat_unknown_as_occupied = true;
  DistanceField field(opt);
  field.update(buf);
  // An unknown voxel is an obstacle...
  CHECK(field.squared_cells(Eigen::Vector3i(0, 0, 0)) == 0);
  // ...the observed-free corridor is not, but the hit endpoint is.
  CHECK(field.squared_cells(Eigen::Vector3i(10, 8, 8)) == 1);
  CHECK(field.squared_cells(Eigen::Vector3i(14, 8, 8)) == 0);

  DistanceField lax;
  lax.update(buf);
  CHECK(lax.squared_cells(Eigen::Vector3i(0, 0, 0)) > 0);
}
