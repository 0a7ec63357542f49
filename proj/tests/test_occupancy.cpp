#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "replan/occupancy_buffer.hpp"
#include "replan/raycast.hpp"

using replan::OccupancyBuffer;
using replan::OccupancyParams;

namespace {

// 16^3 volume at 1 m resolution covering indices [0,16)^3, sensor in the
// middle voxel.
OccupancyBuffer middle_buffer(const OccupancyParams& params = {}) {
  return OccupancyBuffer(4, 1.0, Eigen::Vector3d(8.0, 8.0, 8.0), params);
}
const Eigen::Vector3d kOrigin(8.5, 8.5, 8.5);

}  // namespace

TEST_CASE("log-odds conversions match the defining formula") {
  const OccupancyParams p;
  CHECK(p.hit_log_odds() == doctest::Approx(std::log(0.7 / 0.3)));
  CHECK(p.miss_log_odds() == doctest::Approx(std::log(0.4 / 0.6)));
  CHECK(p.min_log_odds() == doctest::Approx(std::log(0.12 / 0.88)));
  CHECK(p.max_log_odds() == doctest::Approx(std::log(0.97 / 0.03)));
  CHECK(p.hit_log_odds() > 0.0);
  CHECK(p.miss_log_odds() < 0.0);

  OccupancyParams bad = p;
  bad.p_hit = 0.5;
  CHECK_THROWS_AS(OccupancyBuffer(3, 1.0, Eigen::Vector3d::Zero(), bad),
                  std::invalid_argument);
  bad = p;
  bad.p_miss = 0.6;
  CHECK_THROWS_AS(OccupancyBuffer(3, 1.0, Eigen::Vector3d::Zero(), bad),
                  std::invalid_argument);
}

TEST_CASE("a single return marks the endpoint hit and the ray free") {
  OccupancyBuffer buf = middle_buffer();
  REQUIRE(buf.offset() == Eigen::Vector3i::Zero());
  const float hit = static_cast<float>(buf.params().hit_log_odds());
  const float miss = static_cast<float>(buf.params().miss_log_odds());

  // Return 5 voxels down the +x axis.
  const std::vector<Eigen::Vector3d> cloud{Eigen::Vector3d(13.5, 8.5, 8.5)};
  buf.insert_point_cloud(kOrigin, cloud);

  CHECK(buf.log_odds(Eigen::Vector3i(13, 8, 8)) == hit);
  for (int x = 9; x <= 12; ++x)
    CHECK(buf.log_odds(Eigen::Vector3i(x, 8, 8)) == miss);
  // The sensor's own voxel and everything else stay at the prior.
  CHECK(buf.log_odds(Eigen::Vector3i(8, 8, 8)) == 0.0f);
  int touched = 0;
  Eigen::Vector3i idx;
  for (idx.x() = 0; idx.x() < 16; ++idx.x())
    for (idx.y() = 0; idx.y() < 16; ++idx.y())
      for (idx.z() = 0; idx.z() < 16; ++idx.z())
        if (buf.log_odds(idx) != 0.0f) ++touched;
  CHECK(touched == 5);

  CHECK(buf.last_insert_stats().raycasts == 1);
  CHECK(buf.last_insert_stats().volume_passes == 1);
  CHECK(buf.last_insert_stats().occupied_marks == 1);
  CHECK(buf.last_insert_stats().free_marks == 4);
  CHECK(buf.flags_clear());
}

TEST_CASE("returns outside the volume clear up to the boundary, no hit") {
  OccupancyBuffer buf = middle_buffer();
  const float miss = static_cast<float>(buf.params().miss_log_odds());

  // Endpoint past the +x face: voxel (16,8,8) is outside [0,16)^3.
  const std::vector<Eigen::Vector3d> cloud{Eigen::Vector3d(16.5, 8.5, 8.5)};
  buf.insert_point_cloud(kOrigin, cloud);

  // The clipped boundary voxel and the voxels between it and the sensor are
  // free; nothing is occupied anywhere.
  for (int x = 9; x <= 15; ++x)
    CHECK(buf.log_odds(Eigen::Vector3i(x, 8, 8)) == miss);
  Eigen::Vector3i idx;
  for (idx.x() = 0; idx.x() < 16; ++idx.x())
    for (idx.y() = 0; idx.y() < 16; ++idx.y())
      for (idx.z() = 0; idx.z() < 16; ++idx.z())
        CHECK(buf.log_odds(idx) <= 0.0f);
  CHECK(buf.last_insert_stats().occupied_marks == 0);
}

TEST_CASE("occupied endpoints win over free rays within a batch") {
  OccupancyBuffer buf = middle_buffer();
  const float hit = static_cast<float>(buf.params().hit_log_odds());
  const float miss = static_cast<float>(buf.params().miss_log_odds());

  // One return at (11,8,8), another passing through it to (13,8,8).
  const std::vector<Eigen::Vector3d> cloud{
      Eigen::Vector3d(11.5, 8.5, 8.5), Eigen::Vector3d(13.5, 8.5, 8.5)};
  buf.insert_point_cloud(kOrigin, cloud);

  CHECK(buf.log_odds(Eigen::Vector3i(11, 8, 8)) == hit);
  CHECK(buf.log_odds(Eigen::Vector3i(13, 8, 8)) == hit);
  CHECK(buf.log_odds(Eigen::Vector3i(12, 8, 8)) == miss);
  CHECK(buf.log_odds(Eigen::Vector3i(9, 8, 8)) == miss);
  // Order independence: swapped batch gives the same grid.
  OccupancyBuffer buf2 = middle_buffer();
  const std::vector<Eigen::Vector3d> swapped{cloud[1], cloud[0]};
  buf2.insert_point_cloud(kOrigin, swapped);
  CHECK(buf2.grid().cells() == buf.grid().cells());
  // Each point triggered at most one raycast.
  CHECK(buf.last_insert_stats().raycasts <= 2);
  CHECK(buf.last_insert_stats().volume_passes == 1);
}

TEST_CASE("duplicate endpoints collapse to one mark and one update") {
  OccupancyBuffer buf = middle_buffer();
  const float hit = static_cast<float>(buf.params().hit_log_odds());
  const std::vector<Eigen::Vector3d> cloud(
      7, Eigen::Vector3d(12.5, 9.5, 8.5));
  buf.insert_point_cloud(kOrigin, cloud);
  // One batch applies the hit once, regardless of multiplicity.
  CHECK(buf.log_odds(Eigen::Vector3i(12, 9, 8)) == hit);
  CHECK(buf.last_insert_stats().raycasts == 1);
}

TEST_CASE("log-odds saturate at the clamps") {
  OccupancyBuffer buf = middle_buffer();
  const float lo_max = static_cast<float>(buf.params().max_log_odds());
  const float lo_min = static_cast<float>(buf.params().min_log_odds());
  const std::vector<Eigen::Vector3d> ret{Eigen::Vector3d(12.5, 8.5, 8.5)};
  for (int k = 0; k < 20; ++k) buf.insert_point_cloud(kOrigin, ret);
  CHECK(buf.log_odds(Eigen::Vector3i(12, 8, 8)) == lo_max);
  CHECK(buf.log_odds(Eigen::Vector3i(10, 8, 8)) == lo_min);
  CHECK(buf.is_occupied(Eigen::Vector3i(12, 8, 8)));
  CHECK(!buf.is_occupied(Eigen::Vector3i(10, 8, 8)));
}

TEST_CASE("repeated hits confirm occupancy, misses erode it") {
  OccupancyBuffer buf = middle_buffer();
  const std::vector<Eigen::Vector3d> hit_at{Eigen::Vector3d(12.5, 8.5, 8.5)};
  for (int k = 0; k < 3; ++k) buf.insert_point_cloud(kOrigin, hit_at);
  CHECK(buf.is_occupied(Eigen::Vector3i(12, 8, 8)));

  // One hit followed by pass-through misses is no longer occupied.
  OccupancyBuffer buf2 = middle_buffer();
  buf2.insert_point_cloud(kOrigin, hit_at);
  CHECK(buf2.is_occupied(Eigen::Vector3i(12, 8, 8)));
  const std::vector<Eigen::Vector3d> beyond{Eigen::Vector3d(14.5, 8.5, 8.5)};
  for (int k = 0; k < 3; ++k) buf2.insert_point_cloud(kOrigin, beyond);
  CHECK(!buf2.is_occupied(Eigen::Vector3i(12, 8, 8)));
}

TEST_CASE("occupancy threshold is strict and overridable") {
  OccupancyBuffer buf = middle_buffer();
  const Eigen::Vector3i idx(5, 5, 5);
  buf.set_log_odds(idx, 0.0);
  CHECK(!buf.is_occupied(idx));  // prior/threshold is not occupied
  buf.set_log_odds(idx, 1e-6);
  CHECK(buf.is_occupied(idx));
  CHECK(!buf.is_occupied(idx, 0.5));
  buf.set_log_odds(idx, 0.7);
  CHECK(buf.is_occupied(idx, 0.5));
}

TEST_CASE("sensor origin outside the volume is a domain error") {
  OccupancyBuffer buf = middle_buffer();
  const std::vector<Eigen::Vector3d> cloud{Eigen::Vector3d(8.5, 8.5, 8.5)};
  CHECK_THROWS_AS(
      buf.insert_point_cloud(Eigen::Vector3d(-1.0, 8.5, 8.5), cloud),
      std::domain_error);
  CHECK(buf.flags_clear());
}

TEST_CASE("non-finite returns are skipped") {
  OccupancyBuffer buf = middle_buffer();
  const double nan = std::nan("");
  const std::vector<Eigen::Vector3d> cloud{
      Eigen::Vector3d(nan, nan, nan), Eigen::Vector3d(12.5, 8.5, 8.5)};
  buf.insert_point_cloud(kOrigin, cloud);
  CHECK(buf.is_occupied(Eigen::Vector3i(12, 8, 8)));
  CHECK(buf.last_insert_stats().raycasts == 1);
  CHECK(buf.flags_clear());
}

TEST_CASE("member raycast validates the volume") {
  OccupancyBuffer buf = middle_buffer();
  const Eigen::Vector3i a(1, 2, 3), b(10, 12, 3);
  CHECK(buf.raycast_indices(a, b) == replan::raycast_indices(a, b));
  CHECK_THROWS_AS(buf.raycast_indices(Eigen::Vector3i(-1, 0, 0), b),
                  std::domain_error);
  CHECK_THROWS_AS(buf.raycast_indices(a, Eigen::Vector3i(0, 16, 0)),
                  std::domain_error);
}

TEST_CASE("cells leaving the volume forget their state") {
  OccupancyBuffer buf = middle_buffer();
  const std::vector<Eigen::Vector3d> cloud{Eigen::Vector3d(12.5, 8.5, 8.5)};
  buf.insert_point_cloud(kOrigin, cloud);
  const Eigen::Vector3i idx(12, 8, 8);
  REQUIRE(buf.is_occupied(idx));
  // Slide the window far enough that (12,8,8) leaves, then bring it back.
  buf.move_volume(Eigen::Vector3d(40.0, 8.0, 8.0));
  CHECK(!buf.inside_volume(idx));
  buf.move_volume(Eigen::Vector3d(8.0, 8.0, 8.0));
  REQUIRE(buf.inside_volume(idx));
  CHECK(buf.log_odds(idx) == 0.0f);
  CHECK(!buf.is_occupied(idx));
}
