#include "replan/distance_field.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace replan {

namespace {

// Large enough to dominate any in-volume squared distance, small enough that
// all envelope arithmetic stays exactly representable in double.
constexpr std::int64_t kInf = std::int64_t{1} << 40;

// 1D squared-distance transform: d[q] = min_i (q - i)^2 + f[i], via the
// lower envelope of the parabolas rooted at each i. Integer inputs keep the
// intersection test exact (all intermediate values are far below 2^53).
void envelope_pass(std::vector<std::int64_t>& f, std::vector<std::int64_t>& d,
                   std::vector<int>& v, std::vector<double>& z) {
  const int n = static_cast<int>(f.size());
  int k = 0;
  v[0] = 0;
  z[0] = -std::numeric_limits<double>::infinity();
  z[1] = std::numeric_limits<double>::infinity();
  auto intersect = [&](int q, int p) {
    return static_cast<double>((f[q] + std::int64_t{q} * q) -
                               (f[p] + std::int64_t{p} * p)) /
           (2.0 * (q - p));
  };
  for (int q = 1; q < n; ++q) {
    double s = intersect(q, v[k]);
    while (s <= z[k]) {
      --k;
      s = intersect(q, v[k]);
    }
    ++k;
    v[k] = q;
    z[k] = s;
    z[k + 1] = std::numeric_limits<double>::infinity();
  }
  k = 0;
  for (int q = 0; q < n; ++q) {
    while (z[k + 1] < q) ++k;
    const std::int64_t dq = q - v[k];
    d[q] = dq * dq + f[v[k]];
  }
}

}  // namespace

void DistanceField::update(const OccupancyBuffer& occupancy) {
  side_ = occupancy.side();
  resolution_ = occupancy.resolution();
  offset_ = occupancy.offset();
  far_ = side_ * resolution_;
  if (options_.truncation > 0.0) far_ = std::min(far_, options_.truncation);

  const size_t count = occupancy.grid().cell_count();
  squared_.assign(count, kInf);
  meters_.resize(count);

  // Unwrap the ring storage (addresses are index mod N) into local x-major
  // order so every later pass walks contiguous spatial lines.
  const int mask = side_ - 1;
  std::vector<size_t> wrap_x(side_), wrap_y(side_), wrap_z(side_);
  for (int i = 0; i < side_; ++i) {
    const Eigen::Vector3i idx = offset_ + Eigen::Vector3i(i, i, i);
    wrap_x[i] = static_cast<size_t>(static_cast<std::int64_t>(idx.x()) & mask) *
                side_ * side_;
    wrap_y[i] =
        static_cast<size_t>(static_cast<std::int64_t>(idx.y()) & mask) * side_;
    wrap_z[i] = static_cast<size_t>(static_cast<std::int64_t>(idx.z()) & mask);
  }

  const float prior = static_cast<float>(occupancy.params().prior_log_odds);
  size_t occupied = 0;
  size_t local = 0;
  for (int x = 0; x < side_; ++x)
    for (int y = 0; y < side_; ++y)
      for (int z = 0; z < side_; ++z, ++local) {
        const float lo =
            occupancy.grid().at_address(wrap_x[x] + wrap_y[y] + wrap_z[z]);
        const bool occ = lo > options_.occupied_threshold ||
                         (options_.treat_unknown_as_occupied && lo == prior);
        if (occ) {
          squared_[local] = 0;
          ++occupied;
        }
      }
  if (occupied == 0) {
    const std::int64_t sentinel_sq =
        static_cast<std::int64_t>(side_) * side_;
    squared_.assign(count, sentinel_sq);
    std::fill(meters_.begin(), meters_.end(), far_);
    return;
  }

  // squared_ is in local x-major order, so straight strides walk the volume
  // in spatial order: N^2 along x, N along y, 1 along z.
  const int n = side_;
  std::vector<std::int64_t> line(n), out(n);
  std::vector<int> v(n);
  std::vector<double> z(n + 1);
  const size_t sx = static_cast<size_t>(n) * n;
  const size_t sy = n;

  auto run_axis = [&](size_t stride, size_t stride_a, size_t stride_b) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const size_t base = a * stride_a + b * stride_b;
        for (int q = 0; q < n; ++q) line[q] = squared_[base + q * stride];
        envelope_pass(line, out, v, z);
        for (int q = 0; q < n; ++q) squared_[base + q * stride] = out[q];
      }
  };
  run_axis(/*z*/ 1, sx, sy);
  run_axis(/*y*/ sy, sx, 1);
  run_axis(/*x*/ sx, sy, 1);

  for (size_t a = 0; a < count; ++a) {
    double d = resolution_ * std::sqrt(static_cast<double>(squared_[a]));
    if (options_.truncation > 0.0) d = std::min(d, options_.truncation);
    meters_[a] = d;
  }
}

double DistanceField::voxel_distance(const Eigen::Vector3i& idx) const {
  if (!has_data()) throw std::domain_error("DistanceField: empty field");
  const Eigen::Vector3i local = idx - offset_;
  for (int axis = 0; axis < 3; ++axis)
    if (local(axis) < 0 || local(axis) >= side_) return far_;
  return meters_[local_address(local.x(), local.y(), local.z())];
}

std::int64_t DistanceField::squared_cells(const Eigen::Vector3i& idx) const {
  if (!has_data()) throw std::domain_error("DistanceField: empty field");
  const Eigen::Vector3i local = idx - offset_;
  for (int axis = 0; axis < 3; ++axis)
    if (local(axis) < 0 || local(axis) >= side_)
      throw std::domain_error("squared_cells: index outside volume");
  return squared_[local_address(local.x(), local.y(), local.z())];
}

DistanceField::Sample DistanceField::sample(const Eigen::Vector3d& point) const {
  if (!has_data()) throw std::domain_error("DistanceField: empty field");
  Sample result;
  // Coordinates on the voxel-center lattice: center of voxel i sits at
  // (i + 0.5) * resolution.
  Eigen::Vector3d g;
  Eigen::Vector3i base;
  Eigen::Vector3d frac;
  for (int axis = 0; axis < 3; ++axis) {
    g(axis) = point(axis) / resolution_ - 0.5;
    const double fl = std::floor(g(axis));
    base(axis) = static_cast<int>(fl);
    frac(axis) = g(axis) - fl;
    const int local = base(axis) - offset_(axis);
    if (local < 0 || local + 1 >= side_) {
      result.distance = far_;
      return result;  // gradient stays zero
    }
  }
  const int ax = base.x() - offset_.x();
  const int ay = base.y() - offset_.y();
  const int az = base.z() - offset_.z();
  const double d000 = meters_[local_address(ax, ay, az)];
  const double d001 = meters_[local_address(ax, ay, az + 1)];
  const double d010 = meters_[local_address(ax, ay + 1, az)];
  const double d011 = meters_[local_address(ax, ay + 1, az + 1)];
  const double d100 = meters_[local_address(ax + 1, ay, az)];
  const double d101 = meters_[local_address(ax + 1, ay, az + 1)];
  const double d110 = meters_[local_address(ax + 1, ay + 1, az)];
  const double d111 = meters_[local_address(ax + 1, ay + 1, az + 1)];

  const double fx = frac.x(), fy = frac.y(), fz = frac.z();
  const double c00 = d000 + fz * (d001 - d000);
  const double c01 = d010 + fz * (d011 - d010);
  const double c10 = d100 + fz * (d101 - d100);
  const double c11 = d110 + fz * (d111 - d110);
  const double c0 = c00 + fy * (c01 - c00);
  const double c1 = c10 + fy * (c11 - c10);
  result.distance = c0 + fx * (c1 - c0);

  const double inv_r = 1.0 / resolution_;
  result.gradient.x() = (c1 - c0) * inv_r;
  result.gradient.y() =
      ((c01 - c00) + fx * ((c11 - c10) - (c01 - c00))) * inv_r;
  result.gradient.z() = ((1.0 - fx) * ((1.0 - fy) * (d001 - d000) +
                                       fy * (d011 - d010)) +
                         fx * ((1.0 - fy) * (d101 - d100) +
                               fy * (d111 - d110))) *
                        inv_r;
  return result;
}

}  // namespace replan
