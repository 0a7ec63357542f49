#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace replan {

/// Robocentric 3D circular buffer: a 2^p-sided voxel grid over an unbounded
/// integer index space. The volume covers indices [offset, offset + N) on each
/// axis; addresses wrap modulo N, so translating the volume only changes the
/// offset and resets the cells that newly entered.
///
/// Single writer; concurrent reads are safe between writes.
template <typename Cell>
class RingBuffer3D {
 public:
  RingBuffer3D(int size_exponent, double resolution, Cell fill,
               const Eigen::Vector3d& center = Eigen::Vector3d::Zero())
      : p_(size_exponent),
        n_(1 << size_exponent),
        mask_(n_ - 1),
        resolution_(resolution),
        fill_(fill),
        center_(center) {
    if (size_exponent < 1 || size_exponent > 10)
      throw std::invalid_argument("RingBuffer3D: size exponent out of range");
    if (!(resolution > 0.0))
      throw std::invalid_argument("RingBuffer3D: resolution must be > 0");
    cells_.assign(static_cast<size_t>(n_) * n_ * n_, fill_);
    offset_ = point_to_index(center_, resolution_).array() - n_ / 2;
  }

  int size_exponent() const { return p_; }
  int side() const { return n_; }
  double resolution() const { return resolution_; }
  const Eigen::Vector3i& offset() const { return offset_; }
  const Eigen::Vector3d& center() const { return center_; }
  size_t cell_count() const { return cells_.size(); }

  static Eigen::Vector3i point_to_index(const Eigen::Vector3d& point,
                                        double resolution) {
    if (!point.allFinite())
      throw std::invalid_argument("point_to_index: non-finite point");
    return Eigen::Vector3i(
        static_cast<int>(std::floor(point.x() / resolution)),
        static_cast<int>(std::floor(point.y() / resolution)),
        static_cast<int>(std::floor(point.z() / resolution)));
  }

  Eigen::Vector3i point_to_index(const Eigen::Vector3d& point) const {
    return point_to_index(point, resolution_);
  }

  Eigen::Vector3d index_to_center(const Eigen::Vector3i& idx) const {
    return (idx.cast<double>().array() + 0.5) * resolution_;
  }

  /// Bitwise form of 0 <= x - o < N on every component.
  bool inside_volume(const Eigen::Vector3i& idx) const {
    const std::int64_t hi = ~static_cast<std::int64_t>(mask_);
    return !(((static_cast<std::int64_t>(idx.x()) - offset_.x()) & hi) |
             ((static_cast<std::int64_t>(idx.y()) - offset_.y()) & hi) |
             ((static_cast<std::int64_t>(idx.z()) - offset_.z()) & hi));
  }

  /// Bitwise form of x mod N per component, flattened x-major: a bijection
  /// from any N-sided window onto [0, N^3). Depends only on the index, so a
  /// world index keeps its storage slot while the volume moves.
  size_t address(const Eigen::Vector3i& idx) const {
    const size_t ax =
        static_cast<size_t>(static_cast<std::int64_t>(idx.x()) & mask_);
    const size_t ay =
        static_cast<size_t>(static_cast<std::int64_t>(idx.y()) & mask_);
    const size_t az =
        static_cast<size_t>(static_cast<std::int64_t>(idx.z()) & mask_);
    return (ax * n_ + ay) * n_ + az;
  }

  Cell& at(const Eigen::Vector3i& idx) { return cells_[address(idx)]; }
  const Cell& at(const Eigen::Vector3i& idx) const {
    return cells_[address(idx)];
  }
  Cell& at_address(size_t a) { return cells_[a]; }
  const Cell& at_address(size_t a) const { return cells_[a]; }

  const std::vector<Cell>& cells() const { return cells_; }

  void fill(const Cell& value) { cells_.assign(cells_.size(), value); }

  /// Re-centers the volume on new_center. The offset changes only when the
  /// requested center has drifted into a different voxel; cells that newly
  /// entered the volume are reset to the fill value, cells that stayed keep
  /// both their world index and their value.
  void move_volume(const Eigen::Vector3d& new_center) {
    center_ = new_center;
    const Eigen::Vector3i new_offset =
        point_to_index(new_center, resolution_).array() - n_ / 2;
    const Eigen::Vector3i delta = new_offset - offset_;
    if (delta == Eigen::Vector3i::Zero()) return;
    if (std::abs(delta.x()) >= n_ || std::abs(delta.y()) >= n_ ||
        std::abs(delta.z()) >= n_) {
      offset_ = new_offset;
      fill(fill_);
      return;
    }
    offset_ = new_offset;
    for (int axis = 0; axis < 3; ++axis) {
      const int d = delta(axis);
      if (d == 0) continue;
      // Entering slab along this axis, expressed in world indices of the new
      // volume. Overlap with slabs of other axes clears twice, harmlessly.
      const int lo = d > 0 ? offset_(axis) + n_ - d : offset_(axis);
      const int hi = d > 0 ? offset_(axis) + n_ : offset_(axis) - d;
      clear_slab(axis, lo, hi);
    }
  }

 private:
  void clear_slab(int axis, int lo, int hi) {
    const int a1 = (axis + 1) % 3, a2 = (axis + 2) % 3;
    Eigen::Vector3i idx;
    for (int v = lo; v < hi; ++v) {
      idx(axis) = v;
      for (int i = 0; i < n_; ++i) {
        idx(a1) = offset_(a1) + i;
        for (int j = 0; j < n_; ++j) {
          idx(a2) = offset_(a2) + j;
          cells_[address(idx)] = fill_;
        }
      }
    }
  }

  int p_;
  int n_;
  int mask_;
  double resolution_;
  Cell fill_;
  Eigen::Vector3d center_;
  Eigen::Vector3i offset_;
  std::vector<Cell> cells_;
};

}  // namespace replan
